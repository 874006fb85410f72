#-------------------------------------------------------------------------
# The Character Code Convolutional Toolkit
#
# Copyright (c) The charconv authors. All rights reserved.
#
# The MIT License (MIT)
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the ""Software""), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED *AS IS*, WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.
#
#--------------------------------------------------------------------------
"""charconv utility module: integer helpers and text codecs."""

import math

import logging
LOG = logging.getLogger('charconv')

from .exceptions import ParameterException, MalformedFileException


def binomial(top, bottom):
    """Binomial coefficient with the convention C(a, b) = 0 when
    ``a < b``, ``b < 0`` or ``a < 0``.

    :Args:
        - top (int)
        - bottom (int)

    :Returns:
        - The binomial coefficient (int).
    """
    if bottom < 0 or top < 0 or top < bottom:
        return 0
    return math.comb(top, bottom)


def is_prime(value):
    """Trial-division primality test.

    :Args:
        - value (int): The integer to test.

    :Returns:
        - ``True`` if ``value`` is prime, else ``False``.
    """
    if value < 2:
        return False
    if value % 2 == 0:
        return value == 2
    divisor = 3
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 2
    return True


def prime_factors(value):
    """The distinct prime factors of a positive integer, ascending."""
    factors = []
    divisor = 2
    while divisor * divisor <= value:
        if value % divisor == 0:
            factors.append(divisor)
            while value % divisor == 0:
                value //= divisor
        divisor += 1
    if value > 1:
        factors.append(value)
    return factors


def prime_power(q):
    """Split a prime power into ``(p, e)``.

    :Args:
        - q (int): A prime power.

    :Returns:
        - Tuple ``(p, e)`` with ``q == p ** e``.

    :Raises:
        - :exc:`.ParameterException` if ``q`` is not a prime power.
    """
    try:
        q = int(q)
    except (TypeError, ValueError):
        raise ParameterException("Field size must be an integer, "
                                 "got {0!r}".format(q))
    if q < 2:
        raise ParameterException("Field size {0} is not a prime "
                                 "power".format(q))
    factors = prime_factors(q)
    if len(factors) != 1:
        raise ParameterException("Field size {0} is not a prime "
                                 "power".format(q))
    p = factors[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


def digits(index, base, length):
    """The base-``base`` digits of ``index``, least significant first.

    :Args:
        - index (int): A non-negative integer below ``base ** length``.
        - base (int)
        - length (int): Number of digits returned.

    :Returns:
        - A tuple of ``length`` digits.
    """
    out = []
    for _ in range(length):
        index, digit = divmod(index, base)
        out.append(digit)
    return tuple(out)


def undigits(values, base):
    """Inverse of :func:`digits`."""
    total = 0
    for digit in reversed(tuple(values)):
        total = total * base + int(digit)
    return total


def decompose(r, l):
    """Write ``r = a(l - 1) + b`` with ``0 <= b <= l - 2``.

    :Returns:
        - Tuple ``(a, b)``.
    """
    return divmod(r, l - 1)


def parse_int_list(text, sep=","):
    """Parse a separated list of integers; an empty string is ``()``.

    :Raises:
        - :exc:`.MalformedFileException` if an item is not an integer.
    """
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(item) for item in text.split(sep))
    except ValueError:
        raise MalformedFileException(
            "Expected integers separated by '{0}', got {1!r}".format(
                sep, text))


def format_int_list(values, sep=","):
    """Inverse of :func:`parse_int_list`."""
    return sep.join(str(int(v)) for v in values)


def parse_cuts(text):
    """Parse a ``--cuts`` argument such as ``"3,2,1"``."""
    cuts = parse_int_list(text)
    if len(cuts) < 1:
        raise ParameterException("At least one weight cut is required")
    return cuts
