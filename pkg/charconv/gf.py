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
"""
Exact arithmetic in GF(p^e), p an odd prime.

Elements are identified with their canonical integer encoding
``n = sum(c_i * p**i)`` where ``c_0 .. c_{e-1}`` are the coefficients of
the element as a polynomial modulo the field's modulus. The same
encodings are used inside numpy arrays by :mod:`.matfq` and
:mod:`.polymat`; :class:`FieldSpec` provides the scalar and array
operations on them.
"""

import itertools
import logging

import numpy as np

from . import utils
from .config import DEFAULT
from .exceptions import (
    ParameterException,
    UnsupportedOrderException,
    FieldMismatchException,
    FieldDivisionException,
    MalformedFileException)

LOG = logging.getLogger('charconv')

# Extension fields up to this size use precomputed add/mul tables.
TABLE_LIMIT = 1024


def _poly_mod_p(poly, modulus, p):
    """Remainder of ``poly`` by a monic ``modulus`` over GF(p)."""
    poly = list(poly)
    deg = len(modulus) - 1
    for top in range(len(poly) - 1, deg - 1, -1):
        coeff = poly[top] % p
        if coeff:
            for i in range(deg + 1):
                poly[top - deg + i] = (poly[top - deg + i]
                                       - coeff * modulus[i]) % p
    poly = [c % p for c in poly[:deg]]
    return poly + [0] * (deg - len(poly))


def _poly_mulmod_p(left, right, modulus, p):
    prod = [0] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        if a:
            for j, b in enumerate(right):
                prod[i + j] += a * b
    return _poly_mod_p(prod, modulus, p)


def _trim(poly):
    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_gcd_p(left, right, p):
    left, right = _trim(c % p for c in left), _trim(c % p for c in right)
    while right:
        inv = pow(right[-1], p - 2, p)
        monic = [(c * inv) % p for c in right]
        rem = list(left)
        while len(rem) >= len(monic):
            coeff = rem[-1]
            shift = len(rem) - len(monic)
            for i, c in enumerate(monic):
                rem[shift + i] = (rem[shift + i] - coeff * c) % p
            rem = _trim(rem)
            if not rem:
                break
        left, right = monic, rem
    return left


def is_irreducible(modulus, p):
    """Test a monic polynomial over GF(p) for irreducibility.

    Uses the factor-free check ``gcd(f, x^(p^i) - x) = 1`` for
    ``1 <= i <= deg(f) / 2``.

    :Args:
        - modulus (tuple): Coefficients, constant term first, monic.
        - p (int): The prime characteristic.

    :Returns:
        - ``True`` if irreducible over GF(p).
    """
    deg = len(modulus) - 1
    if deg < 1 or modulus[-1] % p != 1:
        return False
    if deg == 1:
        return True
    x_power = _poly_mod_p([0, 1], modulus, p)
    for _ in range(deg // 2):
        # x_power <- x_power ** p mod f
        result = [1] + [0] * (deg - 1)
        base, exp = x_power, p
        while exp:
            if exp & 1:
                result = _poly_mulmod_p(result, base, modulus, p)
            base = _poly_mulmod_p(base, base, modulus, p)
            exp >>= 1
        x_power = result
        diff = list(x_power)
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd_p(list(modulus), diff, p)) > 1:
            return False
    return True


def canonical_modulus(p, e):
    """The lexicographically smallest monic irreducible of degree ``e``
    over GF(p), coefficients compared from the constant term upwards.

    :Returns:
        - The modulus coefficients, constant term first (tuple).
    """
    for lower in itertools.product(range(p), repeat=e):
        candidate = tuple(lower) + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise ParameterException(
        "No irreducible polynomial of degree {0} over GF({1})".format(e, p))


class FieldSpec(object):
    """
    The finite field GF(p^e) with a fixed modulus.

    :Attributes:
        - p (int): odd prime characteristic.
        - e (int): extension degree.
        - modulus (tuple): monic modulus, constant term first.
        - q (int): the cardinality ``p ** e``.
    """

    def __init__(self, p, e, modulus):
        """
        :Args:
            - p (int): An odd prime.
            - e (int): Extension degree >= 1.
            - modulus (tuple): A monic irreducible of degree ``e``.

        :Raises:
            - :exc:`.ParameterException` if any argument is invalid.
        """
        self.p = int(p)
        self.e = int(e)
        self.modulus = tuple(int(c) for c in modulus)
        self.q = self.p ** self.e

        if not utils.is_prime(self.p) or self.p < 3:
            raise ParameterException(
                "Characteristic must be an odd prime, got {0}".format(p))
        if self.e < 1:
            raise ParameterException(
                "Extension degree must be >= 1, got {0}".format(e))
        if len(self.modulus) != self.e + 1 or self.modulus[-1] != 1:
            raise ParameterException(
                "Modulus {0} is not monic of degree {1}".format(
                    modulus, e))
        if any(c < 0 or c >= self.p for c in self.modulus):
            raise ParameterException(
                "Modulus coefficients must lie in [0, {0})".format(self.p))
        if self.e > 1 and not is_irreducible(self.modulus, self.p):
            raise ParameterException(
                "Modulus {0} is reducible over GF({1})".format(
                    modulus, self.p))

        self._weights = self.p ** np.arange(self.e, dtype=np.int64)
        self._add = None
        self._mul = None
        self._neg = None

        if self.e > 1 and self.q <= TABLE_LIMIT:
            self._build_tables()

    def _build_tables(self):
        elements = np.arange(self.q, dtype=np.int64)
        dig = self._digits(elements)
        self._add = self._undigits(
            (dig[:, None, :] + dig[None, :, :]) % self.p)
        self._neg = self._undigits((-dig) % self.p)
        self._mul = self._mul_digits(dig[:, None, :], dig[None, :, :])
        LOG.debug("Built arithmetic tables for GF({0})".format(self.q))

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and
                (self.p, self.e, self.modulus) ==
                (other.p, other.e, other.modulus))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return "FieldSpec({0})".format(self)

    def __str__(self):
        """``p^e:modulus-coeffs``, e.g. ``3^2:2,2,1``."""
        return "{0}^{1}:{2}".format(
            self.p, self.e, utils.format_int_list(self.modulus))

    def __getstate__(self):
        return {'p': self.p, 'e': self.e, 'modulus': self.modulus}

    def __setstate__(self, state):
        self.__init__(state['p'], state['e'], state['modulus'])

    @classmethod
    def parse(cls, text):
        """Inverse of ``str(spec)``.

        :Raises:
            - :exc:`.MalformedFileException` if the text does not parse.
        """
        try:
            head, coeffs = text.strip().split(":")
            p, e = head.split("^")
            return cls(int(p), int(e), utils.parse_int_list(coeffs))
        except ValueError:
            raise MalformedFileException(
                "Cannot parse field spec {0!r}".format(text))

    # Encodings

    def _digits(self, values):
        values = np.asarray(values, dtype=np.int64)
        return (values[..., None] // self._weights) % self.p

    def _undigits(self, dig):
        return (dig * self._weights).sum(axis=-1)

    def _mul_digits(self, left, right):
        """Schoolbook product of digit arrays reduced by the modulus."""
        shape = np.broadcast(left[..., 0], right[..., 0]).shape
        prod = np.zeros(shape + (2 * self.e - 1,), dtype=np.int64)
        for i in range(self.e):
            for j in range(self.e):
                prod[..., i + j] += left[..., i] * right[..., j]
        for top in range(2 * self.e - 2, self.e - 1, -1):
            coeff = prod[..., top] % self.p
            for i in range(self.e):
                prod[..., top - self.e + i] -= coeff * self.modulus[i]
        return self._undigits(prod[..., :self.e] % self.p)

    def coeffs(self, value):
        """The coefficient tuple of an encoded element."""
        return utils.digits(int(value), self.p, self.e)

    def encode(self, coeffs):
        """The canonical integer of a coefficient sequence."""
        coeffs = tuple(coeffs)
        if len(coeffs) != self.e or any(c < 0 or c >= self.p for c in coeffs):
            raise ParameterException(
                "Invalid coefficients {0} for GF({1})".format(coeffs, self.q))
        return utils.undigits(coeffs, self.p)

    # Arithmetic on encodings. Every operation accepts python ints or
    # numpy integer arrays; scalars in give python ints out.

    def add(self, left, right):
        if self.e == 1:
            return _out((np.asarray(left) + right) % self.p, left, right)
        if self._add is not None:
            return _out(self._add[left, right], left, right)
        return _out(self._undigits(
            (self._digits(left) + self._digits(right)) % self.p), left, right)

    def neg(self, value):
        if self.e == 1:
            return _out((-np.asarray(value)) % self.p, value)
        if self._neg is not None:
            return _out(self._neg[value], value)
        return _out(self._undigits((-self._digits(value)) % self.p), value)

    def sub(self, left, right):
        return self.add(left, self.neg(right))

    def mul(self, left, right):
        if self.e == 1:
            return _out((np.asarray(left, dtype=np.int64) * right) % self.p,
                        left, right)
        if self._mul is not None:
            return _out(self._mul[left, right], left, right)
        return _out(self._mul_digits(self._digits(left),
                                     self._digits(right)), left, right)

    def inv(self, value):
        """Multiplicative inverse of a nonzero scalar encoding.

        :Raises:
            - :exc:`.FieldDivisionException` for zero.
        """
        value = int(value)
        if value % self.q == 0:
            raise FieldDivisionException(
                "Inverse of zero in GF({0})".format(self.q))
        if self.e == 1:
            return pow(value, self.p - 2, self.p)
        return self.power(value, self.q - 2)

    def power(self, value, exponent):
        """``value ** exponent`` for a scalar encoding; negative exponents
        invert first."""
        value = int(value)
        exponent = int(exponent)
        if exponent < 0:
            value = self.inv(value)
            exponent = -exponent
        if self.e == 1:
            return pow(value, exponent, self.p)
        result, base = 1, value
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    def order(self, value):
        """Multiplicative order of a nonzero scalar encoding."""
        value = int(value)
        if value == 0:
            raise FieldDivisionException("Zero has no multiplicative order")
        order = self.q - 1
        for prime in utils.prime_factors(self.q - 1):
            while order % prime == 0 and self.power(value, order // prime) == 1:
                order //= prime
        return order

    def element(self, value):
        """Wrap an encoding as a :class:`FieldElement`."""
        return FieldElement(self, value)

    def elements(self):
        """All elements in encoding order."""
        return [FieldElement(self, n) for n in range(self.q)]

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def minus_one(self):
        return FieldElement(self, self.neg(1))


def _out(result, *inputs):
    """Return python ints for scalar inputs, arrays otherwise."""
    if all(np.ndim(value) == 0 for value in inputs):
        return int(result)
    return result


class FieldElement(object):
    """
    An immutable element of a :class:`FieldSpec`.

    :Attributes:
        - spec (:class:`FieldSpec`)
        - value (int): The canonical integer encoding in ``[0, q)``.
    """

    __slots__ = ('spec', 'value')

    def __init__(self, spec, value):
        value = int(value)
        if value < 0 or value >= spec.q:
            raise ParameterException(
                "Encoding {0} out of range for GF({1})".format(value, spec.q))
        object.__setattr__(self, 'spec', spec)
        object.__setattr__(self, 'value', value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __getstate__(self):
        return (self.spec, self.value)

    def __setstate__(self, state):
        object.__setattr__(self, 'spec', state[0])
        object.__setattr__(self, 'value', state[1])

    @property
    def coeffs(self):
        return self.spec.coeffs(self.value)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatchException(
                    "Operands from GF({0}) and GF({1})".format(
                        self.spec.q, other.spec.q))
            return other.value
        if isinstance(other, int):
            return _int_to_field(self.spec, other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, self.spec.add(self.value, other))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, self.spec.sub(self.value, other))

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, self.spec.sub(other, self.value))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, self.spec.mul(self.value, other))

    __rmul__ = __mul__

    def inv(self):
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec,
                            self.spec.mul(self.value, self.spec.inv(other)))

    def __pow__(self, exponent):
        return FieldElement(self.spec, self.spec.power(self.value, exponent))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.spec, self.value))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "FieldElement({0}, {1})".format(self.spec, self.value)

    def __str__(self):
        return str(self.value)


def _int_to_field(spec, value):
    """Image of a rational integer in the prime subfield."""
    return value % spec.p


def make_field(p, e=1, max_size=None):
    """Build GF(p^e) with the canonical modulus.

    :Args:
        - p (int): An odd prime.

    :Kwargs:
        - e (int): Extension degree, default 1.
        - max_size (int): Largest accepted ``q``; defaults to the
          ``field_size`` budget (2^20).

    :Returns:
        - A :class:`FieldSpec`.

    :Raises:
        - :exc:`.ParameterException` for an even or non-prime ``p``,
          ``e < 1`` or a field larger than ``max_size``.
    """
    p, e = int(p), int(e)
    if not utils.is_prime(p) or p < 3:
        raise ParameterException(
            "Characteristic must be an odd prime, got {0}".format(p))
    if e < 1:
        raise ParameterException(
            "Extension degree must be >= 1, got {0}".format(e))
    limit = max_size if max_size is not None else DEFAULT.field_size
    if p ** e > limit:
        raise ParameterException(
            "GF({0}^{1}) exceeds the field size guard {2}".format(p, e, limit))
    spec = FieldSpec(p, e, canonical_modulus(p, e))
    LOG.debug("Created field {0}".format(spec))
    return spec


def field_of_order(q, max_size=None):
    """:func:`make_field` for a prime power ``q``."""
    p, e = utils.prime_power(q)
    return make_field(p, e, max_size=max_size)


def root_of_unity(spec, l):
    """The canonical element of exact multiplicative order ``l``: the one
    with the smallest encoding.

    :Args:
        - spec (:class:`FieldSpec`)
        - l (int): The order, must divide ``q - 1``.

    :Returns:
        - A :class:`FieldElement` of order exactly ``l``.

    :Raises:
        - :exc:`.UnsupportedOrderException` if ``l`` does not divide
          ``q - 1``.
    """
    l = int(l)
    if l < 1 or (spec.q - 1) % l != 0:
        raise UnsupportedOrderException(
            "GF({0}) has no element of order {1}: {1} does not divide "
            "{2}".format(spec.q, l, spec.q - 1))
    for value in range(1, spec.q):
        if spec.power(value, l) == 1 and spec.order(value) == l:
            return FieldElement(spec, value)
    raise UnsupportedOrderException(
        "No element of order {0} in GF({1})".format(l, spec.q))
