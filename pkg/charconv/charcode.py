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
Group character codes over Z_l^m.

The code ``C_q(r, m; l)`` is the right kernel of the character matrix
restricted to the defining set ``X = {x : ||x|| > r}``. The binary-group
codes ``C_q(r, m)`` are the ``l = 2`` case with ``xi = -1``.
"""

import collections
import logging

import numpy as np

from . import utils
from . import gf
from .config import DEFAULT
from .matfq import MatrixFq, kernel_basis, rank, take_rows, vstack
from .exceptions import ParameterException

LOG = logging.getLogger('charconv')


def s_m(m, r):
    """Binomial partial sum ``sum(C(m, i) for i in 0..r)``.

    :Raises:
        - :exc:`.ParameterException` unless ``0 <= r <= m``.
    """
    if r < 0 or r > m:
        raise ParameterException(
            "s_m needs 0 <= r <= m, got m={0}, r={1}".format(m, r))
    return sum(utils.binomial(m, i) for i in range(r + 1))


def l_weight_count(m, i, l):
    """Number of vectors in Z_l^m with coordinate sum ``i``.

    Evaluated with the alternating sum
    ``sum_j (-1)^j C(m, j) C(i - j*l + m - 1, m - 1)``.

    :Raises:
        - :exc:`.ParameterException` unless ``0 <= i <= m(l-1)``.
    """
    if l < 2 or m < 1:
        raise ParameterException(
            "Need l >= 2 and m >= 1, got l={0}, m={1}".format(l, m))
    if i < 0 or i > m * (l - 1):
        raise ParameterException(
            "Weight {0} out of range [0, {1}]".format(i, m * (l - 1)))
    total = 0
    for j in range(m + 1):
        total += ((-1) ** j * utils.binomial(m, j) *
                  utils.binomial(i - j * l + m - 1, m - 1))
    return total


def S_m(m, r, l):
    """Number of vectors in Z_l^m of weight at most ``r``.

    :Raises:
        - :exc:`.ParameterException` unless ``0 <= r <= m(l-1)``.
    """
    if r < 0 or r > m * (l - 1):
        raise ParameterException(
            "S_m needs 0 <= r <= m(l-1), got m={0}, r={1}, l={2}".format(
                m, r, l))
    return sum(l_weight_count(m, i, l) for i in range(r + 1))


def weight_band(m, l, low, high):
    """Vectors of Z_l^m with ``low < weight <= high``."""
    top = m * (l - 1)
    return sum(l_weight_count(m, i, l)
               for i in range(max(low + 1, 0), min(high, top) + 1))


class GroupPoint(collections.namedtuple('GroupPoint',
                                        ['l', 'index', 'coords'])):
    """An element of Z_l^m, identified by its index ``i`` whose l-adic
    digits (least significant first) are the coordinates."""

    __slots__ = ()

    @property
    def m(self):
        return len(self.coords)

    @property
    def weight(self):
        return sum(self.coords)


def enumerate_group(l, m, max_size=None):
    """All points of Z_l^m in index order.

    :Kwargs:
        - max_size (int): Largest accepted ``l^m``; defaults to the
          ``group_size`` budget.

    :Raises:
        - :exc:`.ParameterException` for ``l < 2``, ``m < 1`` or a group
          above the size guard.
    """
    if l < 2 or m < 1:
        raise ParameterException(
            "Need l >= 2 and m >= 1, got l={0}, m={1}".format(l, m))
    limit = max_size if max_size is not None else DEFAULT.group_size
    if l ** m > limit:
        raise ParameterException(
            "Group Z_{0}^{1} exceeds the size guard {2}".format(l, m, limit))
    return [GroupPoint(l, index, utils.digits(index, l, m))
            for index in range(l ** m)]


def character_value(spec, xi, index_point, arg_point):
    """``gamma_i(x) = xi^(i . x mod l)``.

    :Args:
        - spec (:class:`.FieldSpec`)
        - xi (:class:`.FieldElement`): Root of unity of order ``l``.
        - index_point (:class:`GroupPoint`): The character index ``i``.
        - arg_point (:class:`GroupPoint`): The argument ``x``.

    :Raises:
        - :exc:`.ParameterException` if the points or ``xi`` disagree on
          ``l`` or ``m``.
    """
    l = index_point.l
    if (arg_point.l != l or index_point.m != arg_point.m or
            spec.order(int(xi)) != l):
        raise ParameterException(
            "Character order mismatch: points in Z_{0}^{1} and Z_{2}^{3}, "
            "xi of order {4}".format(index_point.l, index_point.m,
                                     arg_point.l, arg_point.m,
                                     spec.order(int(xi))))
    exponent = sum(a * b for a, b in zip(index_point.coords,
                                         arg_point.coords)) % l
    return spec.element(spec.power(int(xi), exponent))


def _xi_powers(spec, xi, l):
    powers = [1]
    for _ in range(l - 1):
        powers.append(spec.mul(powers[-1], int(xi)))
    return np.array(powers, dtype=np.int64)


def character_table(spec, xi, rows, cols):
    """Matrix of ``gamma_j(x)`` for ``x`` in ``rows`` and ``j`` in ``cols``.

    :Returns:
        - A numpy encoding array of shape ``(len(rows), len(cols))``.
    """
    if not rows:
        return np.zeros((0, len(cols)), dtype=np.int64)
    l = cols[0].l
    row_coords = np.array([p.coords for p in rows], dtype=np.int64)
    col_coords = np.array([p.coords for p in cols], dtype=np.int64)
    exponents = row_coords.dot(col_coords.T) % l
    return _xi_powers(spec, xi, l)[exponents]


def designed_parameters(l, m, r):
    """``(n, k, d)`` of ``C_q(r, m; l)``.

    ``n = l^m``, ``k = S_m(r)`` and ``d = (l - b) l^(m-1-a)`` with
    ``r = a(l-1) + b``.
    """
    a, b = utils.decompose(r, l)
    return (l ** m, S_m(m, r, l), (l - b) * l ** (m - 1 - a))


def designed_dual_distance(l, r):
    """``(b + 2) l^a``, the designed distance of the dual of
    ``C_q(r, m; l)``; ``2^(r+1)`` for the binary group."""
    a, b = utils.decompose(r, l)
    return (b + 2) * l ** a


class CharCodeSpec(object):
    """
    A group character code ``C_q(r, m; l)``.

    :Attributes:
        - spec (:class:`.FieldSpec`)
        - l (int), m (int), r (int)
        - xi (:class:`.FieldElement`): The root of unity of order ``l``.
        - points (list): The group in index order.
        - row_points (list): Defining set points, in ``H`` row order.
        - H (:class:`.MatrixFq`): Parity-check matrix.
        - designed (tuple): ``(n, k, d)``.
    """

    def __init__(self, spec, l, m, r, xi, points):
        self.spec = spec
        self.l = l
        self.m = m
        self.r = r
        self.xi = xi
        self.points = points

        # Descending weight; ascending index within a weight class.
        defining = [p for p in points if p.weight > r]
        self.row_points = sorted(defining, key=lambda p: (-p.weight, p.index))
        self.row_weights = [p.weight for p in self.row_points]
        self.H = MatrixFq(spec, character_table(spec, xi, self.row_points,
                                                points), cols=len(points))
        self.designed = designed_parameters(l, m, r)
        self._G = None

    @property
    def n(self):
        return self.l ** self.m

    @property
    def k(self):
        return self.n - self.H.rows

    @property
    def binary(self):
        return self.l == 2

    @property
    def G(self):
        """Generator matrix: the kernel basis of ``H`` (built on first
        use)."""
        if self._G is None:
            self._G = kernel_basis(self.H)
        return self._G

    @property
    def designed_dual_distance(self):
        return designed_dual_distance(self.l, self.r)

    def rows_with_weight(self, low, high):
        """Indices of the ``H`` rows with ``low < weight <= high``.

        The rows are contiguous because of the row order.
        """
        return [i for i, w in enumerate(self.row_weights) if low < w <= high]

    def band(self, low, high):
        """The ``H`` rows of weight in ``(low, high]`` as a matrix."""
        return take_rows(self.H, self.rows_with_weight(low, high))

    def label(self):
        if self.binary:
            return "C_{0}({1},{2})".format(self.spec.q, self.r, self.m)
        return "C_{0}({1},{2};{3})".format(self.spec.q, self.r, self.m,
                                           self.l)

    def __repr__(self):
        return "CharCodeSpec({0})".format(self.label())

    def check_dimension(self):
        """Confirm ``rank(H) = n - k`` by elimination.

        :Returns:
            - ``True`` if the rank agrees with the designed dimension.
        """
        return rank(self.H) == self.n - self.designed[1]

    def to_dict(self):
        """Structured form with ``H`` and ``G`` in the matrix text
        format."""
        return collections.OrderedDict([
            ('code', self.label()),
            ('field', str(self.spec)),
            ('q', self.spec.q),
            ('l', self.l),
            ('m', self.m),
            ('r', self.r),
            ('xi', int(self.xi)),
            ('designed', collections.OrderedDict(
                zip(('n', 'k', 'd'), self.designed))),
            ('H', self.H.format()),
            ('G', self.G.format()),
        ])


def _check_code_parameters(spec, l, m, r):
    if l < 2 or m < 1:
        raise ParameterException(
            "Need l >= 2 and m >= 1, got l={0}, m={1}".format(l, m))
    if (spec.q - 1) % l != 0:
        raise ParameterException(
            "l={0} does not divide q-1={1}".format(l, spec.q - 1))
    if r < 0 or r >= m * (l - 1):
        raise ParameterException(
            "Need 0 <= r < {0} for C_{1}(r,{2};{3}), got r={4}".format(
                m * (l - 1), spec.q, m, l, r))


def build_char_code(spec, l, m, r, max_size=None):
    """Construct ``C_q(r, m; l)``.

    :Args:
        - spec (:class:`.FieldSpec`): GF(q) with ``l | q - 1``.
        - l (int): Group exponent, 2 for the binary-group family.
        - m (int): Group rank.
        - r (int): ``0 <= r < m(l-1)``.

    :Kwargs:
        - max_size (int): Group size guard, default the ``group_size``
          budget.

    :Returns:
        - A :class:`.CharCodeSpec`.

    :Raises:
        - :exc:`.ParameterException` if a precondition fails.
    """
    _check_code_parameters(spec, l, m, r)
    points = enumerate_group(l, m, max_size=max_size)
    xi = gf.root_of_unity(spec, l)
    code = CharCodeSpec(spec, l, m, r, xi, points)
    if code.k != code.designed[1]:
        raise ParameterException(
            "Defining set size {0} disagrees with S_m(r)".format(
                code.H.rows))
    LOG.debug("Built {0} with designed parameters {1}".format(
        code.label(), code.designed))
    return code


def binary_code(spec, m, r, max_size=None):
    """``C_q(r, m)``, the binary-group character code."""
    return build_char_code(spec, 2, m, r, max_size=max_size)


def dual_reference_code(spec, l, m, r, max_size=None):
    """``C_q(m(l-1)-1-r, m; l)``, monomially equivalent to the dual of
    ``C_q(r, m; l)``.

    :Raises:
        - :exc:`.ParameterException` if the reflected parameter is out of
          range.
    """
    reflected = m * (l - 1) - 1 - r
    if reflected < 0 or reflected >= m * (l - 1):
        raise ParameterException(
            "Reflected parameter {0} out of range for m={1}, l={2}".format(
                reflected, m, l))
    return build_char_code(spec, l, m, reflected, max_size=max_size)


def character_generator(code):
    """The generator built directly from characters.

    Row ``y`` for each ``y`` outside the defining set is
    ``(xi^(-y . j))_j``; these rows span the code. Only the row space is
    meaningful, so rows follow ascending group index.

    :Returns:
        - A :class:`.MatrixFq` with ``k`` rows.
    """
    spec = code.spec
    inverse = gf.FieldElement(spec, spec.inv(int(code.xi)))
    outside = [p for p in code.points if p.weight <= code.r]
    return MatrixFq(spec, character_table(spec, inverse, outside,
                                          code.points), cols=code.n)


def same_row_space(left, right):
    """``True`` if two matrices span the same row space."""
    if left.cols != right.cols:
        return False
    joint = rank(vstack([left, right]))
    return joint == rank(left) == rank(right)
