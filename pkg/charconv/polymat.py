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
Polynomial matrices over GF(q)[D].

A :class:`PolyMatrix` is stored as an int64 array of shape
``(k, n, maxdeg + 1)`` whose last axis holds the coefficients of ``D^0,
D^1, ...``. Polynomials passed in and out of the module are tuples of
canonical encodings, constant term first, with trailing zeros trimmed.
"""

import collections
import logging

import numpy as np

from . import gf
from . import matfq
from .matfq import MatrixFq
from .exceptions import (
    DimensionException,
    FieldMismatchException,
    MalformedFileException,
    ParameterException,
    RankDeficientException)

LOG = logging.getLogger('charconv')

# Largest right-inverse degree tried before falling back to the Smith form.
RIGHT_INVERSE_DEGREE = 3


ConvParams = collections.namedtuple(
    'ConvParams', ['n', 'k', 'row_degrees', 'degree', 'memory'])
ConvParams.__doc__ = """Code parameters read off a generator matrix.

:Attributes:
    - n (int): Code length.
    - k (int): Dimension.
    - row_degrees (tuple): ``max_j deg g_ij`` per row.
    - degree (int): Sum of the row degrees.
    - memory (int): Largest row degree.
"""


BasicResult = collections.namedtuple(
    'BasicResult', ['basic', 'right_inverse', 'invariant_factor', 'method'])
BasicResult.__doc__ = """Outcome of :func:`is_basic`.

:Attributes:
    - basic (bool)
    - right_inverse (:class:`.PolyMatrix`): ``R`` with ``G R = I`` when
      basic, else ``None``.
    - invariant_factor (tuple): A nonunit invariant factor when not basic.
    - method (str): ``"linear-solve"`` or ``"smith-form"``.
"""


# Polynomial helpers over a FieldSpec. Polynomials are encoding tuples.

def poly_trim(poly):
    poly = [int(c) for c in poly]
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def poly_degree(poly):
    """Degree, with -1 for the zero polynomial."""
    return len(poly_trim(poly)) - 1


def poly_add(spec, left, right):
    size = max(len(left), len(right))
    left = tuple(left) + (0,) * (size - len(left))
    right = tuple(right) + (0,) * (size - len(right))
    return poly_trim(spec.add(a, b) for a, b in zip(left, right))


def poly_neg(spec, poly):
    return tuple(spec.neg(c) for c in poly)


def poly_sub(spec, left, right):
    return poly_add(spec, left, poly_neg(spec, right))


def poly_scale(spec, poly, value):
    return poly_trim(spec.mul(c, value) for c in poly)


def poly_mul(spec, left, right):
    if not left or not right:
        return ()
    out = [0] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        if a:
            for j, b in enumerate(right):
                if b:
                    out[i + j] = spec.add(out[i + j], spec.mul(a, b))
    return poly_trim(out)


def poly_divmod(spec, num, den):
    """Quotient and remainder of ``num / den``.

    :Raises:
        - :exc:`.FieldDivisionException` for a zero divisor.
    """
    den = poly_trim(den)
    lead_inv = spec.inv(den[-1] if den else 0)
    rem = list(poly_trim(num))
    quot = [0] * max(len(rem) - len(den) + 1, 0)
    while len(rem) >= len(den) and rem:
        shift = len(rem) - len(den)
        coeff = spec.mul(rem[-1], lead_inv)
        quot[shift] = coeff
        for i, c in enumerate(den):
            rem[shift + i] = spec.sub(rem[shift + i], spec.mul(coeff, c))
        rem = list(poly_trim(rem))
    return poly_trim(quot), tuple(rem)


def poly_monic(spec, poly):
    poly = poly_trim(poly)
    if not poly or poly[-1] == 1:
        return poly
    return poly_scale(spec, poly, spec.inv(poly[-1]))


def poly_gcd(spec, left, right):
    """Monic greatest common divisor."""
    left, right = poly_trim(left), poly_trim(right)
    while right:
        left, right = right, poly_divmod(spec, left, right)[1]
    return poly_monic(spec, left)


def format_poly(poly):
    """``c0,c1,...``; the zero polynomial is ``0``."""
    poly = poly_trim(poly)
    return ",".join(str(c) for c in poly) if poly else "0"


class PolyMatrix(object):
    """
    A k x n matrix of polynomials in ``D`` over GF(q).

    :Attributes:
        - spec (:class:`.FieldSpec`)
        - k (int): Rows.
        - n (int): Columns.
        - coeffs (:class:`numpy.ndarray`): Read-only array of shape
          ``(k, n, maxdeg + 1)``.
    """

    def __init__(self, spec, coeffs, allow_zero_rows=False):
        """
        :Args:
            - spec (:class:`.FieldSpec`)
            - coeffs: Array-like of shape ``(k, n, L)``.

        :Kwargs:
            - allow_zero_rows (bool): Accept zero rows. Used for right
              inverses and intermediate products only; generator matrices
              never have zero rows.

        :Raises:
            - :exc:`.ParameterException` if a row is zero.
            - :exc:`.DimensionException` for a badly shaped array.
        """
        array = np.array(coeffs, dtype=np.int64)
        if array.ndim != 3 or array.shape[2] < 1:
            raise DimensionException(
                "Polynomial matrix coefficients need shape (k, n, L), got "
                "{0}".format(array.shape))
        if array.size and (array.min() < 0 or array.max() >= spec.q):
            raise DimensionException(
                "Coefficients must be encodings in [0, {0})".format(spec.q))

        nonzero = np.nonzero(array.reshape(-1, array.shape[2]).any(axis=0))[0]
        length = int(nonzero[-1]) + 1 if nonzero.size else 1
        array = array[:, :, :length].copy()

        if not allow_zero_rows:
            empty = [i for i in range(array.shape[0])
                     if not array[i].any()]
            if empty:
                raise ParameterException(
                    "Generator matrix has zero rows {0}".format(empty))

        array.setflags(write=False)
        self.spec = spec
        self.coeffs = array
        self.k, self.n = array.shape[:2]

    @classmethod
    def from_entries(cls, spec, entries, **kwargs):
        """Build from nested lists of coefficient sequences."""
        entries = [[poly_trim(p) for p in row] for row in entries]
        if not entries or len(set(len(row) for row in entries)) != 1:
            raise DimensionException("Rows must have equal length")
        length = max([len(p) for row in entries for p in row] + [1])
        array = np.zeros((len(entries), len(entries[0]), length),
                         dtype=np.int64)
        for i, row in enumerate(entries):
            for j, poly in enumerate(row):
                array[i, j, :len(poly)] = poly
        return cls(spec, array, **kwargs)

    @classmethod
    def from_coefficients(cls, matrices, **kwargs):
        """``sum(M_i D^i)`` for equally shaped matrices ``M_0, M_1, ...``."""
        matrices = list(matrices)
        spec = matrices[0].spec
        for other in matrices[1:]:
            if other.spec != spec:
                raise FieldMismatchException("Coefficient matrices over "
                                             "different fields")
            if other.entries.shape != matrices[0].entries.shape:
                raise DimensionException("Coefficient matrices differ in "
                                         "shape")
        return cls(spec, np.stack([m.entries for m in matrices], axis=2),
                   **kwargs)

    @property
    def maxdeg(self):
        return self.coeffs.shape[2] - 1

    def entry(self, row, col):
        return poly_trim(self.coeffs[row, col])

    def entries(self):
        return [[self.entry(i, j) for j in range(self.n)]
                for i in range(self.k)]

    def coefficient(self, power):
        """The constant matrix multiplying ``D^power``."""
        if power < 0 or power > self.maxdeg:
            return MatrixFq.zeros(self.spec, self.k, self.n)
        return MatrixFq(self.spec, self.coeffs[:, :, power].copy(),
                        cols=self.n)

    def row(self, index):
        return tuple(self.entry(index, j) for j in range(self.n))

    def row_degrees(self):
        degrees = []
        for i in range(self.k):
            nonzero = np.nonzero(self.coeffs[i].any(axis=0))[0]
            degrees.append(int(nonzero[-1]) if nonzero.size else -1)
        return tuple(degrees)

    def high_order_matrix(self):
        """``Gbar``: entry ``(i, j)`` is the coefficient of ``D^delta_i`` in
        ``g_ij``."""
        degrees = self.row_degrees()
        rows = [self.coeffs[i, :, max(d, 0)] for i, d in enumerate(degrees)]
        return MatrixFq(self.spec, np.array(rows, dtype=np.int64),
                        cols=self.n)

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.spec == other.spec and
                self.coeffs.shape == other.coeffs.shape and
                bool((self.coeffs == other.coeffs).all()))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.spec, self.coeffs.shape, self.coeffs.tobytes()))

    def __repr__(self):
        return "PolyMatrix({0}x{1}, maxdeg {2}, GF({3}))".format(
            self.k, self.n, self.maxdeg, self.spec.q)

    def format(self):
        """Text form: header ``k n q maxdeg``, then one line per row with
        space-separated ``c0,c1,...`` columns."""
        lines = ["{0} {1} {2} {3}".format(self.k, self.n, self.spec.q,
                                          self.maxdeg)]
        for i in range(self.k):
            lines.append(" ".join(format_poly(self.coeffs[i, j])
                                  for j in range(self.n)))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text, spec=None):
        """Inverse of :meth:`format`.

        :Raises:
            - :exc:`.MalformedFileException` on any inconsistency.
        """
        lines = [line for line in text.strip().splitlines() if line.strip()]
        try:
            k, n, q, maxdeg = (int(v) for v in lines[0].split())
            rows = [[tuple(int(c) for c in cell.split(","))
                     for cell in line.split()] for line in lines[1:]]
        except (IndexError, ValueError):
            raise MalformedFileException("Invalid polynomial matrix text")

        if spec is None:
            spec = gf.field_of_order(q)
        elif spec.q != q:
            raise MalformedFileException(
                "Polynomial matrix is over GF({0}), expected GF({1})".format(
                    q, spec.q))
        if len(rows) != k or any(len(row) != n for row in rows):
            raise MalformedFileException(
                "Expected a {0}x{1} polynomial matrix".format(k, n))
        if any(len(poly_trim(p)) > maxdeg + 1 or
               any(c < 0 or c >= q for c in p)
               for row in rows for p in row):
            raise MalformedFileException(
                "Coefficient out of range or above degree {0}".format(maxdeg))
        try:
            return cls.from_entries(spec, rows)
        except (ParameterException, DimensionException) as exp:
            raise MalformedFileException(str(exp))


def params(matrix):
    """Row degrees, degree and memory of a generator matrix.

    :Args:
        - matrix (:class:`.PolyMatrix`)

    :Returns:
        - :class:`.ConvParams`

    :Raises:
        - :exc:`.ParameterException` if a row is zero.
    """
    degrees = matrix.row_degrees()
    if any(d < 0 for d in degrees):
        raise ParameterException("Zero row in generator matrix")
    return ConvParams(matrix.n, matrix.k, degrees, sum(degrees),
                      max(degrees) if degrees else 0)


def _field_sum(spec, array, axis=0):
    """Sum encodings along an axis."""
    if spec.e == 1:
        return array.sum(axis=axis) % spec.p
    array = np.moveaxis(array, axis, 0)
    total = np.zeros(array.shape[1:], dtype=np.int64)
    for layer in array:
        total = np.asarray(spec.add(total, layer), dtype=np.int64)
    return total


def multiply(left, right):
    """Product of two polynomial matrices; zero rows allowed in the
    result."""
    if left.spec != right.spec:
        raise FieldMismatchException("Polynomial matrices over different "
                                     "fields")
    if left.n != right.k:
        raise DimensionException("Cannot multiply {0}x{1} by {2}x{3}".format(
            left.k, left.n, right.k, right.n))
    spec = left.spec
    out = np.zeros((left.k, right.n, left.maxdeg + right.maxdeg + 1),
                   dtype=np.int64)
    for a in range(left.maxdeg + 1):
        for b in range(right.maxdeg + 1):
            block = matfq.matmul(spec, left.coeffs[:, :, a],
                                 right.coeffs[:, :, b])
            out[:, :, a + b] = spec.add(out[:, :, a + b], block)
    return PolyMatrix(spec, out, allow_zero_rows=True)


def is_identity(matrix):
    """``True`` for the constant identity matrix."""
    return (matrix.k == matrix.n and matrix.maxdeg == 0 and
            bool((matrix.coeffs[:, :, 0] ==
                  np.eye(matrix.k, dtype=np.int64)).all()))


def right_inverse(matrix, max_degree=RIGHT_INVERSE_DEGREE):
    """Search for a polynomial right inverse of bounded degree.

    For each degree ``d`` the coefficients ``R_0..R_d`` solve the linear
    system whose block ``(s, j)`` is ``G_(s-j)`` and whose right-hand side
    is the identity in block 0 and zero elsewhere.

    :Returns:
        - A :class:`.PolyMatrix` ``R`` with ``G R = I``, or ``None`` if no
          inverse of degree at most ``max_degree`` exists.
    """
    spec = matrix.spec
    k, n, mu = matrix.k, matrix.n, matrix.maxdeg
    for degree in range(max_degree + 1):
        blocks = mu + degree + 1
        system = np.zeros((k * blocks, n * (degree + 1)), dtype=np.int64)
        for s in range(blocks):
            for j in range(degree + 1):
                if 0 <= s - j <= mu:
                    system[s * k:(s + 1) * k, j * n:(j + 1) * n] = \
                        matrix.coeffs[:, :, s - j]
        rhs = np.zeros((k * blocks, k), dtype=np.int64)
        rhs[:k, :k] = np.eye(k, dtype=np.int64)

        solution = matfq.solve(MatrixFq(spec, system, cols=system.shape[1]),
                               MatrixFq(spec, rhs, cols=k))
        if solution is None:
            continue
        coeffs = np.stack([solution.entries[j * n:(j + 1) * n]
                           for j in range(degree + 1)], axis=2)
        LOG.debug("Found right inverse of degree {0}".format(degree))
        return PolyMatrix(spec, coeffs, allow_zero_rows=True)
    return None


class SmithForm(object):
    """
    Smith normal form ``S = U G V`` over GF(q)[D].

    Elimination is gcd driven: the pivot is an entry of least degree
    (ties go to the lower row degree, then the lower index), rows and
    columns are cleared by division with remainder, and a pivot that
    does not divide the rest of the block is replaced until it does.

    :Attributes:
        - diagonal (list): Monic invariant factors, ``()`` for zero.
        - U (list): k x k unimodular row transform.
        - V (list): n x n unimodular column transform.
    """

    def __init__(self, matrix):
        self.spec = matrix.spec
        self.k = matrix.k
        self.n = matrix.n
        self._row_degrees = matrix.row_degrees()
        self.A = matrix.entries()
        self.U = [[(1,) if i == j else () for j in range(self.k)]
                  for i in range(self.k)]
        self.V = [[(1,) if i == j else () for j in range(self.n)]
                  for i in range(self.n)]
        self.diagonal = []
        self._reduce()

    def _swap_rows(self, i, j):
        if i != j:
            self.A[i], self.A[j] = self.A[j], self.A[i]
            self.U[i], self.U[j] = self.U[j], self.U[i]

    def _swap_cols(self, i, j):
        if i != j:
            for row in self.A:
                row[i], row[j] = row[j], row[i]
            for row in self.V:
                row[i], row[j] = row[j], row[i]

    def _row_axpy(self, target, source, factor):
        """row[target] -= factor * row[source] on A and U."""
        spec = self.spec
        for mat in (self.A, self.U):
            mat[target] = [poly_sub(spec, t, poly_mul(spec, factor, s))
                           for t, s in zip(mat[target], mat[source])]

    def _col_axpy(self, target, source, factor):
        """col[target] -= factor * col[source] on A and V."""
        spec = self.spec
        for mat in (self.A, self.V):
            for row in mat:
                row[target] = poly_sub(spec, row[target],
                                       poly_mul(spec, factor, row[source]))

    def _scale_row(self, index, value):
        spec = self.spec
        for mat in (self.A, self.U):
            mat[index] = [poly_scale(spec, p, value) for p in mat[index]]

    def _pick_pivot(self, t):
        best = None
        for i in range(t, self.k):
            for j in range(t, self.n):
                poly = self.A[i][j]
                if poly:
                    key = (len(poly), self._row_degrees[i], i, j)
                    if best is None or key < best:
                        best = key
        return best

    def _reduce(self):
        for t in range(min(self.k, self.n)):
            pivot = self._pick_pivot(t)
            if pivot is None:
                break
            self._swap_rows(t, pivot[2])
            self._swap_cols(t, pivot[3])

            while True:
                dirty = False
                for i in range(t + 1, self.k):
                    if self.A[i][t]:
                        quot, rem = poly_divmod(self.spec, self.A[i][t],
                                                self.A[t][t])
                        self._row_axpy(i, t, quot)
                        if rem:
                            self._swap_rows(t, i)
                            dirty = True
                for j in range(t + 1, self.n):
                    if self.A[t][j]:
                        quot, rem = poly_divmod(self.spec, self.A[t][j],
                                                self.A[t][t])
                        self._col_axpy(j, t, quot)
                        if rem:
                            self._swap_cols(t, j)
                            dirty = True
                if dirty:
                    continue

                # Pivot must divide every entry of the remaining block.
                offender = None
                for i in range(t + 1, self.k):
                    for j in range(t + 1, self.n):
                        if self.A[i][j] and poly_divmod(
                                self.spec, self.A[i][j], self.A[t][t])[1]:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                self._row_axpy(t, offender, (self.spec.neg(1),))

            lead = self.A[t][t][-1]
            if lead != 1:
                self._scale_row(t, self.spec.inv(lead))
            self.diagonal.append(self.A[t][t])

        while len(self.diagonal) < min(self.k, self.n):
            self.diagonal.append(())

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d)

    def nonunit_factor(self):
        """The first invariant factor that is not a unit, or ``None``."""
        for factor in self.diagonal:
            if factor and len(factor) > 1:
                return factor
        return None

    def right_inverse(self):
        """``V[:, :k] U`` when every invariant factor is 1."""
        spec = self.spec
        if self.rank < self.k or self.nonunit_factor() is not None:
            return None
        inverse = []
        for i in range(self.n):
            row = []
            for j in range(self.k):
                total = ()
                for s in range(self.k):
                    total = poly_add(spec, total,
                                     poly_mul(spec, self.V[i][s],
                                              self.U[s][j]))
                row.append(total)
            inverse.append(row)
        return PolyMatrix.from_entries(spec, inverse, allow_zero_rows=True)


def smith_form(matrix):
    """Compute the :class:`.SmithForm` of a polynomial matrix."""
    form = SmithForm(matrix)
    LOG.debug("Smith form of {0}x{1} matrix has rank {2}".format(
        matrix.k, matrix.n, form.rank))
    return form


def is_basic(matrix, max_degree=RIGHT_INVERSE_DEGREE):
    """Decide whether ``G`` has a polynomial right inverse.

    A bounded-degree linear solve is tried first; when it finds nothing the
    Smith form decides and supplies the certificate.

    :Args:
        - matrix (:class:`.PolyMatrix`): ``k <= n``.

    :Kwargs:
        - max_degree (int): Largest right-inverse degree tried by the
          linear solve.

    :Returns:
        - :class:`.BasicResult`

    :Raises:
        - :exc:`.RankDeficientException` if ``rank G < k``.
        - :exc:`.DimensionException` if ``k > n``.
    """
    if matrix.k > matrix.n:
        raise DimensionException("Generator has more rows ({0}) than "
                                 "columns ({1})".format(matrix.k, matrix.n))
    inverse = right_inverse(matrix, max_degree)
    if inverse is not None:
        return BasicResult(True, inverse, None, "linear-solve")

    form = smith_form(matrix)
    if form.rank < matrix.k:
        raise RankDeficientException(
            "Generator has rank {0} < k = {1}".format(form.rank, matrix.k))
    factor = form.nonunit_factor()
    if factor is not None:
        return BasicResult(False, None, factor, "smith-form")
    return BasicResult(True, form.right_inverse(), None, "smith-form")


def is_reduced(matrix):
    """``True`` if the high-order coefficient matrix has rank ``k``.

    :Raises:
        - :exc:`.RankDeficientException` if ``rank G < k``.
    """
    if matrix_rank(matrix.high_order_matrix()) == matrix.k:
        return True
    form = smith_form(matrix)
    if form.rank < matrix.k:
        raise RankDeficientException(
            "Generator has rank {0} < k = {1}".format(form.rank, matrix.k))
    return False


def matrix_rank(matrix):
    return matfq.rank(matrix)


def _as_poly_rows(spec, vector, length):
    vector = [poly_trim(p) for p in vector]
    if len(vector) != length:
        raise DimensionException(
            "Expected {0} polynomials, got {1}".format(length, len(vector)))
    if any(c < 0 or c >= spec.q for p in vector for c in p):
        raise DimensionException(
            "Coefficients must be encodings in [0, {0})".format(spec.q))
    return vector


def encode(message, matrix):
    """``u(D) G(D)``.

    :Args:
        - message (list): ``k`` polynomials (coefficient tuples).
        - matrix (:class:`.PolyMatrix`): ``G``.

    :Returns:
        - A tuple of ``n`` trimmed polynomials.

    :Raises:
        - :exc:`.DimensionException` if ``len(message) != k``.
    """
    spec = matrix.spec
    message = _as_poly_rows(spec, message, matrix.k)
    length = max([len(p) for p in message] + [1])
    u = np.zeros((matrix.k, length), dtype=np.int64)
    for i, poly in enumerate(message):
        u[i, :len(poly)] = poly

    out = np.zeros((matrix.n, length + matrix.maxdeg), dtype=np.int64)
    for a in range(length):
        if not u[:, a].any():
            continue
        terms = spec.mul(u[:, a][:, None, None], matrix.coeffs)
        contribution = _field_sum(spec, np.asarray(terms, dtype=np.int64))
        window = out[:, a:a + matrix.maxdeg + 1]
        out[:, a:a + matrix.maxdeg + 1] = spec.add(window, contribution)
    return tuple(poly_trim(row) for row in out)


def weight(vector):
    """Total number of nonzero coefficients of a polynomial vector."""
    return sum(1 for poly in vector for c in poly if int(c) != 0)
