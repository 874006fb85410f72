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
Dense exact linear algebra over GF(q).

A :class:`MatrixFq` holds a read-only numpy array of canonical field
encodings together with its :class:`.FieldSpec`. Every operation returns a
new matrix.
"""

import logging

import numpy as np

from . import gf
from .exceptions import (
    DimensionException,
    FieldMismatchException,
    MalformedFileException)

LOG = logging.getLogger('charconv')


class MatrixFq(object):
    """
    A rows x cols matrix over a finite field.

    :Attributes:
        - spec (:class:`.FieldSpec`)
        - rows (int)
        - cols (int)
        - entries (:class:`numpy.ndarray`): read-only int64 array of
          canonical encodings, shape ``(rows, cols)``.
    """

    def __init__(self, spec, entries, cols=None):
        """
        :Args:
            - spec (:class:`.FieldSpec`): The field of the entries.
            - entries: A 2D array-like of encodings (or
              :class:`.FieldElement` values).

        :Kwargs:
            - cols (int): Column count, needed only when ``entries`` has
              no rows.

        :Raises:
            - :exc:`.DimensionException` if the entries are not a
              rectangular 2D array or an entry lies outside ``[0, q)``.
        """
        self.spec = spec
        array = np.array([[int(v) for v in row] for row in entries]
                         if len(entries) and not isinstance(entries, np.ndarray)
                         else entries, dtype=np.int64)

        if array.size == 0:
            array = array.reshape((array.shape[0] if array.ndim == 2 else 0,
                                   cols if cols is not None else
                                   (array.shape[1] if array.ndim == 2 else 0)))
        if array.ndim != 2:
            raise DimensionException(
                "Matrix entries must be two dimensional, got shape "
                "{0}".format(array.shape))
        if array.size and (array.min() < 0 or array.max() >= spec.q):
            raise DimensionException(
                "Matrix entries must be encodings in [0, {0})".format(spec.q))

        array.setflags(write=False)
        self.entries = array
        self.rows, self.cols = array.shape

    @classmethod
    def zeros(cls, spec, rows, cols):
        return cls(spec, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, spec, size):
        return cls(spec, np.eye(size, dtype=np.int64))

    def __eq__(self, other):
        return (isinstance(other, MatrixFq) and self.spec == other.spec and
                self.entries.shape == other.entries.shape and
                bool((self.entries == other.entries).all()))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.spec, self.entries.shape, self.entries.tobytes()))

    def __repr__(self):
        return "MatrixFq({0}x{1} over GF({2}))".format(
            self.rows, self.cols, self.spec.q)

    def __getitem__(self, index):
        row, col = index
        return self.spec.element(self.entries[row, col])

    def is_zero(self):
        return not self.entries.any()

    def _check_spec(self, other):
        if other.spec != self.spec:
            raise FieldMismatchException(
                "Matrices over GF({0}) and GF({1})".format(
                    self.spec.q, other.spec.q))

    def transpose(self):
        return MatrixFq(self.spec, self.entries.T.copy(), cols=self.rows)

    @property
    def T(self):
        return self.transpose()

    def dot(self, other):
        """Matrix product ``self @ other``.

        :Raises:
            - :exc:`.DimensionException` if the inner sizes differ.
        """
        self._check_spec(other)
        if self.cols != other.rows:
            raise DimensionException(
                "Cannot multiply {0}x{1} by {2}x{3}".format(
                    self.rows, self.cols, other.rows, other.cols))
        return MatrixFq(self.spec, matmul(self.spec, self.entries,
                                          other.entries), cols=other.cols)

    __matmul__ = dot

    def __add__(self, other):
        self._check_spec(other)
        if self.entries.shape != other.entries.shape:
            raise DimensionException("Cannot add matrices of shapes {0} and "
                                     "{1}".format(self.entries.shape,
                                                  other.entries.shape))
        return MatrixFq(self.spec, np.asarray(
            self.spec.add(self.entries, other.entries)), cols=self.cols)

    def scale(self, value):
        """Multiply every entry by a field encoding."""
        return MatrixFq(self.spec, np.asarray(
            self.spec.mul(self.entries, int(value))), cols=self.cols)

    def format(self):
        """Text form: ``rows cols q`` then one line of encodings per row."""
        lines = ["{0} {1} {2}".format(self.rows, self.cols, self.spec.q)]
        lines.extend(" ".join(str(int(v)) for v in row)
                     for row in self.entries)
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text, spec=None):
        """Inverse of :meth:`format`.

        :Kwargs:
            - spec (:class:`.FieldSpec`): Field to use; the canonical field
              of order ``q`` is built otherwise.

        :Raises:
            - :exc:`.MalformedFileException` on any inconsistency.
        """
        lines = [line for line in text.strip().splitlines() if line.strip()]
        try:
            rows, cols, q = (int(v) for v in lines[0].split())
            values = [[int(v) for v in line.split()] for line in lines[1:]]
        except (IndexError, ValueError):
            raise MalformedFileException("Invalid matrix header or entries")

        if spec is None:
            spec = gf.field_of_order(q)
        elif spec.q != q:
            raise MalformedFileException(
                "Matrix is over GF({0}), expected GF({1})".format(q, spec.q))

        if len(values) != rows or any(len(row) != cols for row in values):
            raise MalformedFileException(
                "Expected a {0}x{1} matrix".format(rows, cols))
        if any(v < 0 or v >= q for row in values for v in row):
            raise MalformedFileException(
                "Matrix entries must lie in [0, {0})".format(q))
        return cls(spec, np.array(values, dtype=np.int64).reshape(rows, cols))


def matmul(spec, left, right):
    """Product of two encoding arrays over ``spec``."""
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    if spec.e == 1:
        # Exact while cols * (p-1)^2 stays below 2^63.
        return np.dot(left % spec.p, right % spec.p) % spec.p

    out = np.zeros((left.shape[0], right.shape[1]), dtype=np.int64)
    for inner in range(left.shape[1]):
        out = spec.add(out, spec.mul(left[:, inner:inner + 1],
                                     right[inner:inner + 1, :]))
    return np.asarray(out, dtype=np.int64)


def rref_array(spec, array, col_limit=None):
    """Row reduce an encoding array.

    Pivot rule: columns left to right, the first nonzero row at or below
    the current row.

    :Returns:
        - Tuple of the reduced array and the list of pivot columns.
    """
    work = np.array(array, dtype=np.int64)
    rows, cols = work.shape
    limit = cols if col_limit is None else col_limit
    pivots = []
    row = 0
    for col in range(limit):
        if row >= rows:
            break
        nonzero = np.nonzero(work[row:, col])[0]
        if nonzero.size == 0:
            continue
        pick = row + int(nonzero[0])
        if pick != row:
            work[[row, pick]] = work[[pick, row]]

        lead = int(work[row, col])
        if lead != 1:
            work[row] = spec.mul(work[row], spec.inv(lead))

        factors = work[:, col].copy()
        factors[row] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            work[hit] = spec.sub(work[hit],
                                 spec.mul(factors[hit][:, None],
                                          work[row][None, :]))
        pivots.append(col)
        row += 1
    return work, pivots


def rref(matrix):
    """Reduced row echelon form.

    :Args:
        - matrix (:class:`.MatrixFq`)

    :Returns:
        - Tuple of the reduced :class:`.MatrixFq` and its pivot columns
          (list).
    """
    reduced, pivots = rref_array(matrix.spec, matrix.entries)
    return MatrixFq(matrix.spec, reduced, cols=matrix.cols), pivots


def rank(matrix):
    """Rank over GF(q)."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return len(rref_array(matrix.spec, matrix.entries)[1])


def kernel_basis(matrix):
    """Basis of the right kernel ``{v : M v^T = 0}``.

    One basis row per free column ``f`` of the RREF, with a 1 in position
    ``f`` and ``-R[i, f]`` in each pivot position.

    :Returns:
        - A :class:`.MatrixFq` with ``cols - rank`` rows.
    """
    spec = matrix.spec
    reduced, pivots = rref_array(spec, matrix.entries)
    free = [c for c in range(matrix.cols) if c not in set(pivots)]
    basis = np.zeros((len(free), matrix.cols), dtype=np.int64)
    for index, col in enumerate(free):
        basis[index, col] = 1
        for prow, pcol in enumerate(pivots):
            basis[index, pcol] = spec.neg(int(reduced[prow, col]))
    LOG.debug("Kernel of {0}x{1} matrix has dimension {2}".format(
        matrix.rows, matrix.cols, len(free)))
    return MatrixFq(spec, basis, cols=matrix.cols)


def solve(matrix, rhs):
    """A particular solution ``X`` of ``M X = B``.

    :Args:
        - matrix (:class:`.MatrixFq`): ``M``.
        - rhs (:class:`.MatrixFq`): ``B``, with as many rows as ``M``.

    :Returns:
        - A :class:`.MatrixFq` ``X``, free variables set to zero, or
          ``None`` if the system is inconsistent.

    :Raises:
        - :exc:`.DimensionException` if the row counts differ.
    """
    matrix._check_spec(rhs)
    if matrix.rows != rhs.rows:
        raise DimensionException("Right-hand side has {0} rows, expected "
                                 "{1}".format(rhs.rows, matrix.rows))
    augmented = np.hstack([matrix.entries, rhs.entries])
    reduced, pivots = rref_array(matrix.spec, augmented,
                                 col_limit=matrix.cols)

    # Consistent iff no nonzero row is left with a zero coefficient part.
    used = len(pivots)
    if reduced[used:, matrix.cols:].any():
        return None
    solution = np.zeros((matrix.cols, rhs.cols), dtype=np.int64)
    for prow, pcol in enumerate(pivots):
        solution[pcol] = reduced[prow, matrix.cols:]
    return MatrixFq(matrix.spec, solution, cols=rhs.cols)


def take_rows(matrix, indices):
    """Submatrix of the given rows, in the given order.

    :Raises:
        - :exc:`.DimensionException` for an index out of range.
    """
    indices = list(indices)
    if any(i < 0 or i >= matrix.rows for i in indices):
        raise DimensionException(
            "Row index out of range for a matrix with {0} rows".format(
                matrix.rows))
    return MatrixFq(matrix.spec, matrix.entries[indices].copy(),
                    cols=matrix.cols)


def take_cols(matrix, indices):
    """Submatrix of the given columns, in the given order."""
    indices = list(indices)
    if any(i < 0 or i >= matrix.cols for i in indices):
        raise DimensionException(
            "Column index out of range for a matrix with {0} columns".format(
                matrix.cols))
    return MatrixFq(matrix.spec, matrix.entries[:, indices].copy(),
                    cols=len(indices))


def vstack(matrices):
    """Stack matrices top to bottom.

    :Raises:
        - :exc:`.DimensionException` if the column counts differ or the
          list is empty.
        - :exc:`.FieldMismatchException` for mixed fields.
    """
    matrices = list(matrices)
    if not matrices:
        raise DimensionException("Nothing to stack")
    first = matrices[0]
    for other in matrices[1:]:
        first._check_spec(other)
        if other.cols != first.cols:
            raise DimensionException(
                "Cannot stack {0} columns onto {1}".format(other.cols,
                                                           first.cols))
    return MatrixFq(first.spec,
                    np.vstack([m.entries for m in matrices]), cols=first.cols)


def pad_zero_rows(matrix, target_rows):
    """Append zero rows at the bottom up to ``target_rows`` rows.

    :Raises:
        - :exc:`.DimensionException` if the matrix already has more rows.
    """
    if target_rows < matrix.rows:
        raise DimensionException(
            "Cannot pad {0} rows to {1}".format(matrix.rows, target_rows))
    padding = np.zeros((target_rows - matrix.rows, matrix.cols),
                       dtype=np.int64)
    return MatrixFq(matrix.spec, np.vstack([matrix.entries, padding]),
                    cols=matrix.cols)
