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
"""Unit tests for matfq"""

import unittest

import numpy as np

from charconv import gf
from charconv import matfq
from charconv.matfq import MatrixFq
from charconv.exceptions import (
    DimensionException,
    FieldMismatchException,
    MalformedFileException)


class TestMatrixFq(unittest.TestCase):
    """Unit tests for MatrixFq"""

    def setUp(self):
        self.gf3 = gf.make_field(3)
        self.gf9 = gf.field_of_order(9)
        return super(TestMatrixFq, self).setUp()

    def test_create(self):
        """Test MatrixFq construction"""
        mat = MatrixFq(self.gf3, [[1, 2, 0], [0, 1, 1]])
        self.assertEqual((mat.rows, mat.cols), (2, 3))
        self.assertEqual(mat[0, 1], 2)
        self.assertFalse(mat.entries.flags.writeable)

        empty = MatrixFq(self.gf3, [], cols=4)
        self.assertEqual((empty.rows, empty.cols), (0, 4))
        self.assertTrue(empty.is_zero())

        with self.assertRaises(DimensionException):
            MatrixFq(self.gf3, [[1, 3]])
        with self.assertRaises(DimensionException):
            MatrixFq(self.gf3, np.array([1, 2]))

    def test_equality(self):
        """Test MatrixFq equality and hashing"""
        left = MatrixFq(self.gf3, [[1, 2]])
        right = MatrixFq(self.gf3, np.array([[1, 2]]))
        self.assertEqual(left, right)
        self.assertEqual(hash(left), hash(right))
        self.assertNotEqual(left, MatrixFq(self.gf9, [[1, 2]]))
        self.assertNotEqual(left, MatrixFq(self.gf3, [[1], [2]]))

    def test_products(self):
        """Test dot, add, scale and transpose"""
        left = MatrixFq(self.gf3, [[1, 2], [2, 2]])
        right = MatrixFq(self.gf3, [[1, 1], [1, 0]])
        self.assertEqual(left.dot(right), MatrixFq(self.gf3, [[0, 1],
                                                             [1, 2]]))
        self.assertEqual(left @ right, left.dot(right))
        self.assertEqual(left + right, MatrixFq(self.gf3, [[2, 0], [0, 2]]))
        self.assertEqual(left.scale(2), MatrixFq(self.gf3, [[2, 1], [1, 1]]))
        self.assertEqual(left.T, MatrixFq(self.gf3, [[1, 2], [2, 2]]))

        with self.assertRaises(DimensionException):
            left.dot(MatrixFq(self.gf3, [[1, 1, 1]]))
        with self.assertRaises(FieldMismatchException):
            left.dot(MatrixFq(self.gf9, [[1, 1], [1, 1]]))

    def test_extension_product(self):
        """Test products over GF(9)"""
        x = self.gf9.encode((0, 1))
        mat = MatrixFq(self.gf9, [[x, 1]])
        col = MatrixFq(self.gf9, [[x], [1]])
        # x^2 + 1 = 0
        self.assertTrue(mat.dot(col).is_zero())

    def test_text_format(self):
        """Test format and parse"""
        mat = MatrixFq(self.gf3, [[1, 2, 0], [0, 1, 1]])
        text = mat.format()
        self.assertEqual(text, "2 3 3\n1 2 0\n0 1 1\n")
        self.assertEqual(MatrixFq.parse(text), mat)
        self.assertEqual(MatrixFq.parse(text, self.gf3), mat)

        with self.assertRaises(MalformedFileException):
            MatrixFq.parse("2 3 3\n1 2 0\n")
        with self.assertRaises(MalformedFileException):
            MatrixFq.parse("1 2 3\n1 5\n")
        with self.assertRaises(MalformedFileException):
            MatrixFq.parse(text, self.gf9)
        with self.assertRaises(MalformedFileException):
            MatrixFq.parse("two by three")


class TestElimination(unittest.TestCase):
    """Unit tests for rref, rank, kernel_basis and solve"""

    def setUp(self):
        self.gf3 = gf.make_field(3)
        self.gf5 = gf.make_field(5)
        return super(TestElimination, self).setUp()

    def test_rref(self):
        """Test rref and the pivot rule"""
        mat = MatrixFq(self.gf3, [[0, 2, 1], [1, 1, 0], [1, 0, 1]])
        reduced, pivots = matfq.rref(mat)
        self.assertEqual(pivots, [0, 1])
        self.assertEqual(reduced, MatrixFq(self.gf3, [[1, 0, 1],
                                                      [0, 1, 2],
                                                      [0, 0, 0]]))
        self.assertEqual(matfq.rank(mat), 2)

        _, pivots = matfq.rref_array(self.gf3, mat.entries, col_limit=1)
        self.assertEqual(pivots, [0])

    def test_rank(self):
        """Test rank"""
        self.assertEqual(matfq.rank(MatrixFq.identity(self.gf5, 4)), 4)
        self.assertEqual(matfq.rank(MatrixFq.zeros(self.gf5, 3, 2)), 0)
        self.assertEqual(matfq.rank(MatrixFq(self.gf5, [], cols=3)), 0)
        # Dependent over GF(3), independent over GF(5).
        self.assertEqual(matfq.rank(MatrixFq(self.gf3, [[1, 1], [1, 4 % 3]])),
                         1)
        self.assertEqual(matfq.rank(MatrixFq(self.gf5, [[1, 1], [1, 4]])), 2)

    def test_kernel_basis(self):
        """Test kernel_basis"""
        mat = MatrixFq(self.gf3, [[1, 1, 1, 1], [0, 1, 2, 0]])
        kernel = matfq.kernel_basis(mat)
        self.assertEqual(kernel.rows, 2)
        self.assertTrue(mat.dot(kernel.T).is_zero())
        self.assertEqual(matfq.rank(kernel), 2)

        full = matfq.kernel_basis(MatrixFq.identity(self.gf3, 3))
        self.assertEqual((full.rows, full.cols), (0, 3))

        none = matfq.kernel_basis(MatrixFq(self.gf3, [], cols=3))
        self.assertEqual(none, MatrixFq.identity(self.gf3, 3))

    def test_solve(self):
        """Test solve"""
        mat = MatrixFq(self.gf5, [[1, 2], [3, 4]])
        rhs = MatrixFq(self.gf5, [[1], [0]])
        solution = matfq.solve(mat, rhs)
        self.assertEqual(mat.dot(solution), rhs)

        singular = MatrixFq(self.gf5, [[1, 2], [2, 4]])
        self.assertIsNone(matfq.solve(singular, rhs))
        consistent = MatrixFq(self.gf5, [[1], [2]])
        solution = matfq.solve(singular, consistent)
        self.assertEqual(singular.dot(solution), consistent)

        with self.assertRaises(DimensionException):
            matfq.solve(mat, MatrixFq(self.gf5, [[1]]))


class TestSlicing(unittest.TestCase):
    """Unit tests for the row and column helpers"""

    def setUp(self):
        self.gf3 = gf.make_field(3)
        self.mat = MatrixFq(self.gf3, [[1, 0, 2], [0, 1, 1], [2, 2, 0]])
        return super(TestSlicing, self).setUp()

    def test_take(self):
        """Test take_rows and take_cols"""
        self.assertEqual(matfq.take_rows(self.mat, [2, 0]),
                         MatrixFq(self.gf3, [[2, 2, 0], [1, 0, 2]]))
        self.assertEqual(matfq.take_cols(self.mat, [1]),
                         MatrixFq(self.gf3, [[0], [1], [2]]))
        self.assertEqual(matfq.take_rows(self.mat, []).rows, 0)
        with self.assertRaises(DimensionException):
            matfq.take_rows(self.mat, [3])
        with self.assertRaises(DimensionException):
            matfq.take_cols(self.mat, [-1])

    def test_stack_and_pad(self):
        """Test vstack and pad_zero_rows"""
        stacked = matfq.vstack([self.mat, matfq.take_rows(self.mat, [0])])
        self.assertEqual(stacked.rows, 4)
        padded = matfq.pad_zero_rows(matfq.take_rows(self.mat, [0]), 3)
        self.assertEqual(padded, MatrixFq(self.gf3, [[1, 0, 2], [0, 0, 0],
                                                     [0, 0, 0]]))
        with self.assertRaises(DimensionException):
            matfq.pad_zero_rows(self.mat, 2)
        with self.assertRaises(DimensionException):
            matfq.vstack([])
        with self.assertRaises(DimensionException):
            matfq.vstack([self.mat, MatrixFq(self.gf3, [[1]])])


if __name__ == '__main__':
    unittest.main()
