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
"""Unit tests for charcode"""

import unittest

from charconv import charcode
from charconv import distance
from charconv import gf
from charconv import matfq
from charconv.exceptions import ParameterException


class TestCounting(unittest.TestCase):
    """Unit tests for the weight counting helpers"""

    def test_s_m(self):
        """Test s_m"""
        self.assertEqual(charcode.s_m(5, 2), 16)
        self.assertEqual(charcode.s_m(6, 2), 22)
        self.assertEqual(charcode.s_m(7, 2), 29)
        self.assertEqual(charcode.s_m(7, 3), 64)
        self.assertEqual(charcode.s_m(4, 4), 16)
        with self.assertRaises(ParameterException):
            charcode.s_m(4, 5)

    def test_l_weight_count(self):
        """Test l_weight_count"""
        counts = [charcode.l_weight_count(3, i, 3) for i in range(7)]
        self.assertEqual(counts, [1, 3, 6, 7, 6, 3, 1])
        self.assertEqual(charcode.l_weight_count(5, 2, 2), 10)
        with self.assertRaises(ParameterException):
            charcode.l_weight_count(3, 7, 3)

    def test_S_m(self):
        """Test S_m and weight_band"""
        self.assertEqual(charcode.S_m(3, 1, 3), 4)
        self.assertEqual(charcode.S_m(3, 3, 3), 17)
        self.assertEqual(charcode.S_m(5, 2, 2), charcode.s_m(5, 2))
        self.assertEqual(charcode.weight_band(3, 3, 1, 3), 13)
        self.assertEqual(charcode.weight_band(3, 3, 2, 99), 17)
        self.assertEqual(charcode.weight_band(9, 2, 3, 9), 382)
        with self.assertRaises(ParameterException):
            charcode.S_m(3, 7, 3)

    def test_designed_parameters(self):
        """Test designed_parameters and designed_dual_distance"""
        self.assertEqual(charcode.designed_parameters(2, 5, 1), (32, 6, 16))
        self.assertEqual(charcode.designed_parameters(2, 6, 2), (64, 22, 16))
        self.assertEqual(charcode.designed_parameters(3, 3, 1), (27, 4, 18))
        self.assertEqual(charcode.designed_parameters(3, 3, 2), (27, 10, 9))
        self.assertEqual(charcode.designed_dual_distance(2, 1), 4)
        self.assertEqual(charcode.designed_dual_distance(2, 2), 8)
        self.assertEqual(charcode.designed_dual_distance(3, 1), 3)
        self.assertEqual(charcode.designed_dual_distance(3, 2), 6)


class TestGroup(unittest.TestCase):
    """Unit tests for group points and characters"""

    def test_enumerate_group(self):
        """Test enumerate_group"""
        points = charcode.enumerate_group(2, 3)
        self.assertEqual(len(points), 8)
        self.assertEqual(points[5].coords, (1, 0, 1))
        self.assertEqual(points[5].weight, 2)
        self.assertEqual(points[5].m, 3)

        points = charcode.enumerate_group(3, 2)
        self.assertEqual(points[7].coords, (1, 2))

        with self.assertRaises(ParameterException):
            charcode.enumerate_group(1, 3)
        with self.assertRaises(ParameterException):
            charcode.enumerate_group(2, 5, max_size=16)

    def test_character_value(self):
        """Test character_value"""
        spec = gf.make_field(7)
        xi = gf.root_of_unity(spec, 3)
        points = charcode.enumerate_group(3, 2)
        self.assertEqual(charcode.character_value(spec, xi, points[1],
                                                  points[1]), 2)
        # (1, 1) . (2, 1) = 3 = 0 mod 3
        self.assertEqual(charcode.character_value(spec, xi, points[4],
                                                  points[5]), 1)
        self.assertEqual(charcode.character_value(spec, xi, points[2],
                                                  points[1]), 4)

        binary = charcode.enumerate_group(2, 2)
        with self.assertRaises(ParameterException):
            charcode.character_value(spec, xi, points[1], binary[1])


class TestCharCode(unittest.TestCase):
    """Unit tests for CharCodeSpec"""

    def setUp(self):
        self.gf3 = gf.make_field(3)
        self.gf7 = gf.make_field(7)
        return super(TestCharCode, self).setUp()

    def test_binary_code(self):
        """Test build_char_code for C_3(1,3)"""
        code = charcode.binary_code(self.gf3, 3, 1)
        self.assertEqual((code.n, code.k), (8, 4))
        self.assertEqual(code.designed, (8, 4, 4))
        self.assertEqual(code.row_weights, [3, 2, 2, 2])
        self.assertEqual([p.index for p in code.row_points], [7, 3, 5, 6])
        self.assertEqual(int(code.xi), 2)
        self.assertTrue(code.binary)
        self.assertEqual(code.label(), "C_3(1,3)")
        self.assertTrue(code.check_dimension())

        # Row for x = (1,1,1): (-1)^(x . j)
        self.assertEqual(list(code.H.entries[0]), [1, 2, 2, 1, 2, 1, 1, 2])
        self.assertTrue(code.H.dot(code.G.T).is_zero())
        self.assertEqual(code.G.rows, 4)

    def test_lary_code(self):
        """Test build_char_code for C_7(1,3;3)"""
        code = charcode.build_char_code(self.gf7, 3, 3, 1)
        self.assertEqual((code.n, code.k), (27, 4))
        self.assertEqual(code.label(), "C_7(1,3;3)")
        self.assertFalse(code.binary)
        self.assertEqual(code.designed_dual_distance, 3)
        self.assertEqual(code.row_weights[0], 6)
        self.assertEqual(code.row_weights[-1], 2)
        self.assertTrue(code.check_dimension())
        self.assertTrue(code.H.dot(code.G.T).is_zero())

    def test_rows_with_weight(self):
        """Test rows_with_weight and band"""
        code = charcode.binary_code(self.gf3, 3, 1)
        self.assertEqual(code.rows_with_weight(1, 2), [1, 2, 3])
        self.assertEqual(code.rows_with_weight(2, 3), [0])
        self.assertEqual(code.band(2, 3).rows, 1)
        self.assertEqual(code.rows_with_weight(3, 3), [])

    def test_invalid_parameters(self):
        """Test build_char_code preconditions"""
        with self.assertRaises(ParameterException):
            charcode.build_char_code(gf.make_field(5), 3, 2, 1)
        with self.assertRaises(ParameterException):
            charcode.binary_code(self.gf3, 3, 3)
        with self.assertRaises(ParameterException):
            charcode.binary_code(self.gf3, 3, -1)
        with self.assertRaises(ParameterException):
            charcode.binary_code(self.gf3, 15, 1, max_size=1024)

    def test_character_generator(self):
        """Test the character generator spans the code"""
        for spec, l, m, r in [(self.gf3, 2, 3, 1), (gf.make_field(5), 2, 4, 2),
                              (self.gf7, 3, 2, 2)]:
            code = charcode.build_char_code(spec, l, m, r)
            direct = charcode.character_generator(code)
            self.assertEqual(direct.rows, code.k)
            self.assertTrue(charcode.same_row_space(direct, code.G))
            self.assertTrue(code.H.dot(direct.T).is_zero())

    def test_same_row_space(self):
        """Test same_row_space"""
        code = charcode.binary_code(self.gf3, 3, 1)
        self.assertTrue(charcode.same_row_space(code.G, code.G.scale(2)))
        self.assertFalse(charcode.same_row_space(code.G, code.H))
        self.assertFalse(charcode.same_row_space(
            code.G, matfq.take_cols(code.G, [0, 1])))

    def test_dimensions(self):
        """Test dimension and distance of small codes"""
        for q in (3, 5, 7):
            spec = gf.make_field(q)
            for m in (2, 3, 4):
                for r in range(m):
                    code = charcode.binary_code(spec, m, r)
                    k = charcode.s_m(m, r)
                    self.assertEqual(matfq.rank(code.G), k)
                    if q ** k <= 10 ** 5:
                        found = distance.min_distance_enumeration(code.G)
                    else:
                        found = distance.min_dependent_columns(
                            code.H, 2 ** (m - r))
                    self.assertEqual(found.value, 2 ** (m - r), (q, m, r))

        for r in range(4):
            code = charcode.build_char_code(self.gf7, 3, 2, r)
            found = distance.min_distance_enumeration(code.G)
            self.assertEqual(code.k, charcode.S_m(2, r, 3))
            self.assertEqual(found.value, code.designed[2])

    def test_dual_equivalence(self):
        """Test the dual weight distribution matches the reflected code"""
        code = charcode.binary_code(self.gf3, 4, 1)
        reflected = charcode.dual_reference_code(self.gf3, 2, 4, 1)
        self.assertEqual(reflected.r, 2)
        self.assertEqual(distance.weight_distribution(code.H),
                         distance.weight_distribution(reflected.G))

        with self.assertRaises(ParameterException):
            charcode.dual_reference_code(self.gf3, 2, 4, 4)

    def test_to_dict(self):
        """Test to_dict"""
        doc = charcode.binary_code(self.gf3, 3, 1).to_dict()
        self.assertEqual(doc['code'], "C_3(1,3)")
        self.assertEqual(doc['designed']['d'], 4)
        self.assertEqual(matfq.MatrixFq.parse(doc['H']).rows, 4)


if __name__ == '__main__':
    unittest.main()
