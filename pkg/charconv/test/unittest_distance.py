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
"""Unit tests for distance"""

import unittest

from charconv import charcode
from charconv import convo
from charconv import distance
from charconv import gf
from charconv.config import Budgets
from charconv.matfq import MatrixFq
from charconv.polymat import PolyMatrix, encode, weight
from charconv.exceptions import BudgetExceededException, ParameterException


class TestBlockDistance(unittest.TestCase):
    """Unit tests for the block code oracles"""

    def setUp(self):
        self.gf3 = gf.make_field(3)
        self.code = charcode.binary_code(self.gf3, 3, 1)
        self.repetition = MatrixFq(self.gf3, [[1, 1, 1]])
        return super(TestBlockDistance, self).setUp()

    def test_enumeration(self):
        """Test min_distance_enumeration"""
        found = distance.min_distance_enumeration(self.code.G)
        self.assertEqual(found.value, 4)
        self.assertTrue(found.exact)
        self.assertEqual(found.method, distance.ENUMERATION)
        self.assertEqual(len(found.witness['message']), 4)

        with self.assertRaises(BudgetExceededException):
            distance.min_distance_enumeration(self.code.G, budget=10)
        with self.assertRaises(ParameterException):
            distance.min_distance_enumeration(MatrixFq.zeros(self.gf3, 1, 3))

    def test_weight_distribution(self):
        """Test weight_distribution"""
        self.assertEqual(distance.weight_distribution(self.repetition),
                         [1, 0, 0, 2])
        dist = distance.weight_distribution(self.code.G)
        self.assertEqual(sum(dist), 81)
        self.assertEqual(dist[1:4], [0, 0, 0])

    def test_macwilliams(self):
        """Test the MacWilliams transform on the repetition code"""
        self.assertEqual(distance.krawtchouk(3, 3, 1, 1), 3)
        self.assertEqual(distance.krawtchouk(3, 3, 0, 2), 1)
        dual = distance.macwilliams_transform([1, 0, 0, 2], 3)
        self.assertEqual(dual, [1, 0, 6, 2])
        self.assertEqual(distance.min_nonzero_weight(dual), 2)
        self.assertIsNone(distance.min_nonzero_weight([1, 0, 0]))

        with self.assertRaises(ParameterException):
            distance.macwilliams_transform([1, 1, 0, 0], 3)

        found = distance.dual_distance_enumeration(self.repetition)
        self.assertEqual(found.value, 2)
        self.assertTrue(found.exact)

    def test_dependent_columns(self):
        """Test min_dependent_columns"""
        found = distance.min_dependent_columns(self.code.H, 4)
        self.assertEqual(found.value, 4)
        self.assertTrue(found.exact)
        self.assertEqual(found.method, distance.DEPENDENT_COLUMNS)
        self.assertEqual(len(found.witness['columns']), 4)

        capped = distance.min_dependent_columns(self.code.H, 3)
        self.assertEqual(capped.value, 4)
        self.assertFalse(capped.exact)
        self.assertEqual(capped.status, "lower-bound")

        zero_col = distance.min_dependent_columns(
            MatrixFq(self.gf3, [[1, 0]]), 2)
        self.assertEqual(zero_col.value, 1)
        self.assertEqual(zero_col.witness['columns'], [1])

        with self.assertRaises(ParameterException):
            distance.min_dependent_columns(MatrixFq.identity(self.gf3, 3), 3)
        with self.assertRaises(BudgetExceededException):
            distance.min_dependent_columns(self.code.H, 4, budget=10)

    def test_oracles_agree(self):
        """Test dependent columns against enumeration for dual distances"""
        for q, m, r in [(3, 3, 1), (5, 3, 0), (3, 4, 1)]:
            code = charcode.binary_code(gf.make_field(q), m, r)
            by_columns = distance.min_dependent_columns(
                code.G, code.designed_dual_distance)
            by_transform = distance.dual_distance_enumeration(code.G)
            self.assertEqual(by_columns.value, by_transform.value)
            self.assertEqual(by_columns.value, code.designed_dual_distance)

    def test_block_distance_routes(self):
        """Test block_distance_routes"""
        designed, routes = distance.block_distance_routes(self.gf3, 2, 3, 1,
                                                          dual=False)
        self.assertEqual(designed, 4)
        self.assertEqual(len(routes), 3)
        self.assertEqual(set(r.value for r in routes), set([4]))

        designed, routes = distance.block_distance_routes(self.gf3, 2, 3, 1,
                                                          dual=True)
        self.assertEqual(designed, 4)
        self.assertEqual(set(r.value for r in routes), set([4]))


class TestFreeDistance(unittest.TestCase):
    """Unit tests for the free distance search"""

    def setUp(self):
        self.gf3 = gf.make_field(3)
        # (1 + D, 1 + D^2)
        self.G = PolyMatrix.from_entries(self.gf3, [[(1, 1), (1, 0, 1)]])
        return super(TestFreeDistance, self).setUp()

    def test_trellis_search(self):
        """Test free_distance_search with an exhaustive state search"""
        found = distance.free_distance_search(self.G)
        self.assertEqual(found.value, 4)
        self.assertTrue(found.exact)
        self.assertEqual(found.method, distance.TRELLIS_SEARCH)
        self.assertEqual(found.witness['input'], [[1]])

        capped = distance.free_distance_search(self.G, weight_cap=3)
        self.assertIsNone(capped.value)
        self.assertEqual(capped.status, "no-witness")

    def test_bounded_search(self):
        """Test free_distance_search above the node budget"""
        found = distance.free_distance_search(self.G, degree_cap=2,
                                              budget=20)
        self.assertEqual(found.value, 4)
        self.assertFalse(found.exact)
        self.assertEqual(found.status, "upper-witness")
        self.assertEqual(found.search_caps, (None, 2))

    def test_bruteforce(self):
        """Test free_distance_bruteforce against the search"""
        self.assertEqual(distance.free_distance_bruteforce(self.G, 3), 4)

        block = PolyMatrix.from_entries(self.gf3, [[(1,), (1, 1), (0, 1)],
                                                   [(0, 1), (1,), (2,)]])
        search = distance.free_distance_search(block)
        self.assertEqual(search.value,
                         distance.free_distance_bruteforce(block, 2))

        with self.assertRaises(BudgetExceededException):
            distance.free_distance_bruteforce(self.G, 5, budget=100)

    def test_delay_code(self):
        """Test the free distance of (1, D)"""
        delay = PolyMatrix.from_entries(self.gf3, [[(1,), (0, 1)]])
        found = distance.free_distance_search(delay)
        self.assertTrue(found.exact)
        self.assertEqual(found.value, 2)
        self.assertEqual(distance.free_distance_bruteforce(delay, 3), 2)

    def test_search_matches_bruteforce(self):
        """Test the search and brute force agree on small generators"""
        gf5 = gf.make_field(5)
        cases = [
            (PolyMatrix.from_entries(self.gf3, [[(1, 0, 1), (1, 1, 1)]]), 5),
            (PolyMatrix.from_entries(self.gf3, [[(1,), (1, 1)]]), 3),
            (PolyMatrix.from_entries(gf5, [[(1, 1), (1, 2)]]), 4),
            (PolyMatrix.from_entries(self.gf3, [[(1,), (0,), (1, 1)],
                                                [(0,), (1,), (0, 1)]]), 2),
            (self.G, 4),
        ]
        for matrix, expected in cases:
            search = distance.free_distance_search(matrix)
            self.assertTrue(search.exact)
            self.assertEqual(search.value, expected, matrix.format())
            self.assertEqual(distance.free_distance_bruteforce(matrix, 2),
                             expected, matrix.format())
            self.assertEqual(weight(encode(search.witness['input'], matrix)),
                             expected)

    def test_witness_on_records(self):
        """Test bounded search witnesses never beat the designed bound"""
        records = [convo.construct_unit_memory_binary(3, 5, 1, 2),
                   convo.construct_unit_memory_binary(3, 6, 1, 2),
                   convo.construct_unit_memory_lary(7, 3, 3, 1, 2)]
        for record in records:
            found = distance.free_distance_search(record.G, degree_cap=1,
                                                  budget=500)
            self.assertFalse(found.exact)
            self.assertEqual(found.status, "upper-witness")
            self.assertGreaterEqual(found.value, record.df_lower,
                                    record.label())
            codeword = encode(found.witness['input'], record.G)
            self.assertEqual(weight(codeword), found.value)


class TestCertify(unittest.TestCase):
    """Unit tests for certify_bound"""

    def test_certify_primal(self):
        """Test certify_bound on a unit memory record"""
        record = convo.construct_unit_memory_binary(3, 5, 1, 2)
        cert = distance.certify_bound(record)
        self.assertEqual(cert.status, distance.CERTIFIED)
        self.assertEqual(cert.designed, 4)
        self.assertEqual(cert.value, 4)
        self.assertTrue(cert.passed)
        self.assertEqual(cert.to_dict()['bound_kind'], "primal")

    def test_certify_dual_downscale(self):
        """Test certify_bound on a dual record beyond the budget"""
        dual = convo.dual_record(convo.construct_unit_memory_binary(3, 5, 1,
                                                                     2))
        cert = distance.certify_bound(dual)
        self.assertEqual(cert.status, distance.UNCERTIFIED)
        self.assertEqual(cert.designed, 8)
        self.assertEqual([d['m'] for d in cert.downscale], [3, 4])
        self.assertTrue(all(d['status'] == distance.CERTIFIED
                            for d in cert.downscale))
        self.assertEqual(cert.chain['d_mu'], 2)
        self.assertTrue(cert.chain['d_mu_exact'])
        self.assertEqual(cert.chain['lower'], 10)
        self.assertEqual(cert.chain['upper'], 16)

    def test_certify_small_budget(self):
        """Test certify_bound with budgets too small for any oracle"""
        budgets = Budgets(codewords=1, subsets=1, search_nodes=1,
                          field_size=2 ** 20, group_size=2 ** 14)
        record = convo.construct_unit_memory_binary(3, 5, 1, 2)
        cert = distance.certify_bound(record, budgets)
        self.assertEqual(cert.status, distance.UNCERTIFIED)
        self.assertIsNone(cert.value)
        self.assertEqual([d['m'] for d in cert.downscale], [2, 3, 4])
        self.assertEqual([d['status'] for d in cert.downscale],
                         [distance.CERTIFIED, distance.UNCERTIFIED,
                          distance.UNCERTIFIED])


if __name__ == '__main__':
    unittest.main()
