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
"""Unit tests for cli"""

import io
import json
import os
import shutil
import tempfile
import unittest

try:
    from unittest import mock
except ImportError:
    import mock

from charconv import cli
from charconv import convo
from charconv import report
from charconv.config import Budgets, DEFAULT


def run_cli(argv, budgets=DEFAULT):
    """Run the console entry point with a mocked configuration."""
    stream = io.StringIO()
    with mock.patch('charconv.cli.Configuration') as mock_cfg:
        mock_cfg.return_value.budgets.return_value = budgets
        mock_cfg.return_value.workers.return_value = 0
        code = cli.main(argv, stream=stream)
    return code, stream.getvalue()


class TestCli(unittest.TestCase):
    """Unit tests for the charconv command line"""

    def setUp(self):
        self.test_dir = tempfile.mkdtemp(prefix="charconv_cli_")
        self.record_path = os.path.join(self.test_dir, "record.json")
        return super(TestCli, self).setUp()

    def tearDown(self):
        shutil.rmtree(self.test_dir, ignore_errors=True)
        return super(TestCli, self).tearDown()

    def test_usage(self):
        """Test argument errors map to the usage exit code"""
        with mock.patch('sys.stderr', new_callable=io.StringIO):
            code, _ = run_cli([])
            self.assertEqual(code, cli.EXIT_USAGE)

            code, _ = run_cli(["construct", "t9", "--q", "3", "--m", "5"])
            self.assertEqual(code, cli.EXIT_USAGE)

        with mock.patch('charconv.cli.Configuration') as mock_cfg:
            mock_cfg.side_effect = cli.InvalidConfigException("bad")
            self.assertEqual(cli.main(["table1"], stream=io.StringIO()),
                             cli.EXIT_USAGE)

    def test_construct(self):
        """Test construct on a unit memory code"""
        code, out = run_cli(["--format", "json", "construct", "t2", "--q",
                             "3", "--m", "5", "--r", "1", "--u", "2",
                             "--save", self.record_path])
        self.assertEqual(code, cli.EXIT_OK)
        doc = json.loads(out)
        self.assertTrue(doc['passed'])
        self.assertEqual(doc['parameters'],
                         {'theorem': "t2", 'q': 3, 'l': 2, 'm': 5, 'r': 1,
                          'u': 2})
        result = doc['results'][0]
        self.assertEqual(result['label'], "(32, 16, 10; 1, d_f ≥ 4)_3")
        self.assertEqual(result['certificate']['status'], "certified")
        self.assertTrue(all(c['status'] == "pass" for c in result['checks']))
        self.assertTrue(os.path.isfile(self.record_path))

        code, out = run_cli(["construct", "t2", "--q", "3", "--m", "5",
                             "--r", "1", "--u", "2", "--no-certify"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertTrue(out.endswith("status: pass\n"))
        self.assertNotIn("certificate", out)

    def test_construct_precondition(self):
        """Test construct with parameters outside the theorem"""
        code, out = run_cli(["construct", "t2", "--q", "3", "--m", "4",
                             "--r", "1", "--u", "2"])
        self.assertEqual(code, cli.EXIT_USAGE)
        self.assertTrue(out.startswith("error: "))

        code, out = run_cli(["construct", "t2", "--q", "4", "--m", "5",
                             "--r", "1", "--u", "2"])
        self.assertEqual(code, cli.EXIT_USAGE)

        code, out = run_cli(["--strict-conditions", "construct", "t4",
                             "--q", "7", "--l", "3", "--m", "3", "--r", "2",
                             "--u", "3", "--no-certify"])
        self.assertEqual(code, cli.EXIT_USAGE)
        self.assertTrue(out.startswith("error: "))

    def test_verify_and_encode(self):
        """Test verify and encode on a saved record"""
        record = convo.construct_unit_memory_binary(3, 5, 1, 2)
        report.save_record(record, self.record_path)

        code, out = run_cli(["verify", self.record_path, "--no-certify"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn("(32, 16, 10; 1, d_f ≥ 4)_3", out)

        message = ";".join(["1"] + ["0"] * 15)
        code, out = run_cli(["--format", "json", "encode", self.record_path,
                             message])
        self.assertEqual(code, cli.EXIT_OK)
        result = json.loads(out)['results'][0]
        self.assertEqual(len(result['codeword']), 32)
        self.assertGreaterEqual(result['weight'], 4)

        code, _ = run_cli(["encode", self.record_path, "1;0"])
        self.assertEqual(code, cli.EXIT_USAGE)

        dual_path = os.path.join(self.test_dir, "dual.json")
        report.save_record(convo.dual_record(record), dual_path)
        code, _ = run_cli(["encode", dual_path, "1"])
        self.assertEqual(code, cli.EXIT_USAGE)

    def test_malformed(self):
        """Test malformed record files"""
        with open(self.record_path, 'w') as handle:
            handle.write("not json")
        code, _ = run_cli(["verify", self.record_path])
        self.assertEqual(code, cli.EXIT_MALFORMED)

        code, _ = run_cli(["verify",
                           os.path.join(self.test_dir, "missing.json")])
        self.assertEqual(code, cli.EXIT_MALFORMED)

        record = convo.construct_unit_memory_binary(3, 5, 1, 2)
        report.save_record(record, self.record_path)
        code, _ = run_cli(["encode", self.record_path, "1,x"])
        self.assertEqual(code, cli.EXIT_MALFORMED)

    def test_mindist(self):
        """Test mindist on block codes"""
        code, out = run_cli(["mindist", "--q", "3", "--m", "3", "--r", "1"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(len([line for line in out.splitlines()
                              if line.strip().startswith("value")]), 3)

        code, _ = run_cli(["mindist", "--q", "3", "--m", "3", "--r", "1",
                           "--method", "columns"])
        self.assertEqual(code, cli.EXIT_OK)

        code, _ = run_cli(["mindist", "--q", "3", "--m", "3"])
        self.assertEqual(code, cli.EXIT_USAGE)

        code, _ = run_cli(["mindist", "--q", "3", "--m", "3", "--r", "1",
                           "--method", "free"])
        self.assertEqual(code, cli.EXIT_USAGE)

    def test_mindist_budget(self):
        """Test mindist beyond the codeword budget"""
        budgets = Budgets(codewords=10, subsets=10, search_nodes=10,
                          field_size=2 ** 20, group_size=2 ** 14)
        code, _ = run_cli(["mindist", "--q", "3", "--m", "3", "--r", "1",
                           "--method", "enum"], budgets)
        self.assertEqual(code, cli.EXIT_BUDGET)

    def test_params(self):
        """Test params csv output"""
        code, out = run_cli(["params", "t2", "--m-min", "4", "--m-max", "5"])
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(out.splitlines(), [
            ",".join(cli.PARAMS_COLUMNS),
            "t2,3,2,5,1,,2,32,16,10,1,4"])

        code, again = run_cli(["params", "t2", "--m-min", "4", "--m-max",
                               "5"])
        self.assertEqual(out, again)

        code, out = run_cli(["params", "cor1", "--m-min", "5", "--m-max",
                             "5"])
        self.assertEqual(out.splitlines()[1], "cor1,3,2,5,1,,2,32,16,10,μ,9")

        code, out = run_cli(["params", "t4", "--q", "5", "--q", "7", "--l",
                             "3", "--m-min", "3", "--m-max", "3"])
        self.assertEqual(code, cli.EXIT_OK)
        rows = out.splitlines()[1:]
        self.assertTrue(rows)
        self.assertTrue(all(row.startswith("t4,7,3,3,") for row in rows))

    def test_params_verify(self):
        """Test params with construction of every tuple"""
        code, out = run_cli(["params", "t2", "--m-min", "5", "--m-max", "5",
                             "--verify"])
        self.assertEqual(code, cli.EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0].split(",")[:3], ['theorem', 'q', 'l'])
        self.assertEqual(len(lines), 2)
        self.assertIn("True", lines[1])

    def test_table1(self):
        """Test table1 on one block"""
        code, out = run_cli(["--format", "json", "table1", "--block", "3"])
        self.assertEqual(code, cli.EXIT_OK)
        doc = json.loads(out)
        self.assertEqual(len(doc['results']), 6)
        self.assertEqual(len(doc['annotations']), 1)
        self.assertEqual(doc['annotations'][0]['printed'],
                         "(32, 15, 10; μ, d_f ≥ 9)_3")
        self.assertIn('prior_work', doc['parameters'])

    def test_examples(self):
        """Test examples"""
        code, out = run_cli(["--format", "json", "examples"])
        self.assertEqual(code, cli.EXIT_OK)
        doc = json.loads(out)
        self.assertEqual(len(doc['results']), 4)
        self.assertEqual(len(doc['annotations']), 2)
        self.assertFalse(any('prior_work' in r for r in doc['results']))


class TestParseMessage(unittest.TestCase):
    """Unit tests for parse_message"""

    def test_parse_message(self):
        """Test parse_message"""
        self.assertEqual(cli.parse_message("1,2;0;"), [(1, 2), (0,), ()])


if __name__ == '__main__':
    unittest.main()
