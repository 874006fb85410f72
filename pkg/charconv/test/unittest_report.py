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
"""Unit tests for report"""

import json
import os
import shutil
import tempfile
import unittest

from charconv import convo
from charconv import report
from charconv.report import RunReport
from charconv.exceptions import MalformedFileException


class TestRunReport(unittest.TestCase):
    """Unit tests for RunReport"""

    def setUp(self):
        self.run = RunReport(["charconv", "construct", "t2"],
                             {'q': 3, 'm': 5})
        self.run.add_result({'label': "(32, 16, 10; 1, d_f ≥ 4)_3",
                             'checks': [{'name': "basic", 'status': "pass"}]})
        return super(TestRunReport, self).setUp()

    def test_add_result(self):
        """Test add_result and the failed flag"""
        self.assertFalse(self.run.failed)
        self.run.add_result({'label': "x"}, passed=None)
        self.assertFalse(self.run.failed)
        self.run.add_result({'label': "y"}, passed=False)
        self.assertTrue(self.run.failed)
        self.assertFalse(self.run.to_dict()['passed'])

    def test_annotate(self):
        """Test annotate and extend_annotations"""
        self.run.annotate("degree", 84, 168)
        self.run.extend_annotations([{'locus': "k", 'printed': 15,
                                      'computed': 16, 'note': "dual"}])
        self.assertEqual([a['locus'] for a in self.run.annotations],
                         ["degree", "k"])
        self.assertEqual(self.run.annotations[0]['note'], "")

    def test_render_text(self):
        """Test render as text"""
        self.run.annotate("degree", 84, 168, "sum over slices")
        text = self.run.render()
        lines = text.splitlines()
        self.assertEqual(lines[0], "command: charconv construct t2")
        self.assertEqual(lines[1], "  q: 3")
        self.assertIn("[1]", lines)
        self.assertIn("    - name=basic; status=pass", lines)
        self.assertIn("  - degree: printed 84, computed 168 (sum over slices)",
                      lines)
        self.assertEqual(lines[-1], "status: pass")
        self.assertEqual(text, self.run.render(report.TEXT))

    def test_render_json(self):
        """Test render as json"""
        doc = json.loads(self.run.render(report.JSON))
        self.assertEqual(doc['command'], ["charconv", "construct", "t2"])
        self.assertEqual(doc['parameters'], {'q': 3, 'm': 5})
        self.assertTrue(doc['passed'])
        self.assertEqual(doc['annotations'], [])
        self.assertEqual(self.run.render(report.JSON),
                         self.run.render(report.JSON))


class TestRecordFiles(unittest.TestCase):
    """Unit tests for save_record and load_record"""

    def setUp(self):
        self.test_dir = tempfile.mkdtemp(prefix="charconv_report_")
        self.path = os.path.join(self.test_dir, "record.json")
        self.record = convo.construct_unit_memory_binary(3, 5, 1, 2)
        return super(TestRecordFiles, self).setUp()

    def tearDown(self):
        shutil.rmtree(self.test_dir, ignore_errors=True)
        return super(TestRecordFiles, self).tearDown()

    def test_save_load(self):
        """Test save_record then load_record"""
        written = report.save_record(self.record, self.path)
        self.assertEqual(written, os.path.abspath(self.path))
        loaded = report.load_record(self.path)
        self.assertEqual(loaded.label(), self.record.label())
        self.assertEqual(loaded.G, self.record.G)
        self.assertEqual(loaded.slices, self.record.slices)

        with open(self.path, 'r', encoding='utf-8') as handle:
            doc = json.load(handle)
        self.assertIsNone(doc['verification'])

    def test_save_with_verification(self):
        """Test save_record with an embedded verification report"""
        verification = RunReport(["charconv", "verify"])
        report.save_record(self.record, self.path, verification)
        with open(self.path, 'r', encoding='utf-8') as handle:
            doc = json.load(handle)
        self.assertTrue(doc['verification']['passed'])
        self.assertEqual(report.load_record(self.path).label(),
                         self.record.label())

    def test_load_malformed(self):
        """Test load_record on files that are not records"""
        with self.assertRaises(MalformedFileException):
            report.load_record(os.path.join(self.test_dir, "missing.json"))

        with open(self.path, 'w') as handle:
            handle.write("{not json")
        with self.assertRaises(MalformedFileException):
            report.load_record(self.path)

        with open(self.path, 'w') as handle:
            json.dump({'kind': "something else"}, handle)
        with self.assertRaises(MalformedFileException):
            report.load_record(self.path)

        doc = self.record.to_dict()
        del doc['params']
        with open(self.path, 'w') as handle:
            json.dump(doc, handle)
        with self.assertRaises(MalformedFileException):
            report.load_record(self.path)


if __name__ == '__main__':
    unittest.main()
