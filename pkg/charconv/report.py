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
Run reports and record documents.

A :class:`RunReport` collects what one command did: the command echo, the
parameters, designed values, check outcomes and annotations. It renders
either as aligned text or as json; both are deterministic for identical
runs.
"""

import collections
import json
import logging
import os

from .convo import ConvRecord
from .exceptions import MalformedFileException

LOG = logging.getLogger('charconv')

TEXT = "text"
JSON = "json"
FORMATS = (TEXT, JSON)


class RunReport(object):
    """
    The outcome of one command.

    :Attributes:
        - command (list): The argument vector echoed back.
        - parameters (dict)
        - results (list): Ordered dicts, one per record, row or check.
        - annotations (list): Printed-vs-computed differences; each has a
          ``locus``, a ``printed`` and a ``computed`` value.
        - failed (bool): Whether any executed check failed.
    """

    def __init__(self, command, parameters=None):
        self.command = list(command)
        self.parameters = collections.OrderedDict(parameters or {})
        self.results = []
        self.annotations = []
        self.failed = False

    def add_result(self, result, passed=True):
        self.results.append(result)
        if passed is False:
            self.failed = True

    def annotate(self, locus, printed, computed, note=""):
        """Record a difference between a printed and a computed value."""
        self.annotations.append(collections.OrderedDict([
            ('locus', locus), ('printed', printed), ('computed', computed),
            ('note', note)]))

    def extend_annotations(self, annotations):
        for item in annotations:
            self.annotate(item.get('locus', ''), item.get('printed'),
                          item.get('computed'), item.get('note', ''))

    def to_dict(self):
        return collections.OrderedDict([
            ('command', self.command),
            ('parameters', self.parameters),
            ('passed', not self.failed),
            ('results', self.results),
            ('annotations', self.annotations),
        ])

    def render(self, fmt=TEXT):
        """The report as a string in ``text`` or ``json`` form."""
        if fmt == JSON:
            return json.dumps(self.to_dict(), indent=2) + "\n"
        return render_text(self.to_dict())


def _text_value(value):
    if isinstance(value, (list, tuple)):
        return ", ".join(_text_value(v) for v in value)
    if isinstance(value, dict):
        return "; ".join("{0}={1}".format(k, _text_value(v))
                         for k, v in value.items())
    if value is None:
        return "-"
    return str(value)


def render_text(doc):
    """Plain text layout of a report document."""
    lines = ["command: " + " ".join(doc['command'])]
    for key, value in doc['parameters'].items():
        lines.append("  {0}: {1}".format(key, _text_value(value)))

    for index, result in enumerate(doc['results'], 1):
        lines.append("")
        lines.append("[{0}]".format(index))
        width = max([len(k) for k in result] or [0])
        for key, value in result.items():
            if isinstance(value, list) and value and isinstance(value[0],
                                                                dict):
                lines.append("  {0}:".format(key))
                for item in value:
                    lines.append("    - " + _text_value(item))
            else:
                lines.append("  {0}: {1}".format(key.ljust(width),
                                                 _text_value(value)))

    if doc['annotations']:
        lines.append("")
        lines.append("annotations:")
        for item in doc['annotations']:
            lines.append("  - {0}: printed {1}, computed {2}{3}".format(
                item['locus'], _text_value(item['printed']),
                _text_value(item['computed']),
                " ({0})".format(item['note']) if item['note'] else ""))

    lines.append("")
    lines.append("status: " + ("pass" if doc['passed'] else "fail"))
    return "\n".join(lines) + "\n"


def record_document(record, verification=None):
    """Record document with an optional embedded verification report."""
    doc = record.to_dict()
    doc['verification'] = (verification.to_dict()
                           if verification is not None else None)
    return doc


def save_record(record, path, verification=None):
    """Write a record document as json.

    :Returns:
        - The absolute path written.
    """
    path = os.path.abspath(path)
    with open(path, 'w', encoding='utf-8') as handle:
        json.dump(record_document(record, verification), handle, indent=2)
        handle.write("\n")
    LOG.info("Saved {0} to {1}".format(record.label(), path))
    return path


def load_record(path):
    """Read a record document.

    :Raises:
        - :exc:`.MalformedFileException` if the file is missing, not json
          or not a record.
    """
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            doc = json.load(handle)
    except (IOError, OSError) as exp:
        raise MalformedFileException(
            "Cannot read record {0}: {1}".format(path, exp))
    except ValueError as exp:
        raise MalformedFileException(
            "Record {0} is not valid json: {1}".format(path, exp))
    return ConvRecord.from_dict(doc)
