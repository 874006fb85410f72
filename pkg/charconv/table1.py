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
Reference table of published code parameters and its reproduction.

Each printed "new code" row is matched by an inverse search over the
valid ``(m, r, u)`` of the unit memory construction (memory 1) or of its
dual (memory ``μ``). The comparison column holds cited prior-work codes;
it is reference text only and never recomputed.
"""

import collections
import logging

from . import convo
from .config import DEFAULT
from .exceptions import ParameterException, PreconditionException

LOG = logging.getLogger('charconv')

MATCH = "match"
MISMATCH = "mismatch"
UNRESOLVED = "unresolved"

PRIOR_WORK_SOURCE = ("BCH-derived unit memory codes (2007); cited "
                     "reference values, not computed")

PrintedRow = collections.namedtuple(
    'PrintedRow', ['block', 'n', 'k', 'degree', 'memory', 'df', 'q',
                   'prior'])
PrintedRow.__doc__ = """One printed row.

``block`` is the field size of the table block the row sits in; ``q`` is
the subscript printed on the row itself. ``memory`` is 1 or ``None`` for
``μ``. ``prior`` is the comparison column verbatim.
"""


def _rows(block, entries):
    return [PrintedRow(block, *entry) for entry in entries]


REFERENCE_ROWS = (
    _rows(3, [
        (32, 15, 10, None, 9, 3, "(32, 16, γ; 1, d_f ≥ 5)_3"),
        (64, 42, 15, 1, 4, 3, "(64, 32, γ; 1, d_f ≥ 6)_3"),
        (64, 22, 15, None, 17, 3, "(64, 16, γ; 1, d_f ≥ 8)_3"),
        (128, 64, 35, 1, 8, 3, "(128, 64, γ; 1, d_f ≥ 6)_3"),
        (128, 64, 35, 1, 8, 3, "(128, 32, γ; 1, d_f ≥ 8)_3"),
        (128, 64, 35, None, 17, 3, "(128, 32, γ; 1, d_f ≥ 8)_3"),
    ]) +
    _rows(5, [
        (32, 15, 10, None, 9, 5, "(32, 16, γ; 1, d_f ≥ 5)_5"),
        (64, 42, 15, 1, 4, 5, "(64, 32, γ; 1, d_f ≥ 5)_5"),
        (64, 22, 15, None, 17, 5, "(64, 16, γ; 1, d_f ≥ 6)_5"),
        (128, 64, 35, 1, 8, 5, "(128, 64, γ; 1, d_f ≥ 5)_5"),
        (128, 64, 35, 1, 8, 5, "(128, 32, γ; 1, d_f ≥ 6)_5"),
        (128, 64, 35, None, 17, 5, "----"),
    ]) +
    _rows(7, [
        (32, 15, 10, None, 9, 7, "(32, 16, γ; 1, d_f ≥ 8)_7"),
        (64, 42, 15, 1, 4, 7, "(64, 48, γ; 1, d_f ≥ 5)_7"),
        (64, 22, 15, None, 17, 7, "(64, 8, γ; 1, d_f ≥ 14)_7"),
        (128, 64, 35, None, 17, 7, "(128, 64, γ; 1, d_f ≥ 8)_7"),
        (128, 64, 35, None, 17, 7, "(128, 16, γ; 1, d_f ≥ 14)_7"),
    ]) +
    _rows(9, [
        (32, 15, 10, None, 9, 9, "(32, 16, γ; 1, d_f ≥ 8)_9"),
        (64, 42, 15, 1, 4, 9, "(64, 48, γ; 1, d_f ≥ 5)_9"),
        (64, 22, 15, None, 17, 9, "(64, 8, γ; 1, d_f ≥ 12)_9"),
        (128, 64, 35, None, 17, 7, "(128, 64, γ; 1, d_f ≥ 8)_7"),
        (128, 64, 35, None, 17, 7, "(128, 16, γ; 1, d_f ≥ 12)_7"),
    ]) +
    _rows(11, [
        (32, 15, 10, None, 9, 11, "(32, 8, γ; 1, d_f ≥ 6)_11"),
        (64, 42, 15, 1, 4, 11, "(64, 32, γ; 1, d_f ≥ 5)_11"),
        (64, 22, 15, None, 17, 11, "(64, 16, γ; 1, d_f ≥ 6)_11"),
        (128, 64, 35, 1, 8, 11, "(128, 64, γ; 1, d_f ≥ 5)_11"),
        (128, 64, 35, None, 17, 11, "(128, 32, γ; 1, d_f ≥ 6)_11"),
    ])
)

# Printed example codes outside the table.
REFERENCE_EXAMPLES = (
    PrintedRow(3, 32, 17, 10, 1, 4, 3, None),
    PrintedRow(3, 32, 15, 10, None, 9, 3, None),
    PrintedRow(3, 64, 42, 15, 1, 4, 3, None),
    PrintedRow(3, 64, 22, 15, None, 17, 3, None),
)


def printed_label(row):
    return "({0}, {1}, {2}; {3}, d_f ≥ {4})_{5}".format(
        row.n, row.k, row.degree, "μ" if row.memory is None else row.memory,
        row.df, row.q)


def _candidates(row):
    """Designed tuples of every valid construction of the row's length."""
    m = row.n.bit_length() - 1
    if 2 ** m != row.n:
        return []
    theorem = "t2" if row.memory == 1 else "cor1"
    out = []
    for params in convo.valid_parameters(theorem, [m]):
        designed = convo.designed_tuple(theorem, row.block, 2, m,
                                        params['r'], params['u'])
        out.append((theorem, params, designed))
    return out


def match_row(row):
    """Inverse search for a printed row.

    :Returns:
        - An ordered dict with the status (``match``, ``mismatch`` or
          ``unresolved``), the printed and computed labels, the parameters
          found and any notes.
    """
    printed = (row.n, row.k, row.degree, row.memory, row.df)
    found = collections.OrderedDict([
        ('block', row.block),
        ('printed', printed_label(row)),
        ('computed', None),
        ('status', UNRESOLVED),
        ('theorem', None),
        ('parameters', None),
        ('notes', []),
        ('prior_work', row.prior),
    ])
    if row.q != row.block:
        found['notes'].append(
            "row printed with subscript {0} inside the q = {1} block".format(
                row.q, row.block))

    candidates = _candidates(row)
    exact = [c for c in candidates if c[2] == printed]
    near = [c for c in candidates
            if (c[2][0], c[2][2], c[2][3], c[2][4]) ==
            (row.n, row.degree, row.memory, row.df)]
    pick = exact[0] if exact else (near[0] if len(near) == 1 else None)
    if pick is None:
        LOG.warning("No construction reproduces {0}".format(found['printed']))
        return found

    theorem, params, designed = pick
    found['status'] = MATCH if exact else MISMATCH
    found['theorem'] = theorem
    found['parameters'] = collections.OrderedDict(
        [('q', row.block), ('m', params['m']), ('r', params['r']),
         ('u', params['u'])])
    found['computed'] = printed_label(row._replace(
        k=designed[1], degree=designed[2], memory=designed[3],
        df=designed[4], q=row.block))
    if not exact:
        found['notes'].append(
            "printed k = {0}, formula gives k = {1}".format(row.k,
                                                          designed[1]))
        LOG.warning("Printed {0} differs from computed {1}".format(
            found['printed'], found['computed']))
    return found


def _verify_match(entry, budgets):
    """Construct a matched row and run the structural checks."""
    params = entry['parameters']
    try:
        record = convo.construct(entry['theorem'], params['q'], 2,
                                 params['m'], params['r'], params['u'],
                                 budgets=budgets)
    except (PreconditionException, ParameterException) as exp:
        return False, str(exp)
    report = convo.verify_record(record, budgets, certify=False)
    failed = [c.name for c in report.checks if c.status == "fail"]
    return report.passed, ", ".join(failed)


def reproduce(rows=REFERENCE_ROWS, blocks=None, verify=False, budgets=None):
    """Recompute every printed row.

    :Kwargs:
        - rows (list): Printed rows, default the full table.
        - blocks (list): Restrict to these table blocks.
        - verify (bool): Also construct each resolved row and run the
          structural checks.
        - budgets (:class:`.Budgets`)

    :Returns:
        - List of ordered dicts as from :func:`match_row`, in table order.
    """
    budgets = budgets or DEFAULT
    results = []
    for row in rows:
        if blocks and row.block not in blocks:
            continue
        entry = match_row(row)
        if verify and entry['parameters'] is not None:
            passed, detail = _verify_match(entry, budgets)
            entry['verified'] = passed
            if detail:
                entry['notes'].append("failed checks: " + detail)
        results.append(entry)
    LOG.info("Reproduced {0} rows: {1} mismatches".format(
        len(results), sum(1 for r in results if r['status'] == MISMATCH)))
    return results
