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
A sample script showing use of the charconv module to reproduce the
reference table of published parameters and list its discrepancies.
"""

import sys

from charconv import Configuration
from charconv import table1

from charconv.exceptions import InvalidConfigException

LOG_LEVEL = "warning"


def logging_mode():
    """
    Sets configuration to chosen log_level using existing
    configuration setup.

    :Returns:
        - a :class:`.Configuration` instance object
    """
    try:
        return Configuration(log_level=LOG_LEVEL)

    except InvalidConfigException as e:
        print("Invalid Configuration: {0}".format(e))
        sys.exit(2)


def reproduce_table(config, verify):
    """
    Prints each printed row next to the computed one.

    :Args:
        - config (:class:`.Configuration`): as returned by logging_mode()
        - verify (bool): Also construct and verify every matched row.
    """
    rows = table1.reproduce(verify=verify, budgets=config.budgets())
    for row in rows:
        print("q={0:<3} {1:<10} {2} -> {3}".format(
            row['block'], row['status'], row['printed'],
            row['computed'] or "-"))
        for note in row['notes']:
            print("        note: {0}".format(note))

    mismatches = [r for r in rows if r['status'] == table1.MISMATCH]
    print("{0} rows, {1} mismatches".format(len(rows), len(mismatches)))


if __name__ == "__main__":
    mode = logging_mode()
    reproduce_table(mode, "--verify" in sys.argv[1:])
