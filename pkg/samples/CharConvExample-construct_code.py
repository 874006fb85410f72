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
A sample script showing use of the charconv module to construct a unit
memory convolutional code, verify it and derive its dual record.
"""

import sys

from charconv import (
    Configuration,
    construct_unit_memory_binary,
    dual_record,
    verify_record)

from charconv.exceptions import (
    InvalidConfigException,
    PreconditionException)

LOG_LEVEL = "info"


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


def print_report(verification):
    """
    Prints every check of a verification report.

    :Args:
        - verification (:class:`.VerificationReport`): as returned by
          verify_record()
    """
    for check in verification.checks:
        print("  {0:<22} {1:<5} {2}".format(check.name, check.status,
                                           check.detail))


def construct_and_verify(config, q, m, r, u):
    """
    Builds the code for (q, m, r, u), verifies it and its dual.

    :Args:
        - config (:class:`.Configuration`): as returned by logging_mode()
    """
    budgets = config.budgets()
    try:
        record = construct_unit_memory_binary(q, m, r, u, budgets=budgets)

    except PreconditionException as e:
        print("Parameters rejected: {0}".format(e))
        return

    print(record.label())
    print_report(verify_record(record, budgets))

    dual = dual_record(record)
    print(dual.label())
    print_report(verify_record(dual, budgets))


if __name__ == "__main__":
    mode = logging_mode()
    construct_and_verify(mode, 3, 6, 1, 2)
