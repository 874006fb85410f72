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
A sample script showing use of the charconv module to sweep every valid
parameter tuple of a construction, optionally across worker processes.
"""

import sys

from charconv import Configuration
from charconv import convo

from charconv.exceptions import InvalidConfigException, ParameterException

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


def run_sweep(config, theorem, q_values, m_values):
    """
    Constructs and verifies every tuple, printing one line per tuple.

    :Args:
        - config (:class:`.Configuration`): as returned by logging_mode()
        - theorem (str): t2, cor1, t3 or t4
        - q_values (list): Field sizes
        - m_values (list): Group ranks
    """
    try:
        rows = convo.sweep(theorem, q_values, m_values,
                           workers=config.workers(),
                           budgets=config.budgets())

    except ParameterException as e:
        print("Sweep failed: {0}".format(e))
        return

    for row in rows:
        print("{0} q={1} m={2} r={3} u={4}: {5} {6}".format(
            row['theorem'], row['q'], row['m'], row['r'], row['u'],
            row['label'], "ok" if row['passed'] else
            "FAILED " + ", ".join(row['checks'])))


if __name__ == "__main__":
    mode = logging_mode()
    run_sweep(mode, "t2", [3, 5], [5, 6, 7])
