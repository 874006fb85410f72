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
"""Logger class and helpers shared by the main process and sweep workers."""

import logging

LOG_NAME = 'charconv'
LOG_FORMAT = "%(asctime)-15s [%(levelname)s] %(module)s: %(message)s"


def console_handler(level=None):
    """Create a stderr handler in the package log format.

    :Kwargs:
        - level (int): Optional handler level.

    :Returns:
        - A :class:`logging.StreamHandler`.
    """
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    if level is not None:
        handler.setLevel(level)
    return handler


class PickleLog(logging.getLoggerClass()):
    """PickleLog

    Logger that can be shipped to :mod:`multiprocessing` sweep workers.
    File handlers stay in the parent process; a worker gets a fresh
    console handler.
    """

    def __getstate__(self):
        """Drop the handlers before pickling.

        :Returns:
            - The Logger dict without its 'handlers' key.
        """
        state = dict(self.__dict__)
        state.pop('handlers', None)
        return state

    def __setstate__(self, state):
        """Rebuild the logger in a worker with a console handler only.

        :Args:
            - state (dict): The pickled logger dict.
        """
        state['handlers'] = [console_handler(state.get('level'))]
        self.__dict__ = state


def init_worker(level):
    """Pool initializer: configure the package logger in a sweep worker.

    Workers inherit no handlers when started with the 'spawn' method, so
    the console handler and the session level are reinstated here.

    :Args:
        - level (int): The logging level of the parent session.
    """
    logger = logging.getLogger(LOG_NAME)
    if not logger.handlers:
        logger.addHandler(console_handler(level))
    logger.setLevel(level)
    logger.debug("Sweep worker logging at level {0}".format(level))
