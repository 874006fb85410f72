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
"""Session configuration: search budgets, sweep workers and logging."""

import collections
import configparser
import logging
import os
import shutil
import time

from .exceptions import InvalidConfigException
from .log import LOG_NAME, LOG_FORMAT

LOGGERS = {}
FILE_LOG = True
STREAM_LOG = True

DEFAULT_BUDGETS = collections.OrderedDict([
    ('codewords', 10 ** 7),
    ('subsets', 10 ** 7),
    ('search_nodes', 10 ** 6),
    ('field_size', 2 ** 20),
    ('group_size', 2 ** 14),
])

LEVELS = {'debug': 10,
          'info': 20,
          'warning': 30,
          'error': 40,
          'critical': 50}


Budgets = collections.namedtuple('Budgets', list(DEFAULT_BUDGETS))
Budgets.__doc__ = """Work caps for the exhaustive oracles.

:Attributes:
    - codewords (int): Max codewords enumerated by one enumeration.
    - subsets (int): Max column subsets tried by one dependent-column search.
    - search_nodes (int): Max nodes of one free-distance search.
    - field_size (int): Largest field cardinality accepted.
    - group_size (int): Largest group order l^m accepted.
"""

DEFAULT = Budgets(**DEFAULT_BUDGETS)


class Configuration(object):
    """
    Manage the configuration of a charconv session: oracle budgets,
    the number of sweep workers and logging. The distance oracles and the
    sweeps take their caps from a :class:`.Configuration`.
    """

    def __init__(self,
                 data_path=None,
                 log_level=None,
                 name="charconv.ini",
                 datadir="CharConvData",
                 default=False):
        """
        A new :class:`.Configuration` will attempt to use an existing saved
        config, and if one is not found default configuration will be used.
        Default configuration can also be forced, though this will overwrite
        an existing config if one exists.

        :Kwargs:
            - data_path (str): The path where charconv data (logs, config)
              will be saved. If not set, defaults to the user directory.
            - log_level (str): The level of logging during the session.
              Must be a string in ``['debug', 'info', 'warning', 'error',
              'critical']`` or the matching integer. Default is 'warning'.
            - name (str): The name of the configuration file.
            - datadir (str): The name of the directory created to hold the
              config and log files.
            - default (bool): If ``True``, the default configuration is used
              and saved regardless of an existing configuration file.

        :Raises:
            - :exc:`.InvalidConfigException` if a saved budget is not a
              positive integer.
        """
        self._config = configparser.RawConfigParser()
        self._config.optionxform = str
        self._dir = datadir

        if data_path and self._check_directory(data_path):
            self._write_file = True
            cfg_path = os.path.join(data_path, self._dir)
        else:
            self._write_file = self._check_directory(os.path.expanduser("~"))
            cfg_path = os.path.join(os.path.expanduser("~"), self._dir)

        self._cfg_file = os.path.join(cfg_path, name)
        self._log = self._configure_logging(cfg_path)

        if not default and os.path.isfile(self._cfg_file):
            try:
                self._config.read(self._cfg_file)
                self._fill_missing()

            except (EnvironmentError, configparser.Error) as exp:
                self._log.warning("Failed to load config {0} with "
                                  "error: {1}".format(self._cfg_file, exp))
                self._config = configparser.RawConfigParser()
                self._config.optionxform = str
                self._set_defaults()
        else:
            self._set_defaults()

        if LOGGERS.get('level'):
            current_level = LOGGERS.get('level')
        else:
            current_level = int(self._config.get("Logging", "level"))

        self._set_logging_level(log_level if log_level else current_level)
        self.budgets()

    def _set_defaults(self):
        """Create all default config data and save it."""
        if not self._config.has_section("Budgets"):
            self._config.add_section("Budgets")
        for key, value in DEFAULT_BUDGETS.items():
            self._config.set("Budgets", key, str(value))

        if not self._config.has_section("Sweep"):
            self._config.add_section("Sweep")
        self._config.set("Sweep", "workers", "0")

        if not self._config.has_section('Logging'):
            self._config.add_section("Logging")

        log_dir = os.path.dirname(self._cfg_file)
        self._config.set("Logging", "output",
                         os.path.join(log_dir, "charconv.log"))
        self._config.set("Logging", "level", "30")
        LOGGERS.update({'level': 30})

        self.save_config()

    def _fill_missing(self):
        """Add default values for any options an older file lacks."""
        for section in ("Budgets", "Sweep", "Logging"):
            if not self._config.has_section(section):
                self._config.add_section(section)

        for key, value in DEFAULT_BUDGETS.items():
            if not self._config.has_option("Budgets", key):
                self._config.set("Budgets", key, str(value))

        if not self._config.has_option("Sweep", "workers"):
            self._config.set("Sweep", "workers", "0")

        if not self._config.has_option("Logging", "level"):
            self._config.set("Logging", "level", "30")

    def _check_directory(self, test_dir):
        """
        Check that the assigned directory exists and is able to be
        written to. Because logging has not yet been configured at this
        point, any errors are only printed.

        :Args:
            - test_dir (str): Full path to the parent directory.

        :Returns:
            - ``True`` if the directory exists and can be written to,
              else ``False``.
        """
        test_dir = os.path.join(test_dir, self._dir)
        try:
            if not os.path.isdir(test_dir):
                os.mkdir(test_dir)

            with open(os.path.join(test_dir, "cc_test"), 'w') as test_file:
                test_file.write("ok")

            os.remove(os.path.join(test_dir, "cc_test"))
            return True

        except (IOError, OSError) as exp:
            print("charconv is unable to write to directory: {path}\n"
                  "Error: {error}\n"
                  "The session will continue without writing config or "
                  "log files.".format(path=test_dir, error=exp))
            return False

    def _configure_logging(self, data_path):
        """
        Create the package logger. A new session appends to an existing
        log file; a log file over 10mb is archived first.

        :Args:
            - data_path (str): Directory of the log file.

        :Returns:
            - The configured ``charconv`` logger.
        """
        if not self._config.has_section('Logging'):
            self._config.add_section('Logging')

        if LOGGERS.get(LOG_NAME):
            return LOGGERS.get(LOG_NAME)

        log_format = logging.Formatter(LOG_FORMAT)
        logger = logging.getLogger(LOG_NAME)

        if STREAM_LOG:
            console_logging = logging.StreamHandler()
            console_logging.setFormatter(log_format)
            logger.addHandler(console_logging)

        if self._write_file and FILE_LOG:
            logfile = os.path.join(data_path, "charconv.log")

            if os.path.isfile(logfile) and os.path.getsize(logfile) > 10485760:
                split_log = os.path.splitext(logfile)
                timestamp = time.strftime("%Y-%m-%d-%H-%M-%S")
                shutil.move(logfile, "{root}-{date}{ext}".format(
                    root=split_log[0],
                    date=timestamp,
                    ext=split_log[1]))

            file_logging = logging.FileHandler(logfile)
            file_logging.setFormatter(log_format)
            logger.addHandler(file_logging)

        LOGGERS.update({LOG_NAME: logger})
        logger.debug("Logger created with file={0}".format(self._write_file))
        return logger

    def _set_logging_level(self, level):
        """Set logging level.

        :Args:
            - level (str): One of ``['debug', 'info', 'warning', 'error',
              'critical']`` (any case) or the matching integer. Anything
              else falls back to 'warning'.

        :Returns:
            - The level name applied (str).
        """
        if isinstance(level, str) and level.isdigit():
            level = int(level)

        if isinstance(level, str) and level.lower() in LEVELS:
            level = LEVELS[level.lower()]

        elif not isinstance(level, int) or level not in LEVELS.values():
            self._log.warning("Logging level '{0}' not recognized. "
                              "Defaulting to WARNING.".format(level))
            level = 30

        self._config.set("Logging", "level", str(level))
        self._log.setLevel(level)
        for handle in self._log.handlers:
            handle.setLevel(level)

        LOGGERS.update({'level': level})
        self._log.debug("Logging level set to {0}".format(level))
        return logging.getLevelName(level)

    def save_config(self):
        """
        Save configuration settings to file. Errors are logged, not raised.

        :Returns:
            - ``True`` if save was successful, else ``False``.
        """
        if not self._write_file:
            self._log.debug("Config file writing disabled - "
                            "cannot save config changes")
            return False

        try:
            with open(self._cfg_file, 'w') as configfile:
                self._config.write(configfile)
            return True

        except (IOError, OSError) as exp:
            self._log.error("Failed to create configuration file: {file}. "
                            "Error: {error}".format(file=self._cfg_file,
                                                    error=exp))
            return False

    def clear_config(self):
        """
        Delete any existing config file and reset defaults.

        :Returns:
            - ``True`` if the config was successfully cleared, else ``False``.
        """
        try:
            os.remove(self._cfg_file)
            self._config = configparser.RawConfigParser()
            self._config.optionxform = str
            self._set_defaults()
            self._log.info("Deleted config file and reset config to defaults")
            return True

        except (IOError, OSError) as exp:
            self._log.error("Failed to remove configuration file: {file}. "
                            "Error: {error}".format(file=self._cfg_file,
                                                    error=exp))
            return False

    def logging_level(self, *level):
        """Gets and sets the current logging level.

        :Args:
            - level (str): *optional* A new level for the rest of the session.

        :Returns:
            - The current (or new) level name (str).
        """
        if len(level) > 0:
            return self._set_logging_level(level[0])

        return logging.getLevelName(int(self._config.get('Logging', 'level')))

    def budget(self, name, *value):
        """Gets and sets a single oracle budget.

        :Args:
            - name (str): One of the :class:`.Budgets` fields.
            - value (int): *optional* A new positive cap.

        :Returns:
            - The current (or new) cap (int).

        :Raises:
            - :exc:`.InvalidConfigException` for an unknown budget or a
              value that is not a positive integer.
        """
        if name not in DEFAULT_BUDGETS:
            raise InvalidConfigException(
                "Unknown budget '{0}'. Known budgets: {1}".format(
                    name, ", ".join(DEFAULT_BUDGETS)))

        if len(value) > 0:
            cap = self._positive_int(name, value[0])
            self._log.info("Setting {0} budget to {1}".format(name, cap))
            self._config.set("Budgets", name, str(cap))
            return cap

        return self._positive_int(name, self._config.get("Budgets", name))

    def budgets(self):
        """All budgets as a :class:`.Budgets` value.

        :Raises:
            - :exc:`.InvalidConfigException` if any budget is invalid.
        """
        return Budgets(**dict((name, self.budget(name))
                              for name in DEFAULT_BUDGETS))

    def workers(self, *value):
        """Gets and sets the number of sweep worker processes.

        :Args:
            - value (int): *optional* 0 runs sweeps in-process.

        :Returns:
            - The current (or new) worker count (int).
        """
        if len(value) > 0:
            count = int(value[0])
            if count < 0:
                raise InvalidConfigException(
                    "Worker count must be >= 0, got {0}".format(count))
            self._config.set("Sweep", "workers", str(count))
            return count

        try:
            count = int(self._config.get("Sweep", "workers"))
        except (ValueError, configparser.Error) as exp:
            raise InvalidConfigException(
                "Invalid sweep worker setting: {0}".format(exp))
        return max(count, 0)

    def _positive_int(self, name, value):
        try:
            cap = int(value)
        except (TypeError, ValueError):
            raise InvalidConfigException(
                "Budget '{0}' must be an integer, got {1!r}".format(
                    name, value))
        if cap < 1:
            raise InvalidConfigException(
                "Budget '{0}' must be positive, got {1}".format(name, cap))
        return cap
