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
"""Exceptions raised by the charconv package."""

import logging
LOG = logging.getLogger('charconv')


def _log_error(name, args, kwargs):
    if not kwargs.get("silent", False):
        LOG.error("{0}: {1}".format(name, args[0] if args else ""))


class ParameterException(ValueError):
    """
    A code, field or construction parameter is out of range.
    """
    def __init__(self, *args, **kwargs):
        """
        Log the exception args as ERROR

        :Kwargs:
            - silent (bool): If ``True``, the error will not be logged.
        """
        _log_error(type(self).__name__, args, kwargs)
        super(ParameterException, self).__init__(*args)


class UnsupportedOrderException(ParameterException):
    """
    The requested root of unity does not exist in the field.
    """
    pass


class RankDeficientException(ParameterException):
    """
    A polynomial generator matrix does not have full row rank.
    """
    pass


class FieldMismatchException(TypeError):
    """
    Operands of a field operation belong to different fields.
    """
    def __init__(self, *args, **kwargs):
        """
        Log the exception args as ERROR
        """
        _log_error("FieldMismatchException", args, kwargs)
        super(FieldMismatchException, self).__init__(*args)


class FieldDivisionException(ZeroDivisionError):
    """
    Inversion of the zero element.
    """
    def __init__(self, *args, **kwargs):
        """
        Log the exception args as ERROR
        """
        _log_error("FieldDivisionException", args, kwargs)
        super(FieldDivisionException, self).__init__(*args)


class DimensionException(IndexError):
    """
    Matrix shapes do not agree, or an index is out of range.
    """
    def __init__(self, *args, **kwargs):
        """
        Log the exception args as ERROR
        """
        _log_error("DimensionException", args, kwargs)
        super(DimensionException, self).__init__(*args)


class InvalidConfigException(Exception):
    """
    An error thrown by an incorrect/incomplete config file.
    """
    def __init__(self, *args, **kwargs):
        """
        Log the exception args as ERROR
        """
        _log_error("InvalidConfigException", args, kwargs)
        super(InvalidConfigException, self).__init__(*args)


class MalformedFileException(Exception):
    """
    A matrix, polynomial matrix or record document could not be parsed.
    """
    def __init__(self, *args, **kwargs):
        """
        Log the exception args as ERROR
        """
        _log_error("MalformedFileException", args, kwargs)
        super(MalformedFileException, self).__init__(*args)


class ProvenanceException(Exception):
    """
    A record was passed to an operation that does not accept its kind.
    """
    def __init__(self, *args, **kwargs):
        """
        Log the exception args as ERROR
        """
        _log_error("ProvenanceException", args, kwargs)
        super(ProvenanceException, self).__init__(*args)


class PreconditionException(Exception):
    """
    A named precondition of a construction does not hold.
    """

    def __init__(self, condition, message, values=None, **kwargs):
        """
        :Args:
            - condition (str): Machine readable name of the failed
              condition, e.g. ``"tail_ge_band"``.
            - message (str): Human readable explanation.

        :Kwargs:
            - values (dict): The quantities compared by the condition.
            - silent (bool): If ``True``, the error will not be logged.
              The default is ``False``.
        """
        self.condition = condition
        self.msg = message
        self.values = dict(values or {})

        if not kwargs.get("silent", False):
            LOG.error("Precondition '{cond}' failed: {msg}".format(
                cond=condition, msg=message))

        super(PreconditionException, self).__init__(message)

    def __str__(self):
        """
        PreconditionException as a string.

        :Returns:
            - The condition name and message.
        """
        return "{0}: {1}".format(self.condition, self.msg)


class RankConditionException(PreconditionException):
    """
    A parity-check slice violates ``rank(H_i) <= rank(H_0) = rows(H_0)``.
    """

    def __init__(self, slice_index, message, values=None, **kwargs):
        self.slice = slice_index
        super(RankConditionException, self).__init__(
            "rank_condition", message, values, **kwargs)


class BudgetExceededException(Exception):
    """
    An exhaustive search would exceed its configured budget.
    """

    def __init__(self, what, needed, budget, **kwargs):
        """
        :Args:
            - what (str): The budget concerned, e.g. ``"codewords"``.
            - needed (int): Work required (a lower estimate).
            - budget (int): The configured cap.
        """
        self.what = what
        self.needed = needed
        self.budget = budget
        self.msg = "{what} budget exceeded: need {need}, budget {cap}".format(
            what=what, need=needed, cap=budget)

        if not kwargs.get("silent", False):
            LOG.warning(self.msg)

        super(BudgetExceededException, self).__init__(self.msg)

    def __str__(self):
        return self.msg
