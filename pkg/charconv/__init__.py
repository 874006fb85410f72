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
Convolutional codes from group character codes.
"""

import logging
from .log import PickleLog

logging.setLoggerClass(PickleLog)

from .gf import FieldSpec, FieldElement, make_field, field_of_order
from .matfq import MatrixFq
from .charcode import CharCodeSpec, build_char_code
from .polymat import PolyMatrix, ConvParams
from .convo import (
    ConvRecord,
    construct_unit_memory_binary,
    construct_two_memory_binary,
    construct_unit_memory_lary,
    construct_multi_memory,
    dual_record,
    verify_record)
from .distance import DistanceResult, Certificate, certify_bound
from .config import Configuration

__all__ = ["gf",
           "matfq",
           "charcode",
           "polymat",
           "convo",
           "distance",
           "config"]


__version__ = "0.1.0"
__author__ = 'The charconv authors'
