# -*- coding: utf-8 -*-
# cython: language_level=3
# Copyright (c) 2024 INSPXRXD
#
# Permission is hereby granted, free of charge, to any person obtaining
# a copy of this software and associated documentation files (the "Software"),
# to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense,
# and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included
# in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
# IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY
# CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT,
# TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE
# SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
"""Fox calculus, Alexander matrices and elementary ideals."""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "GroupRingElement",
    "fox_derivative",
    "abelianize_t",
    "AlexanderMatrix",
    "alexander_matrix",
    "alexander_polynomial",
    "knot_determinant",
    "ElementaryIdeal",
    "elementary_ideal",
    "ideal_is_unit",
    "NakanishiLowerBound",
    "nakanishi_lower",
    "Unit",
    "Proper",
)

import typing

from mqindex.alexander.fox import GroupRingElement
from mqindex.alexander.fox import abelianize_t
from mqindex.alexander.fox import fox_derivative
from mqindex.alexander.ideals import ElementaryIdeal
from mqindex.alexander.ideals import NakanishiLowerBound
from mqindex.alexander.ideals import Proper
from mqindex.alexander.ideals import Unit
from mqindex.alexander.ideals import elementary_ideal
from mqindex.alexander.ideals import ideal_is_unit
from mqindex.alexander.ideals import nakanishi_lower
from mqindex.alexander.matrix import AlexanderMatrix
from mqindex.alexander.matrix import alexander_matrix
from mqindex.alexander.matrix import alexander_polynomial
from mqindex.alexander.matrix import knot_determinant
