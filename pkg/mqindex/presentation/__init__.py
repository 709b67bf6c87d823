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
"""Group presentations, Tietze moves and bounded word problem tools."""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "Presentation",
    "AbelianGroupInvariants",
    "PresentationDiff",
    "abelianization",
    "is_null_homologous",
    "diff",
    "replace_relator",
    "replace_relator_at",
    "h1_equal",
    "eliminate_generator",
    "tietze_simplify",
    "knuth_bendix",
    "word_problem",
    "normal_closure_member_bounded",
)

import typing

from mqindex.presentation.closure import normal_closure_member_bounded
from mqindex.presentation.presentation import AbelianGroupInvariants
from mqindex.presentation.presentation import Presentation
from mqindex.presentation.presentation import PresentationDiff
from mqindex.presentation.presentation import abelianization
from mqindex.presentation.presentation import diff
from mqindex.presentation.presentation import h1_equal
from mqindex.presentation.presentation import is_null_homologous
from mqindex.presentation.presentation import replace_relator
from mqindex.presentation.presentation import replace_relator_at
from mqindex.presentation.rewriting import knuth_bendix
from mqindex.presentation.rewriting import word_problem
from mqindex.presentation.tietze import eliminate_generator
from mqindex.presentation.tietze import tietze_simplify
