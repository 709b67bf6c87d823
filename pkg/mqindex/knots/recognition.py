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
"""
Conservative unknot recognition.

A two-bridge link is classified exactly. For a knot group the answer
is `NONTRIVIAL` when the Alexander polynomial is not 1, `UNKNOT` when
it is 1 and Tietze simplification reaches ``<x | >``, and `UNKNOWN`
otherwise.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "Recognition",
    "recognize_unknot",
)

import enum
import typing

from mqindex.alexander import matrix
from mqindex.algebra import laurent
from mqindex.knots import montesinos
from mqindex.presentation import presentation as presentation_
from mqindex.presentation import tietze


@enum.unique
class Recognition(str, enum.Enum):
    UNKNOT = "unknot"
    NONTRIVIAL = "nontrivial"
    UNKNOWN = "unknown"


def recognize_unknot(
    source: typing.Union[presentation_.Presentation, montesinos.TwoBridgeLink],
    tietze_budget: int = 200,
) -> Recognition:
    if isinstance(source, montesinos.TwoBridgeLink):
        if source.kind is montesinos.TwoBridgeKind.UNKNOT:
            return Recognition.UNKNOT
        return Recognition.NONTRIVIAL

    if matrix.alexander_polynomial(source) != laurent.ONE:
        return Recognition.NONTRIVIAL
    simplified = tietze.tietze_simplify(source, budget=tietze_budget).presentation
    if simplified.rank == 1 and not simplified.relators:
        return Recognition.UNKNOT
    return Recognition.UNKNOWN
