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
Local moves on diagrams and the relator replacement each one induces
on a Wirtinger presentation.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "crossing_change",
    "virtualize",
    "crossing_change_relator_delta",
    "virtualize_relator_delta",
)

import typing

from mqindex import errors
from mqindex.knots import gauss
from mqindex.knots import pd as pd_
from mqindex.knots import wirtinger

Code = typing.TypeVar("Code", pd_.PDCode, gauss.GaussCode)


def crossing_change(code: Code, crossing_id: int) -> Code:
    """
    Swap over and under at a crossing of a PD or Gauss code.

    Raises
    ------
    errors.InvalidIdError
        If the crossing does not exist.
    """
    if isinstance(code, (pd_.PDCode, gauss.GaussCode)):
        return code.crossing_change(crossing_id)
    raise errors.InputError(f"Cannot change crossings of {type(code).__name__}.")


def virtualize(code: gauss.GaussCode, crossing_id: int) -> gauss.GaussCode:
    """
    Raises
    ------
    errors.InvalidIdError
        If the crossing does not exist.
    """
    return code.virtualize(crossing_id)


def crossing_change_relator_delta(
    presentation: wirtinger.WirtingerPresentation, index: int
) -> wirtinger.WirtingerPresentation:
    """
    Negate the conjugating exponent of relator `index`. Only that
    relator changes and both spellings have the same exponent vector.

    Raises
    ------
    errors.InvalidIdError
        If `index` is out of range or names a virtual crossing.
    """
    if not 0 <= index < len(presentation.crossings):
        raise errors.InvalidIdError(f"Relator index {index} out of range.")
    return presentation.with_crossing(index, presentation.crossings[index].changed())


def virtualize_relator_delta(
    presentation: wirtinger.WirtingerPresentation, crossing_id: int
) -> wirtinger.WirtingerPresentation:
    """
    Replace the crossing's relator by ``x_out * x_in^-1`` over the same
    generators.

    Raises
    ------
    errors.InvalidIdError
        If there is no crossing with that id.
    """
    index = presentation.index_of(crossing_id)
    return presentation.with_crossing(index, presentation.crossings[index].virtualized())
