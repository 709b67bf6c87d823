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
Wirtinger presentations with per-crossing bookkeeping.

Each crossing contributes the relator
``x_out * x_over^-e * x_in^-1 * x_over^e`` where ``e`` is the
crossing sign. A virtualized crossing has sign 0 and contributes
``x_out * x_in^-1``.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "WirtingerCrossing",
    "WirtingerPresentation",
    "arc_name",
)

import typing

from mqindex import errors
from mqindex.algebra import words
from mqindex.domain import value_object
from mqindex.presentation import presentation as presentation_


def arc_name(index: int) -> str:
    """Generator name of the arc with 0-based `index`."""
    return f"x{index + 1}"


class WirtingerCrossing(value_object.ValueObject):
    """
    One crossing of a diagram seen from the group: the arcs entering
    and leaving under it, the arc passing over it, and its sign.
    """

    __value_fields__ = ("crossing_id", "incoming", "outgoing", "over", "sign")

    def __init__(
        self,
        crossing_id: int,
        incoming: str,
        outgoing: str,
        over: str,
        sign: int,
    ) -> None:
        if sign not in (-1, 0, 1):
            raise errors.InputError(f"Crossing sign must be -1, 0 or 1, got {sign}.")
        self.crossing_id = crossing_id
        self.incoming = incoming
        self.outgoing = outgoing
        self.over = over
        self.sign = sign

    @property
    def is_virtual(self) -> bool:
        return self.sign == 0

    def relator(self) -> words.Word:
        out, into = words.generator(self.outgoing), words.generator(self.incoming)
        if self.is_virtual:
            return out * ~into
        over = words.generator(self.over)
        return words.multiply(
            out,
            words.power(over, -self.sign),
            ~into,
            words.power(over, self.sign),
        )

    def changed(self) -> WirtingerCrossing:
        """The same crossing with its sign negated."""
        if self.is_virtual:
            raise errors.InvalidIdError(
                f"Crossing {self.crossing_id} is virtual and cannot be changed."
            )
        return WirtingerCrossing(
            self.crossing_id, self.incoming, self.outgoing, self.over, -self.sign
        )

    def virtualized(self) -> WirtingerCrossing:
        return WirtingerCrossing(
            self.crossing_id, self.incoming, self.outgoing, self.over, 0
        )


class WirtingerPresentation(presentation_.Presentation):
    """
    A `Presentation` whose relators are generated by `crossings`, one
    relator per crossing and in the same order.

    Parameters
    ----------
    arc_count : int
        Number of arcs; generators are ``x1 .. x<arc_count>``.
    crossings : Sequence[WirtingerCrossing]
        Crossing records over those generators.
    """

    __value_fields__ = ("generators", "relators", "crossings")

    def __init__(
        self,
        arc_count: int,
        crossings: typing.Sequence[WirtingerCrossing],
    ) -> None:
        self.crossings: typing.Tuple[WirtingerCrossing, ...] = tuple(crossings)
        super().__init__(
            [arc_name(i) for i in range(arc_count)],
            [crossing.relator() for crossing in self.crossings],
        )

    def index_of(self, crossing_id: int) -> int:
        """Relator index of the crossing with the given id."""
        for index, crossing in enumerate(self.crossings):
            if crossing.crossing_id == crossing_id:
                return index
        raise errors.InvalidIdError(f"No crossing with id {crossing_id}.")

    def with_crossing(self, index: int, crossing: WirtingerCrossing) -> WirtingerPresentation:
        """Replace the crossing record, and so the relator, at `index`."""
        if not 0 <= index < len(self.crossings):
            raise errors.InvalidIdError(f"Relator index {index} out of range.")
        updated = list(self.crossings)
        updated[index] = crossing
        return WirtingerPresentation(self.rank, updated)
