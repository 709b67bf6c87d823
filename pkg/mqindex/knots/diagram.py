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
Diagrams of rational tangles and of numerator closures of their sums.

A tangle sits in a box with endpoints NE, NW, SW and SE. Integer
twists are added on the east side, and ``1/T`` is the reflection of
``T`` in the line through NE and SW. A crossing stores its four
endpoints in counterclockwise order together with the two that lie
on the over strand, so a reflection only reverses that order.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "numerator_closure_pd",
)

import typing

from mqindex import errors
from mqindex.knots import pd as pd_
from mqindex.knots import tangles

NE, NW, SW, SE = "NE", "NW", "SW", "SE"


class _Crossing:
    def __init__(self, points: typing.List[int], over: typing.FrozenSet[int]) -> None:
        self.points = points
        self.over = over


class _Builder:
    """Points joined by a union-find; arcs are the classes."""

    def __init__(self) -> None:
        self.parent: typing.List[int] = []
        self.crossings: typing.List[_Crossing] = []

    def point(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, point: int) -> int:
        while self.parent[point] != point:
            self.parent[point] = self.parent[self.parent[point]]
            point = self.parent[point]
        return point

    def join(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


class _Tangle:
    def __init__(self, builder: _Builder) -> None:
        self.builder = builder
        self.crossings: typing.List[_Crossing] = []
        self.ends = {corner: builder.point() for corner in (NE, NW, SW, SE)}
        builder.join(self.ends[NW], self.ends[NE])
        builder.join(self.ends[SW], self.ends[SE])

    def twist(self, sign: int) -> None:
        builder = self.builder
        ne, nw, sw, se = (builder.point() for _ in range(4))
        crossing = _Crossing(
            [ne, nw, sw, se], frozenset((ne, sw) if sign > 0 else (nw, se))
        )
        builder.crossings.append(crossing)
        self.crossings.append(crossing)
        builder.join(nw, self.ends[NE])
        builder.join(sw, self.ends[SE])
        self.ends[NE], self.ends[SE] = ne, se

    def reflect(self) -> None:
        for crossing in self.crossings:
            crossing.points.reverse()
        self.ends[NW], self.ends[SE] = self.ends[SE], self.ends[NW]


def _rational(builder: _Builder, tangle: tangles.RationalTangle) -> _Tangle:
    result = _Tangle(builder)
    for n, term in enumerate(tangle.continued_fraction):
        if n:
            result.reflect()
        for _ in range(abs(term)):
            result.twist(1 if term > 0 else -1)
    return result


def numerator_closure_pd(
    summands: typing.Sequence[tangles.RationalTangle],
) -> pd_.PDCode:
    """
    PD code of the numerator closure of ``summands[0] + ... +
    summands[-1]``. Each summand is drawn from its continued fraction,
    so the code has ``sum(|a_i|)`` crossings.

    Raises
    ------
    errors.OutOfScopeError
        If a summand is the infinity tangle.
    errors.InputError
        If the closure is not a knot.
    """
    if not summands:
        raise errors.InputError("A tangle sum needs at least one summand.")
    if any(tangle.is_infinity for tangle in summands):
        raise errors.OutOfScopeError("The infinity tangle cannot be summed.")

    builder = _Builder()
    parts = [_rational(builder, tangle) for tangle in summands]
    for left, right in zip(parts, parts[1:]):
        builder.join(left.ends[NE], right.ends[NW])
        builder.join(left.ends[SE], right.ends[SW])
    builder.join(parts[0].ends[NW], parts[-1].ends[NE])
    builder.join(parts[0].ends[SW], parts[-1].ends[SE])

    return _to_pd(builder)


def _to_pd(builder: _Builder) -> pd_.PDCode:
    slots: typing.Dict[int, typing.List[typing.Tuple[int, int]]] = {}
    for c, crossing in enumerate(builder.crossings):
        for position, point in enumerate(crossing.points):
            slots.setdefault(builder.find(point), []).append((c, position))
    arcs = {builder.find(point) for point in range(len(builder.parent))}
    circles = len(arcs) - len(slots)

    if not builder.crossings:
        if circles != 1:
            raise errors.InputError(f"The closure is an unlink of {circles} components.")
        return pd_.PDCode()

    def under_entry(c: int) -> int:
        crossing = builder.crossings[c]
        return next(p for p, point in enumerate(crossing.points) if point not in crossing.over)

    labels: typing.Dict[int, int] = {}
    entries: typing.Set[typing.Tuple[int, int]] = set()
    slot = (0, under_entry(0))
    while slot not in entries:
        entries.add(slot)
        c, position = slot
        leaving = builder.find(builder.crossings[c].points[position ^ 2])
        labels[leaving] = len(labels) + 1
        first, second = slots[leaving]
        slot = second if first == (c, position ^ 2) else first

    if circles or len(labels) != 2 * len(builder.crossings):
        raise errors.InputError("The closure is not a knot.")

    codes = []
    for c, crossing in enumerate(builder.crossings):
        start = next(
            p for p in range(4)
            if crossing.points[p] not in crossing.over and (c, p) in entries
        )
        order = [crossing.points[(start + n) % 4] for n in range(4)]
        codes.append(tuple(labels[builder.find(point)] for point in order))
    return pd_.PDCode(codes)
