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
Planar diagram codes.

A crossing is written ``X[i, j, k, l]``. Edge `i` is the incoming
under edge and the other edges follow counterclockwise, so the under
strand runs from `i` to `k` and the over strand joins `j` and `l`.
The crossing is positive when the over strand enters at `l`.

Take the left-handed trefoil ``X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]``. At
``X[1,4,2,5]`` edge 1 passes under towards 2 while the over strand
runs from 4 to 5. It enters at `j`, so the crossing is negative, and
the other two crossings read the same way.

Planarity is not checked; a code that cannot be drawn in the plane
describes a virtual diagram.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "PDCode",
    "parse_pd",
    "wirtinger_from_pd",
)

import collections
import functools
import re
import typing

from mqindex import errors
from mqindex.domain import value_object
from mqindex.knots import wirtinger

Crossing = typing.Tuple[int, int, int, int]
Slot = typing.Tuple[int, int]

_crossing_pattern: typing.Pattern[str] = re.compile(
    r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]"
)
_separator_pattern: typing.Pattern[str] = re.compile(r"[\s,]*")


class _Traversal(typing.NamedTuple):
    components: int
    entries: typing.FrozenSet[Slot]
    walks: typing.Tuple[typing.Tuple[Slot, ...], ...]


def _traverse(crossings: typing.Sequence[Crossing]) -> _Traversal:
    slots: typing.Dict[int, typing.List[Slot]] = collections.defaultdict(list)
    for c, crossing in enumerate(crossings):
        for position, label in enumerate(crossing):
            slots[label].append((c, position))

    covered: typing.Set[Slot] = set()
    entries: typing.Set[Slot] = set()
    walks: typing.List[typing.Tuple[Slot, ...]] = []

    def walk(start: Slot) -> None:
        path = []
        slot = start
        while True:
            c, position = slot
            if position == 2:
                raise errors.ParseError(
                    f"Edge {crossings[c][2]} runs into crossing {c + 1} against "
                    "its under strand.",
                    "",
                    c,
                )
            exit_slot = (c, position ^ 2)
            entries.add(slot)
            covered.update((slot, exit_slot))
            path.append(slot)

            first, second = slots[crossings[c][position ^ 2]]
            slot = second if first == exit_slot else first
            if slot == start:
                walks.append(tuple(path))
                return
            if slot in covered:
                raise errors.ParseError(
                    f"Edge {crossings[c][position ^ 2]} is traversed twice.", "", c
                )

    # Under strands orient their components; the rest run j to l.
    for c in range(len(crossings)):
        if (c, 0) not in covered:
            walk((c, 0))
    for c in range(len(crossings)):
        for position in (1, 3):
            if (c, position) not in covered:
                walk((c, position))

    return _Traversal(len(walks), frozenset(entries), tuple(walks))


class PDCode(value_object.ValueObject):
    """
    A planar diagram code.

    Parameters
    ----------
    crossings : Sequence[Sequence[int]]
        One 4-tuple of edge labels per crossing. Crossing ids are the
        1-based positions in this sequence.

    Raises
    ------
    errors.ParseError
        If a tuple does not have four entries, an edge does not occur
        exactly twice, the labels are not ``1 .. 2n`` or the strands
        cannot be oriented consistently.
    """

    __value_fields__ = ("crossings",)

    def __init__(self, crossings: typing.Sequence[typing.Sequence[int]] = ()) -> None:
        checked: typing.List[Crossing] = []
        for c, crossing in enumerate(crossings):
            values = tuple(int(label) for label in crossing)
            if len(values) != 4 or min(values) < 1:
                raise errors.ParseError(
                    f"Crossing {c + 1} needs four positive edge labels.", str(values), c
                )
            checked.append(values)  # type: ignore[arg-type]

        counts = collections.Counter(label for crossing in checked for label in crossing)
        for label, count in sorted(counts.items()):
            if count != 2:
                raise errors.ParseError(
                    f"Edge {label} occurs {count} times instead of twice.", "", label
                )
        if sorted(counts) != list(range(1, 2 * len(checked) + 1)):
            raise errors.ParseError(
                f"Edge labels must be 1 .. {2 * len(checked)}.", "", 0
            )

        self.crossings: typing.Tuple[Crossing, ...] = tuple(checked)
        self._traversal = _traverse(self.crossings)

    def __str__(self) -> str:
        return " ".join(
            "X[{},{},{},{}]".format(*crossing) for crossing in self.crossings
        )

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def components(self) -> int:
        """Number of link components; a crossingless code is the unknot."""
        return max(self._traversal.components, 1)

    @property
    def is_knot(self) -> bool:
        return self.components == 1

    def _check_id(self, crossing_id: int) -> int:
        if not 1 <= crossing_id <= len(self.crossings):
            raise errors.InvalidIdError(
                f"Crossing id {crossing_id} is not in 1 .. {len(self.crossings)}."
            )
        return crossing_id - 1

    def over_entry(self, crossing_id: int) -> int:
        """Position, 1 or 3, at which the over strand enters."""
        c = self._check_id(crossing_id)
        return 3 if (c, 3) in self._traversal.entries else 1

    def sign(self, crossing_id: int) -> int:
        return 1 if self.over_entry(crossing_id) == 3 else -1

    @functools.cached_property
    def signs(self) -> typing.Tuple[int, ...]:
        return tuple(self.sign(c + 1) for c in range(len(self.crossings)))

    def writhe(self) -> int:
        return sum(self.signs)

    def walk(self) -> typing.Tuple[typing.Tuple[int, int], ...]:
        """
        ``(crossing id, position)`` pairs at which a knot's strand
        enters each crossing, starting where edge 1 enters.

        Raises
        ------
        errors.InputError
            If the code is not a knot.
        """
        if not self.is_knot:
            raise errors.InputError("Only a knot diagram has a single walk.")
        if not self.crossings:
            return ()
        path = self._traversal.walks[0]
        start = min(range(len(path)), key=lambda n: self.crossings[path[n][0]][path[n][1]])
        path = path[start:] + path[:start]
        return tuple((c + 1, position) for c, position in path)

    def crossing_change(self, crossing_id: int) -> PDCode:
        """
        Swap over and under at one crossing. The tuple is rotated so
        that the old incoming over edge becomes the incoming under
        edge.
        """
        c = self._check_id(crossing_id)
        i, j, k, l = self.crossings[c]
        rotated = (l, i, j, k) if self.over_entry(crossing_id) == 3 else (j, k, l, i)
        updated = list(self.crossings)
        updated[c] = rotated
        return PDCode(updated)


def parse_pd(text: str) -> PDCode:
    """
    Parse ``X[a,b,c,d]`` tuples separated by whitespace or commas. An
    optional ``PD[...]`` wrapper is accepted. An empty text is the
    crossingless unknot.

    Raises
    ------
    errors.ParseError
        On malformed text or an invalid code.
    """
    body, offset = text.strip(), 0
    if body.startswith("PD[") and body.endswith("]"):
        body, offset = body[3:-1], text.index("PD[") + 3

    crossings: typing.List[Crossing] = []
    position = _separator_pattern.match(body, 0).end()  # type: ignore[union-attr]
    while position < len(body):
        match = _crossing_pattern.match(body, position)
        if match is None:
            raise errors.ParseError(
                "Expected a crossing X[a,b,c,d].", text, offset + position
            )
        crossings.append(tuple(int(g) for g in match.groups()))  # type: ignore[arg-type]
        position = _separator_pattern.match(body, match.end()).end()  # type: ignore[union-attr]

    return PDCode(crossings)


def wirtinger_from_pd(
    code: PDCode, require_knot: bool = True
) -> wirtinger.WirtingerPresentation:
    """
    One generator per arc, one relator per crossing.

    Arcs are the classes of edges joined along over strands, numbered
    by their smallest edge label.

    Raises
    ------
    errors.InputError
        If `require_knot` is set and the code has several components.
    """
    if require_knot and not code.is_knot:
        raise errors.InputError(
            f"Expected a knot diagram, found {code.components} components."
        )
    if not code.crossings:
        return wirtinger.WirtingerPresentation(code.components, ())

    parent = {label: label for crossing in code.crossings for label in crossing}

    def find(label: int) -> int:
        while parent[label] != label:
            parent[label] = parent[parent[label]]
            label = parent[label]
        return label

    for _, j, _, l in code.crossings:
        a, b = find(j), find(l)
        parent[max(a, b)] = min(a, b)

    roots = sorted({find(label) for label in parent})
    arc_of = {label: wirtinger.arc_name(roots.index(find(label))) for label in parent}

    crossings = [
        wirtinger.WirtingerCrossing(
            crossing_id=c + 1,
            incoming=arc_of[i],
            outgoing=arc_of[k],
            over=arc_of[j],
            sign=code.sign(c + 1),
        )
        for c, (i, j, k, _) in enumerate(code.crossings)
    ]
    return wirtinger.WirtingerPresentation(len(roots), crossings)
