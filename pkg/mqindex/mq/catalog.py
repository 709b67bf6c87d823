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
Catalog of local moves and the Gordian distance bounds they give.

A move that replaces a trivial n-string tangle by another one
connecting the same endpoints changes the index by at most n - 1,
its relator cost.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "MoveCatalogEntry",
    "MoveCatalog",
    "DEFAULT_CATALOG",
    "gordian_lower_bound",
    "unknotting_lower_bound",
    "UNKNOT_INTERVAL",
)

import typing

from mqindex import errors
from mqindex.domain import value_object
from mqindex.mq import interval as interval_

Objects = typing.FrozenSet[typing.Literal["classical", "virtual", "welded"]]


class MoveCatalogEntry(value_object.ValueObject):
    """
    Parameters
    ----------
    name : str
        Short identifier, for example ``cc``.
    tangle_strands : int
        Number of strings of the replaced tangle.
    applicable_objects : Iterable[str]
        Which diagram kinds the move applies to.
    description : str
        Human readable name.
    """

    __value_fields__ = ("name", "tangle_strands", "applicable_objects")

    def __init__(
        self,
        name: str,
        tangle_strands: int,
        applicable_objects: typing.Iterable[str] = ("classical",),
        description: str = "",
    ) -> None:
        if tangle_strands < 2:
            raise errors.InputError(
                f"Move {name!r} needs at least 2 strands, got {tangle_strands}."
            )
        objects = frozenset(applicable_objects)
        unknown = objects - {"classical", "virtual", "welded"}
        if unknown:
            raise errors.InputError(f"Unknown diagram kinds {sorted(unknown)}.")

        self.name = name
        self.tangle_strands = tangle_strands
        self.applicable_objects = objects
        self.description = description or name

    @property
    def relator_cost(self) -> int:
        return self.tangle_strands - 1


class MoveCatalog(value_object.ValueObject):
    """
    Named moves, listed in registration order. A catalog never
    changes; `add` and `register` return an extended copy.

    Raises
    ------
    errors.InputError
        If two entries share a name.
    """

    __value_fields__ = ("entries",)

    def __init__(self, entries: typing.Iterable[MoveCatalogEntry] = ()) -> None:
        by_name: typing.Dict[str, MoveCatalogEntry] = {}
        for entry in entries:
            if entry.name in by_name:
                raise errors.InputError(f"Move {entry.name!r} is already registered.")
            by_name[entry.name] = entry

        self.entries: typing.Tuple[MoveCatalogEntry, ...] = tuple(by_name.values())
        self._by_name = by_name

    def add(self, entry: MoveCatalogEntry) -> MoveCatalog:
        return MoveCatalog(self.entries + (entry,))

    def register(
        self,
        name: str,
        strands: int,
        objects: typing.Iterable[str] = ("classical",),
        description: str = "",
    ) -> MoveCatalog:
        """Add a proper n-tangle replacement move."""
        return self.add(MoveCatalogEntry(name, strands, objects, description))

    def __getitem__(self, name: str) -> MoveCatalogEntry:
        try:
            return self._by_name[name]
        except KeyError:
            raise errors.InvalidIdError(f"Unknown move {name!r}.") from None

    def __contains__(self, name: object) -> bool:
        return name in self._by_name

    def __iter__(self) -> typing.Iterator[MoveCatalogEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def costs(self) -> typing.Dict[str, int]:
        return {entry.name: entry.relator_cost for entry in self}


def _default_catalog() -> MoveCatalog:
    return MoveCatalog(
        [
            MoveCatalogEntry(
                "cc", 2, ("classical", "virtual", "welded"), "crossing change"
            ),
            MoveCatalogEntry(
                "virtualization", 2, ("classical", "virtual", "welded"), "virtualization"
            ),
            # Only the cost enters the bounds; the move is not applied to diagrams.
            MoveCatalogEntry("sharp", 4, ("classical",), "sharp move"),
            MoveCatalogEntry(
                "rational", 2, ("classical",), "proper rational tangle replacement"
            ),
        ]
    )


DEFAULT_CATALOG: typing.Final[MoveCatalog] = _default_catalog()

UNKNOT_INTERVAL: typing.Final[interval_.MQInterval] = interval_.MQInterval(
    0, 0, "unknot", interval_.UpperCertificate(0, interval_.UpperSource.RANK_BOUND, "unknot")
)


def gordian_lower_bound(
    left: interval_.MQInterval,
    right: interval_.MQInterval,
    move: MoveCatalogEntry,
) -> int:
    """
    ``ceil(gap / relator_cost)`` where the gap is the distance between
    the two intervals.
    """
    cost = move.relator_cost
    if cost < 1:
        raise errors.InputError(f"Move {move.name!r} has no positive relator cost.")
    return -(-interval_.gap(left, right) // cost)


def unknotting_lower_bound(
    interval: interval_.MQInterval, move: MoveCatalogEntry
) -> int:
    """Lower bound on the number of moves needed to reach the unknot."""
    return gordian_lower_bound(interval, UNKNOT_INTERVAL, move)
