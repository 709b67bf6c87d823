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
Breadth-first search for (m, n)-unknotting sequences of Gauss codes.

Codes are kept in canonical form and simplified by Reidemeister I and
II reductions after every move. The search is sound, not complete: a
missing certificate proves nothing.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "MoveKind",
    "CodeMove",
    "UnknottabilityCertificate",
    "replay",
    "unknottability_search",
)

import collections
import enum
import logging
import typing

from mqindex import errors
from mqindex.domain import value_object
from mqindex.knots import gauss

logger = logging.getLogger(__name__)


@enum.unique
class MoveKind(str, enum.Enum):
    VIRTUALIZATION = "virtualization"
    CROSSING_CHANGE = "crossing-change"


class CodeMove(value_object.ValueObject):
    """A move on the canonical code reached so far."""

    __value_fields__ = ("kind", "crossing_id")

    def __init__(self, kind: MoveKind, crossing_id: int) -> None:
        self.kind = MoveKind(kind)
        self.crossing_id = crossing_id

    def __str__(self) -> str:
        return f"{self.kind.value} {self.crossing_id}"

    def apply(self, code: gauss.GaussCode) -> gauss.GaussCode:
        if self.kind is MoveKind.VIRTUALIZATION:
            return code.virtualize(self.crossing_id)
        return code.crossing_change(self.crossing_id)


def _settle(code: gauss.GaussCode) -> typing.Tuple[gauss.GaussCode, typing.Tuple[str, ...]]:
    simplified, trace = gauss.simplify(code)
    return simplified.canonical(), trace


class UnknottabilityCertificate(value_object.ValueObject):
    """
    Moves that, interleaved with simplification and canonical
    relabelling, take `initial` to the empty code.

    `trace` lists the codes and reductions met on the way.
    """

    __value_fields__ = ("initial", "moves")

    def __init__(
        self,
        initial: gauss.GaussCode,
        moves: typing.Sequence[CodeMove],
        trace: typing.Sequence[str] = (),
    ) -> None:
        self.initial = initial
        self.moves = tuple(moves)
        self.trace = tuple(trace)

    @property
    def virtualizations(self) -> int:
        return sum(1 for move in self.moves if move.kind is MoveKind.VIRTUALIZATION)

    @property
    def crossing_changes(self) -> int:
        return sum(1 for move in self.moves if move.kind is MoveKind.CROSSING_CHANGE)

    def __str__(self) -> str:
        moves = ", ".join(str(move) for move in self.moves) or "none"
        return (
            f"({self.virtualizations}, {self.crossing_changes})-unknotting "
            f"of {self.initial or 'the empty code'}: {moves}"
        )


def replay(certificate: UnknottabilityCertificate) -> bool:
    """
    Check a certificate from scratch.

    Raises
    ------
    errors.InvalidIdError
        If a move names a crossing the code does not have.
    """
    code, _ = _settle(certificate.initial)
    for move in certificate.moves:
        code, _ = _settle(move.apply(code))
    return code.is_empty()


class _Node(typing.NamedTuple):
    code: gauss.GaussCode
    virtualizations: int
    crossing_changes: int
    moves: typing.Tuple[CodeMove, ...]
    trace: typing.Tuple[str, ...]


def unknottability_search(
    code: gauss.GaussCode,
    max_virtualizations: int,
    max_crossing_changes: int,
    depth: typing.Optional[int] = None,
) -> typing.Optional[UnknottabilityCertificate]:
    """
    Look for at most `max_virtualizations` virtualizations and at most
    `max_crossing_changes` crossing changes, `depth` moves in total,
    that unknot the code. Nodes are expanded by crossing id, and
    virtualizations before crossing changes, so the result is
    deterministic and uses the fewest moves.

    Raises
    ------
    errors.ConfigurationError
        If a bound is negative.
    """
    if min(max_virtualizations, max_crossing_changes) < 0 or (depth is not None and depth < 0):
        raise errors.ConfigurationError("Search bounds must be nonnegative.")
    limit = max_virtualizations + max_crossing_changes if depth is None else depth

    start, reductions = _settle(code)
    root = _Node(start, 0, 0, (), (str(code) or "empty", *reductions, str(start) or "empty"))
    queue = collections.deque([root])
    seen = {(start, 0, 0)}

    while queue:
        node = queue.popleft()
        if node.code.is_empty():
            logger.info("Unknotted %s with %d moves", code, len(node.moves))
            return UnknottabilityCertificate(code, node.moves, node.trace)
        if len(node.moves) >= limit:
            continue

        for crossing_id in range(1, node.code.crossing_count + 1):
            for kind, used, allowed in (
                (MoveKind.VIRTUALIZATION, node.virtualizations, max_virtualizations),
                (MoveKind.CROSSING_CHANGE, node.crossing_changes, max_crossing_changes),
            ):
                if used >= allowed:
                    continue
                move = CodeMove(kind, crossing_id)
                reached, reductions = _settle(move.apply(node.code))
                counts = (
                    node.virtualizations + (kind is MoveKind.VIRTUALIZATION),
                    node.crossing_changes + (kind is MoveKind.CROSSING_CHANGE),
                )
                key = (reached, *counts)
                if key in seen:
                    continue
                seen.add(key)
                queue.append(
                    _Node(
                        reached,
                        counts[0],
                        counts[1],
                        node.moves + (move,),
                        node.trace + (str(move), *reductions, str(reached) or "empty"),
                    )
                )
        logger.debug("Search frontier: %d codes", len(queue))

    logger.info(
        "No (%d, %d)-unknotting of %s found", max_virtualizations, max_crossing_changes, code
    )
    return None
