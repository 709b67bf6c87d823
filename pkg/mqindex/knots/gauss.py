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
Gauss codes of classical, virtual and welded knot diagrams.

A code lists the classical crossings met along the knot as ``O<k><s>``
or ``U<k><s>``: over or under crossing `k` with sign `s`. Virtual
crossings are not recorded.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "GaussCode",
    "parse_gauss",
    "wirtinger_from_gauss",
    "gauss_from_pd",
    "simplify",
)

import bisect
import collections
import re
import typing

from mqindex import errors
from mqindex.domain import value_object
from mqindex.knots import pd as pd_
from mqindex.knots import wirtinger

OVER: typing.Final[str] = "O"
UNDER: typing.Final[str] = "U"

Token = typing.Tuple[int, str, int]
"""``(crossing id, OVER or UNDER, sign)``."""

_token_pattern: typing.Pattern[str] = re.compile(r"\s*([OU])(\d+)([+-])\s*")


def _format_token(token: Token) -> str:
    crossing_id, kind, sign = token
    return f"{kind}{crossing_id}{'+' if sign > 0 else '-'}"


def _relabel(tokens: typing.Sequence[Token]) -> typing.Tuple[Token, ...]:
    """Renumber crossings by first appearance."""
    order: typing.Dict[int, int] = {}
    for crossing_id, _, _ in tokens:
        order.setdefault(crossing_id, len(order) + 1)
    return tuple((order[c], kind, sign) for c, kind, sign in tokens)


class GaussCode(value_object.ValueObject):
    """
    A Gauss code.

    Parameters
    ----------
    tokens : Sequence[Token]
        ``(crossing id, "O" or "U", sign)`` in walking order.

    Raises
    ------
    errors.ParseError
        If a crossing is not met exactly once over and once under, its
        two signs disagree or the ids are not ``1 .. n``.
    """

    __value_fields__ = ("tokens",)

    def __init__(self, tokens: typing.Sequence[Token] = ()) -> None:
        checked = tuple((int(c), str(kind), int(sign)) for c, kind, sign in tokens)
        seen: typing.Dict[int, typing.List[Token]] = collections.defaultdict(list)
        for position, token in enumerate(checked):
            crossing_id, kind, sign = token
            if kind not in (OVER, UNDER) or sign not in (-1, 1):
                raise errors.ParseError(
                    f"Malformed token {token}.", _format_token(token), position
                )
            seen[crossing_id].append(token)

        for crossing_id, group in seen.items():
            kinds = sorted(kind for _, kind, _ in group)
            if kinds != [OVER, UNDER]:
                raise errors.ParseError(
                    f"Crossing {crossing_id} must occur once over and once under.",
                    "",
                    crossing_id,
                )
            if group[0][2] != group[1][2]:
                raise errors.ParseError(
                    f"Crossing {crossing_id} has conflicting signs.", "", crossing_id
                )
        if sorted(seen) != list(range(1, len(seen) + 1)):
            raise errors.ParseError(
                f"Crossing ids must be 1 .. {len(seen)}.", "", 0
            )

        self.tokens: typing.Tuple[Token, ...] = checked

    def __str__(self) -> str:
        return "".join(_format_token(token) for token in self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def crossing_count(self) -> int:
        return len(self.tokens) // 2

    def is_empty(self) -> bool:
        return not self.tokens

    def sign(self, crossing_id: int) -> int:
        self._check_id(crossing_id)
        return next(s for c, _, s in self.tokens if c == crossing_id)

    def positions(self, crossing_id: int) -> typing.Tuple[int, int]:
        """Positions of the over and the under token."""
        self._check_id(crossing_id)
        found = {kind: p for p, (c, kind, _) in enumerate(self.tokens) if c == crossing_id}
        return found[OVER], found[UNDER]

    def _check_id(self, crossing_id: int) -> None:
        if not 1 <= crossing_id <= self.crossing_count:
            raise errors.InvalidIdError(
                f"Crossing id {crossing_id} is not in 1 .. {self.crossing_count}."
            )

    def crossing_change(self, crossing_id: int) -> GaussCode:
        """Swap over and under at the crossing and negate its sign."""
        self._check_id(crossing_id)
        swap = {OVER: UNDER, UNDER: OVER}
        return GaussCode(
            [
                (c, swap[kind], -sign) if c == crossing_id else (c, kind, sign)
                for c, kind, sign in self.tokens
            ]
        )

    def virtualize(self, crossing_id: int) -> GaussCode:
        """
        Make the crossing virtual. Higher ids move down by one so the
        ids stay contiguous.
        """
        self._check_id(crossing_id)
        return GaussCode(
            [
                (c - 1 if c > crossing_id else c, kind, sign)
                for c, kind, sign in self.tokens
                if c != crossing_id
            ]
        )

    def canonical(self) -> GaussCode:
        """
        Lexicographically least relabelled code over all rotations of
        the code and of its reverse.
        """
        if not self.tokens:
            return self
        candidates = []
        for sequence in (self.tokens, self.tokens[::-1]):
            for start in range(len(sequence)):
                candidates.append(_relabel(sequence[start:] + sequence[:start]))
        return GaussCode(min(candidates))

    def _reduce_loop(self) -> typing.Optional[typing.Tuple[str, GaussCode]]:
        size = len(self.tokens)
        for position, (crossing_id, _, _) in enumerate(self.tokens):
            if self.tokens[(position + 1) % size][0] == crossing_id:
                return f"R1 at crossing {crossing_id}", self.virtualize(crossing_id)
        return None

    def _reduce_bigon(self) -> typing.Optional[typing.Tuple[str, GaussCode]]:
        size = len(self.tokens)
        adjacent: typing.Dict[typing.Tuple[str, typing.FrozenSet[int]], bool] = {}
        for position, (a, kind, _) in enumerate(self.tokens):
            b, other_kind, _ = self.tokens[(position + 1) % size]
            if a != b and kind == other_kind:
                adjacent[(kind, frozenset((a, b)))] = True

        for kind, pair in sorted(adjacent, key=lambda key: (key[0], sorted(key[1]))):
            if kind != OVER or (UNDER, pair) not in adjacent:
                continue
            a, b = sorted(pair)
            if self.sign(a) == -self.sign(b):
                return f"R2 at crossings {a}, {b}", self.virtualize(b).virtualize(a)
        return None

    def reduction(self) -> typing.Optional[typing.Tuple[str, GaussCode]]:
        """
        The first Reidemeister I reduction, or failing that the first
        Reidemeister II reduction, together with its description.
        """
        if not self.tokens:
            return None
        return self._reduce_loop() or self._reduce_bigon()


def simplify(code: GaussCode) -> typing.Tuple[GaussCode, typing.Tuple[str, ...]]:
    """Apply reductions until none is left; return the code and the trace."""
    trace: typing.List[str] = []
    step = code.reduction()
    while step is not None:
        description, code = step
        trace.append(description)
        step = code.reduction()
    return code, tuple(trace)


def parse_gauss(text: str) -> GaussCode:
    """
    Parse concatenated ``O<k><sign>`` and ``U<k><sign>`` tokens. An
    empty text is the unknot.

    Raises
    ------
    errors.ParseError
        On malformed text or an invalid code.
    """
    tokens: typing.List[Token] = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _token_pattern.match(stripped, position)
        if match is None:
            raise errors.ParseError("Expected a token like O1+ or U2-.", text, position)
        kind, crossing_id, sign = match.groups()
        tokens.append((int(crossing_id), kind, 1 if sign == "+" else -1))
        position = match.end()
    return GaussCode(tokens)


def wirtinger_from_gauss(code: GaussCode) -> wirtinger.WirtingerPresentation:
    """
    Arcs run from one under crossing to the next. Relators are listed
    by crossing id; virtual crossings contribute nothing.
    """
    under = [p for p, (_, kind, _) in enumerate(code.tokens) if kind == UNDER]
    if not under:
        return wirtinger.WirtingerPresentation(1, ())

    arcs = len(under)

    def arc_at(position: int) -> str:
        return wirtinger.arc_name((bisect.bisect_left(under, position) - 1) % arcs)

    crossings = []
    for crossing_id in range(1, code.crossing_count + 1):
        over, below = code.positions(crossing_id)
        number = under.index(below)
        crossings.append(
            wirtinger.WirtingerCrossing(
                crossing_id=crossing_id,
                incoming=wirtinger.arc_name((number - 1) % arcs),
                outgoing=wirtinger.arc_name(number),
                over=arc_at(over),
                sign=code.sign(crossing_id),
            )
        )
    return wirtinger.WirtingerPresentation(arcs, crossings)


def gauss_from_pd(code: pd_.PDCode) -> GaussCode:
    """
    Walk a knot diagram from edge 1 and record each crossing. Crossing
    ids are kept.
    """
    return GaussCode(
        [
            (crossing_id, UNDER if position == 0 else OVER, code.sign(crossing_id))
            for crossing_id, position in code.walk()
        ]
    )
