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
Bounded search for normal closure membership.

A target word is expressed as a product of conjugates
``c · s^±1 · c^-1`` where `s` is a seed or a relator and `c` a reduced
word of bounded length. Conjugators are enumerated in shortlex order
and products in breadth-first order over a visited set, so the
certificate found is reproducible.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "ConjugateFactor",
    "ClosureExpression",
    "conjugators",
    "normal_closure_member_bounded",
)

import itertools
import logging
import typing

from mqindex import errors
from mqindex import sentinel
from mqindex.algebra import words
from mqindex.domain import value_object
from mqindex.presentation import presentation as presentation_

logger = logging.getLogger(__name__)

MAX_STATES: typing.Final[int] = 200_000
"""Upper bound on the number of distinct partial products explored."""


class ConjugateFactor(value_object.ValueObject):
    """One factor ``conjugator · word^exponent · conjugator^-1``."""

    __value_fields__ = ("conjugator", "word", "exponent", "source")

    def __init__(
        self,
        conjugator: words.Word,
        word: words.Word,
        exponent: int,
        source: typing.Literal["seed", "relator"],
    ) -> None:
        self.conjugator = conjugator
        self.word = word
        self.exponent = exponent
        self.source = source

    def value(self) -> words.Word:
        return words.conjugate(words.power(self.word, self.exponent), self.conjugator)

    def __str__(self) -> str:
        inner = str(self.word) if self.exponent == 1 else f"({self.word})^-1"
        if self.conjugator.is_identity():
            return inner
        return f"[{self.conjugator}] {inner} [{self.conjugator}]^-1"


class ClosureExpression(value_object.ValueObject):
    """
    Certificate that `target` lies in the normal closure of the seeds
    modulo the relators: the free product of `factors` equals `target`.
    """

    __value_fields__ = ("target", "factors")

    def __init__(
        self,
        target: words.Word,
        factors: typing.Sequence[ConjugateFactor],
    ) -> None:
        self.target = target
        self.factors = tuple(factors)

    def product(self) -> words.Word:
        return words.multiply(*(factor.value() for factor in self.factors))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(str(factor) for factor in self.factors)


def conjugators(
    generators: typing.Sequence[str], depth: int
) -> typing.Iterator[words.Word]:
    """Reduced words of length at most `depth`, in shortlex order."""
    letters = [(name, sign) for name in generators for sign in (1, -1)]
    yield words.IDENTITY
    for length in range(1, depth + 1):
        for combination in itertools.product(letters, repeat=length):
            if all(
                not (a[0] == b[0] and a[1] == -b[1])
                for a, b in zip(combination, combination[1:])
            ):
                yield words.Word(combination)


def normal_closure_member_bounded(
    presentation: presentation_.Presentation,
    target: presentation_.WordLike,
    seeds: typing.Sequence[presentation_.WordLike],
    depth: int,
    width: int,
) -> sentinel.SentinelOr[ClosureExpression]:
    """
    Search for `target` as a product of at most `width` conjugates of
    seeds and relators by conjugators of length at most `depth`.
    Sound, not complete: `sentinel.INCONCLUSIVE` means nothing was
    found within the bounds.
    """
    goal = presentation.word(target)
    seed_words = [presentation.word(seed) for seed in seeds]
    if goal.is_identity():
        return ClosureExpression(goal, ())

    pieces: typing.Dict[words.Word, ConjugateFactor] = {}
    sources = [(seed, "seed") for seed in seed_words] + [
        (relator, "relator") for relator in presentation.relators
    ]
    for conjugator in conjugators(presentation.generators, depth):
        for word, source in sources:
            if word.is_identity():
                continue
            for exponent in (1, -1):
                factor = ConjugateFactor(
                    conjugator, word, exponent, source  # type: ignore[arg-type]
                )
                pieces.setdefault(factor.value(), factor)

    if goal in pieces:
        return _certified(goal, [pieces[goal]])

    frontier: typing.Dict[words.Word, typing.List[ConjugateFactor]] = {words.IDENTITY: []}
    visited = {words.IDENTITY}
    for level in range(1, width):
        following: typing.Dict[words.Word, typing.List[ConjugateFactor]] = {}
        for state, path in frontier.items():
            for value, factor in pieces.items():
                product = words.multiply(state, value)
                if product in visited:
                    continue
                visited.add(product)
                extended = path + [factor]
                remainder = words.multiply(words.inverse(product), goal)
                last = pieces.get(remainder)
                if last is not None:
                    return _certified(goal, extended + [last])
                following[product] = extended
                if len(visited) > MAX_STATES:
                    logger.warning(
                        "Normal closure search for %s stopped after %d states",
                        goal, len(visited),
                    )
                    return sentinel.INCONCLUSIVE
        logger.debug("closure level %d: %d new states", level, len(following))
        frontier = following

    return sentinel.INCONCLUSIVE


def _certified(
    goal: words.Word, factors: typing.Sequence[ConjugateFactor]
) -> ClosureExpression:
    expression = ClosureExpression(goal, factors)
    if expression.product() != goal:
        raise errors.InconsistencyError(
            f"Closure certificate {expression} does not reproduce {goal}."
        )
    logger.info("Found %s as %s", goal, expression)
    return expression
