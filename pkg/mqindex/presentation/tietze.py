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
Tietze transformations.

`tietze_simplify` is greedy and budgeted: it never backtracks and
the generator count it reports is an upper bound on the rank of the
group, never a claim of minimality.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "SimplificationResult",
    "eliminate_generator",
    "tietze_simplify",
)

import logging
import typing

from mqindex import errors
from mqindex.algebra import words
from mqindex.domain import value_object
from mqindex.presentation import presentation as presentation_

logger = logging.getLogger(__name__)

SHORTEN_MAX_LENGTH: typing.Final[int] = 48
"""Relators longer than this are left out of the shortening rule."""


class SimplificationResult(value_object.ValueObject):
    """
    Outcome of `tietze_simplify`. `steps` describes every
    transformation applied, in order.
    """

    __value_fields__ = ("presentation", "rank_upper_bound", "steps", "exhausted")

    def __init__(
        self,
        presentation: presentation_.Presentation,
        steps: typing.Sequence[str],
        exhausted: bool,
    ) -> None:
        self.presentation = presentation
        self.rank_upper_bound = len(presentation.generators)
        self.steps = tuple(steps)
        self.exhausted = exhausted


def _solve(defining: words.Word, name: str) -> words.Word:
    position = next(i for i, (g, _) in enumerate(defining.letters) if g == name)
    sign = defining.letters[position][1]
    before = words.Word(defining.letters[:position])
    after = words.Word(defining.letters[position + 1:])
    if sign == 1:
        # u g v = 1  =>  g = u^-1 v^-1
        return words.multiply(words.inverse(before), words.inverse(after))
    # u g^-1 v = 1  =>  g = v u
    return words.multiply(after, before)


def _eliminate_at(
    presentation: presentation_.Presentation, name: str, index: int
) -> presentation_.Presentation:
    defining = presentation.relators[index]
    image = _solve(defining, name)
    rest = presentation.relators[:index] + presentation.relators[index + 1:]
    generators = tuple(g for g in presentation.generators if g != name)
    return presentation_.Presentation(
        generators, (relator.substitute({name: image}) for relator in rest)
    )


def eliminate_generator(
    presentation: presentation_.Presentation,
    name: str,
    defining: presentation_.WordLike,
) -> presentation_.Presentation:
    """
    Remove generator `name` using a relator in which it occurs once.
    The relator is solved for the generator and the solution is
    substituted into every other relator.

    Raises
    ------
    errors.UnknownSymbolError
        If `name` is not a generator.
    errors.InputError
        If `defining` is not a relator or does not contain `name`
        exactly once.
    """
    if name not in presentation.generators:
        raise errors.UnknownSymbolError(name)

    word = presentation.word(defining)
    try:
        index = presentation.relators.index(word)
    except ValueError:
        raise errors.InputError(
            f"{str(word)!r} is not a relator of {presentation}."
        ) from None

    multiplicity = word.occurrences(name)
    if multiplicity != 1:
        raise errors.InputError(
            f"Generator {name!r} occurs {multiplicity} times in "
            f"{str(word)!r}; exactly one occurrence is required."
        )

    return _eliminate_at(presentation, name, index)


def _cyclically_reduce(
    presentation: presentation_.Presentation,
) -> typing.Optional[presentation_.Presentation]:
    reduced = tuple(r.cyclically_reduce() for r in presentation.relators)
    if reduced == presentation.relators:
        return None
    return presentation.with_relators(reduced)


def _drop_trivial(
    presentation: presentation_.Presentation,
) -> typing.Optional[typing.Tuple[presentation_.Presentation, str]]:
    seen: typing.Set[typing.Hashable] = set()
    for index, relator in enumerate(presentation.relators):
        key = relator.cyclic_key()
        if relator.is_identity() or key in seen:
            kept = presentation.relators[:index] + presentation.relators[index + 1:]
            reason = "empty" if relator.is_identity() else "duplicate"
            return presentation.with_relators(kept), f"delete {reason} relator #{index}"
        seen.add(key)
    return None


def _eliminate_once(
    presentation: presentation_.Presentation,
) -> typing.Optional[typing.Tuple[presentation_.Presentation, str]]:
    best: typing.Optional[typing.Tuple[typing.Tuple[int, int, int, int], str, int]] = None
    for index, relator in enumerate(presentation.relators):
        for position, name in enumerate(presentation.generators):
            if relator.occurrences(name) != 1:
                continue
            elsewhere = sum(
                other.occurrences(name)
                for j, other in enumerate(presentation.relators)
                if j != index
            )
            key = (len(relator), elsewhere, index, position)
            if best is None or key < best[0]:
                best = (key, name, index)

    if best is None:
        return None

    _, name, index = best
    return (
        _eliminate_at(presentation, name, index),
        f"eliminate {name} via relator #{index}",
    )


def _shorten(
    presentation: presentation_.Presentation,
    max_length: int = SHORTEN_MAX_LENGTH,
) -> typing.Optional[typing.Tuple[presentation_.Presentation, str]]:
    relators = presentation.relators
    for i, target in enumerate(relators):
        if len(target) > max_length:
            continue
        best: typing.Optional[words.Word] = None
        for j, other in enumerate(relators):
            if i == j or len(other) > max_length:
                continue
            partners = other.rotations() + words.inverse(other).rotations()
            for rotation in target.rotations():
                for partner in partners:
                    candidate = words.multiply(rotation, partner).cyclically_reduce()
                    if len(candidate) < len(target) and (
                        best is None or candidate.sort_key() < best.sort_key()
                    ):
                        best = candidate
        if best is not None:
            updated = list(relators)
            updated[i] = best
            return (
                presentation.with_relators(updated),
                f"shorten relator #{i} to length {len(best)}",
            )
    return None


def tietze_simplify(
    presentation: presentation_.Presentation,
    budget: int = 200,
) -> SimplificationResult:
    """
    Greedy simplification by Tietze moves.

    Rules are tried in order: cyclic reduction, deletion of empty or
    duplicate relators, elimination of a generator occurring once in
    some relator (shortest relator first, then fewest occurrences
    elsewhere) and shortening a relator by multiplying it with a
    cyclic conjugate of another relator or its inverse. Each rule
    application other than cyclic reduction costs one unit of budget.
    """
    if budget <= 0:
        raise errors.ConfigurationError("Tietze budget must be positive.")

    current = presentation
    steps: typing.List[str] = []
    remaining = budget
    while True:
        reduced = _cyclically_reduce(current)
        if reduced is not None:
            current = reduced
            steps.append("cyclically reduce relators")

        if remaining == 0:
            logger.warning(
                "Tietze budget of %d exhausted at %d generators", budget, current.rank
            )
            return SimplificationResult(current, steps, exhausted=True)

        for rule in (_drop_trivial, _eliminate_once, _shorten):
            outcome = rule(current)
            if outcome is not None:
                current, description = outcome
                steps.append(description)
                logger.debug("tietze: %s -> %s", description, current)
                remaining -= 1
                break
        else:
            logger.info(
                "Tietze simplification finished with %d generators and %d relators",
                current.rank,
                len(current.relators),
            )
            return SimplificationResult(current, steps, exhausted=False)
