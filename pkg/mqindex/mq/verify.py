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
Verification of normal generating witnesses.

Three strategies are available. `NecessaryOnly` checks null-homology
and that adding the words does not change the abelianization.
`Completion` additionally completes ``<S | R ∪ W>`` and tests whether
every pair of generators commutes there; when completion runs out of
budget a search for a nonabelian permutation quotient killing the
words may still refute the claim. `BoundedSearch` expresses every
generator commutator through the bounded normal closure search.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "NecessaryOnly",
    "BoundedSearch",
    "Completion",
    "Strategy",
    "verify_ngs",
    "verify_witness",
    "finite_quotient_refutes",
)

import itertools
import logging
import typing

from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import SymmetricGroup

from mqindex import sentinel
from mqindex.algebra import words
from mqindex.domain import value_object
from mqindex.mq import witness as witness_
from mqindex.presentation import closure
from mqindex.presentation import presentation as presentation_
from mqindex.presentation import rewriting

logger = logging.getLogger(__name__)


class NecessaryOnly(value_object.ValueObject):
    __value_fields__ = ()


class BoundedSearch(value_object.ValueObject):
    __value_fields__ = ("depth", "width")

    def __init__(self, depth: int = 2, width: int = 3) -> None:
        self.depth = depth
        self.width = width


class Completion(value_object.ValueObject):
    __value_fields__ = ("limits", "quotient_search")

    def __init__(
        self,
        limits: typing.Optional[rewriting.CompletionLimits] = None,
        quotient_search: bool = True,
    ) -> None:
        self.limits = limits or rewriting.CompletionLimits()
        self.quotient_search = quotient_search


Strategy = typing.Union[NecessaryOnly, BoundedSearch, Completion]

Status = witness_.Status


def _generator_commutators(
    presentation: presentation_.Presentation,
) -> typing.List[words.Word]:
    gens = [words.generator(name) for name in presentation.generators]
    return [
        words.commutator(gens[i], gens[j])
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
    ]


def _necessary(
    presentation: presentation_.Presentation, claimed: typing.Sequence[words.Word]
) -> bool:
    if not all(presentation_.is_null_homologous(word, presentation) for word in claimed):
        return False
    return presentation.add_relators(claimed).abelianization == presentation.abelianization


def _evaluate(
    word: words.Word, images: typing.Mapping[str, Permutation]
) -> Permutation:
    result = Permutation(images[next(iter(images))].size - 1)
    for name, sign in word.letters:
        image = images[name]
        result = result * (image if sign == 1 else image ** -1)
    return result


def _symmetric_groups(rank: int) -> typing.List[int]:
    if rank <= 2:
        return [3, 4]
    return [3] if rank <= 4 else []


def finite_quotient_refutes(
    presentation: presentation_.Presentation,
    claimed: typing.Sequence[words.Word],
) -> bool:
    """
    Whether some homomorphism onto a nonabelian subgroup of a small
    symmetric group kills every relator and every claimed word. Such a
    homomorphism shows that ``<S | R ∪ W>`` is nonabelian, so the
    words cannot normally generate the commutator subgroup.
    """
    names = presentation.generators
    if len(names) < 2:
        return False

    for degree in _symmetric_groups(len(names)):
        elements = sorted(SymmetricGroup(degree).elements, key=lambda p: p.array_form)
        for assignment in itertools.product(elements, repeat=len(names)):
            if all(a.commutes_with(b) for a, b in itertools.combinations(assignment, 2)):
                continue
            images = dict(zip(names, assignment))
            if all(
                _evaluate(word, images).is_Identity
                for word in itertools.chain(presentation.relators, claimed)
            ):
                logger.info(
                    "Nonabelian quotient in S%d kills %d claimed words", degree, len(claimed)
                )
                return True
    return False


def verify_ngs(
    presentation: presentation_.Presentation,
    witness: typing.Union[
        witness_.NormalGeneratorWitness, typing.Sequence[presentation_.WordLike]
    ],
    strategy: typing.Optional[Strategy] = None,
) -> witness_.Status:
    """
    Check to the extent decidable that the witness words normally
    generate the commutator subgroup of the presented group.
    """
    strategy = strategy if strategy is not None else NecessaryOnly()
    claimed = [
        presentation.word(word)
        for word in (
            witness.words
            if isinstance(witness, witness_.NormalGeneratorWitness)
            else witness
        )
    ]

    if not _necessary(presentation, claimed):
        return Status.REFUTED

    if isinstance(strategy, Completion):
        quotient = presentation.add_relators(claimed)
        system = rewriting.knuth_bendix(quotient, strategy.limits)
        if system is not sentinel.INCONCLUSIVE:
            assert isinstance(system, rewriting.RewriteSystem)
            if all(
                rewriting.word_problem(system, commutator)
                for commutator in _generator_commutators(presentation)
            ):
                return Status.VERIFIED
            return Status.REFUTED
        if strategy.quotient_search and finite_quotient_refutes(presentation, claimed):
            return Status.REFUTED

    elif isinstance(strategy, BoundedSearch):
        found = all(
            closure.normal_closure_member_bounded(
                presentation, commutator, claimed, strategy.depth, strategy.width
            )
            is not sentinel.INCONCLUSIVE
            for commutator in _generator_commutators(presentation)
        )
        if found:
            return Status.VERIFIED

    return Status.NECESSARY_CHECKS_PASSED


def verify_witness(
    witness: witness_.NormalGeneratorWitness,
    strategy: typing.Optional[Strategy] = None,
) -> witness_.NormalGeneratorWitness:
    """`verify_ngs` on the witness's own presentation, recorded on a copy."""
    status = verify_ngs(witness.presentation, witness, strategy)
    if status.level < witness.status.level and status is not Status.REFUTED:
        return witness
    return witness.with_status(status)
