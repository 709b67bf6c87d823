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
from __future__ import annotations

import random
import typing

import pytest_bdd as ts  # technical specifications
from hamcrest import assert_that
from hamcrest import equal_to
from hamcrest import greater_than
from hamcrest import is_
from hamcrest import is_not

from mqindex import sentinel
from mqindex.mq import rank_bound
from mqindex.mq import sampling
from mqindex.mq import transfer
from mqindex.mq import verify
from mqindex.mq import witness
from mqindex.presentation import presentation
from mqindex.presentation import rewriting

FEATURE = "group_properties.feature"

LIMITS = rewriting.CompletionLimits(max_rules=100, max_length=20, max_steps=10)

Pair = typing.Tuple[presentation.Presentation, presentation.Presentation]
Transfer = typing.Tuple[Pair, witness.NormalGeneratorWitness, witness.NormalGeneratorWitness]


@ts.scenario(FEATURE, "Rank-bound witnesses")
def test_rank_bound_witnesses() -> None:
    pass


@ts.scenario(FEATURE, "Transferred witnesses")
def test_transferred_witnesses() -> None:
    pass


@ts.given(ts.parsers.parse("{count:d} random presentations"), target_fixture="groups")
def _(count: int, rng: random.Random) -> typing.List[presentation.Presentation]:
    return [sampling.random_presentation(rng) for _ in range(count)]


@ts.when("we build the rank-bound witness of each", target_fixture="certificates")
def _(
    groups: typing.List[presentation.Presentation],
) -> typing.List[rank_bound.RankBoundCertificate]:
    return [rank_bound.rank_bound_ngs(group) for group in groups]


@ts.then("each witness has r + h(h-3)/2 null-homologous words")
def _(
    groups: typing.List[presentation.Presentation],
    certificates: typing.List[rank_bound.RankBoundCertificate],
) -> None:
    for group, certificate in zip(groups, certificates):
        h = group.abelianization.minimal_generators
        assert_that(len(certificate.witness), equal_to(rank_bound.rank_bound_size(group.rank, h)))
        for word in certificate.witness.words:
            assert_that(presentation.is_null_homologous(word, group), is_(True))


@ts.then("adding the words as relators keeps the abelianization")
def _(
    groups: typing.List[presentation.Presentation],
    certificates: typing.List[rank_bound.RankBoundCertificate],
) -> None:
    for group, certificate in zip(groups, certificates):
        quotient = group.add_relators(certificate.witness.words)
        assert_that(quotient.abelianization, equal_to(group.abelianization))


@ts.then("every witness whose quotient completes is verified")
def _(
    groups: typing.List[presentation.Presentation],
    certificates: typing.List[rank_bound.RankBoundCertificate],
) -> None:
    completed = 0
    for group, certificate in zip(groups, certificates):
        quotient = group.add_relators(certificate.witness.words)
        status = verify.verify_ngs(group, certificate.witness, verify.Completion(LIMITS))
        assert_that(status, is_not(witness.Status.REFUTED))
        if rewriting.knuth_bendix(quotient, LIMITS) is not sentinel.INCONCLUSIVE:
            completed += 1
            assert_that(status, equal_to(witness.Status.VERIFIED))
    assert_that(completed, greater_than(0))


@ts.given(
    "1 to 3 null-homologous relator replacements of each",
    target_fixture="pairs",
)
def _(groups: typing.List[presentation.Presentation], rng: random.Random) -> typing.List[Pair]:
    return [
        (group, sampling.replace_randomly(rng, group, rng.randint(1, 3))) for group in groups
    ]


@ts.when("we transfer the verified rank-bound witnesses", target_fixture="transfers")
def _(pairs: typing.List[Pair]) -> typing.List[Transfer]:
    transfers: typing.List[Transfer] = []
    for source, target in pairs:
        original = verify.verify_witness(
            rank_bound.rank_bound_ngs(source).witness, verify.Completion(LIMITS)
        )
        if original.status is witness.Status.VERIFIED:
            moved = transfer.transfer_ngs(source, target, original)
            transfers.append(((source, target), original, moved))
    assert_that(len(transfers), greater_than(0))
    return transfers


@ts.then("each transferred witness has the replaced relators and the original words")
def _(transfers: typing.List[Transfer]) -> None:
    for (source, target), original, moved in transfers:
        difference = presentation.diff(source, target)
        assert_that(len(moved), equal_to(len(difference.only_left) + len(original)))
        assert_that(moved.words[len(difference.only_left):], equal_to(original.words))


@ts.then("no transferred witness is refuted")
def _(transfers: typing.List[Transfer]) -> None:
    for (_, target), _, moved in transfers:
        status = verify.verify_ngs(target, moved, verify.Completion(LIMITS))
        assert_that(status, is_not(witness.Status.REFUTED))
