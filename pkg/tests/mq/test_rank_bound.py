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

import pytest

from mqindex import errors
from mqindex.algebra import words
from mqindex.mq import rank_bound
from mqindex.mq import sampling
from mqindex.mq import witness
from mqindex.presentation import presentation


@pytest.mark.parametrize(
    "rank, h, expected", [(0, 0, 0), (1, 1, 0), (2, 1, 1), (2, 2, 1), (3, 1, 2), (4, 4, 6)]
)
def test_rank_bound_size(rank: int, h: int, expected: int) -> None:
    assert rank_bound.rank_bound_size(rank, h) == expected


class TestNielsenMoves:
    def test_invalid_kind(self) -> None:
        with pytest.raises(errors.InputError):
            rank_bound.NielsenMove("shear", 0, 1)  # type: ignore[arg-type]

    def test_multiply_needs_two_positions(self) -> None:
        with pytest.raises(errors.InputError):
            rank_bound.NielsenMove("multiply", 1, 1, 2)

    def test_apply(self) -> None:
        images = (words.generator("a"), words.generator("b"))
        assert [str(w) for w in rank_bound.NielsenMove("swap", 0, 1).apply(images)] == [
            "b",
            "a",
        ]
        assert [str(w) for w in rank_bound.NielsenMove("multiply", 0, 1, -2).apply(images)] == [
            "a b^-1 b^-1",
            "b",
        ]
        assert str(rank_bound.NielsenMove("invert", 1)) == "invert(1)"

    def test_inverse_undoes_automorphism(self) -> None:
        automorphism = rank_bound.NielsenAutomorphism(
            ["a", "b", "c"],
            [
                rank_bound.NielsenMove("multiply", 0, 2, 3),
                rank_bound.NielsenMove("swap", 0, 1),
                rank_bound.NielsenMove("invert", 2),
                rank_bound.NielsenMove("multiply", 2, 1, -1),
            ],
        )
        generators = [words.generator(name) for name in "abc"]
        assert automorphism.inverse().apply(automorphism.apply(generators)) == tuple(
            generators
        )


class TestRankBound:
    def test_trefoil(self, trefoil_group: presentation.Presentation) -> None:
        certificate = rank_bound.rank_bound_ngs(trefoil_group)
        assert certificate.h == 1
        assert certificate.bound == 1
        assert certificate.coefficients.rows == 1
        assert certificate.witness.provenance is witness.Provenance.RANK_BOUND
        assert certificate.witness.status is witness.Status.NECESSARY_CHECKS_PASSED

    def test_free_abelian_rank_two(self, free_group: presentation.Presentation) -> None:
        certificate = rank_bound.rank_bound_ngs(free_group)
        assert certificate.h == 2
        assert certificate.bound == 1
        assert certificate.witness.words[0].symbols() == {"x", "y"}

    def test_trivial_abelianization(self) -> None:
        group = presentation.Presentation(["a", "b"], ["a", "b"])
        certificate = rank_bound.rank_bound_ngs(group)
        assert certificate.h == 0
        assert certificate.bound == 2

    def test_torsion(self) -> None:
        group = presentation.Presentation(["a", "b"], ["a a a b^-1 b^-1", "b b b b b"])
        certificate = rank_bound.rank_bound_ngs(group)
        assert certificate.h == group.abelianization.minimal_generators
        assert certificate.bound == rank_bound.rank_bound_size(2, certificate.h)

    @pytest.mark.parametrize("case", range(100))
    def test_random_presentations(self, case: int) -> None:
        group = sampling.random_presentation(random.Random(1000 + case))
        certificate = rank_bound.rank_bound_ngs(group)
        h = group.abelianization.minimal_generators
        assert certificate.h == h
        assert certificate.bound == rank_bound.rank_bound_size(group.rank, h)
        assert certificate.coefficients.rows == group.rank - h
        assert len(certificate.transformed_generators) == group.rank
        assert all(
            presentation.is_null_homologous(word, group)
            for word in certificate.witness.words
        )
