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

import pytest

from mqindex import errors
from mqindex.presentation import presentation
from mqindex.presentation import tietze


class TestEliminateGenerator:
    def test_substitutes_solution(self) -> None:
        group = presentation.Presentation(["x", "y"], ["y x^-1", "x y x y"])
        result = tietze.eliminate_generator(group, "y", "y x^-1")
        assert result.generators == ("x",)
        assert [str(r) for r in result.relators] == ["x x x x"]

    def test_inverse_occurrence(self) -> None:
        group = presentation.Presentation(["x", "y"], ["x y^-1 x", "y"])
        result = tietze.eliminate_generator(group, "y", "x y^-1 x")
        assert [str(r) for r in result.relators] == ["x x"]

    def test_unknown_generator(self, trefoil_group: presentation.Presentation) -> None:
        with pytest.raises(errors.UnknownSymbolError):
            tietze.eliminate_generator(trefoil_group, "z", "x")

    def test_defining_word_must_be_relator(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        with pytest.raises(errors.InputError, match="is not a relator"):
            tietze.eliminate_generator(trefoil_group, "x", "x y")

    def test_single_occurrence_required(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        with pytest.raises(errors.InputError, match="exactly one occurrence"):
            tietze.eliminate_generator(trefoil_group, "x", "x y x y^-1 x^-1 y^-1")


class TestSimplify:
    def test_trefoil_is_already_minimal(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        result = tietze.tietze_simplify(trefoil_group)
        assert result.presentation == trefoil_group
        assert result.rank_upper_bound == 2
        assert not result.exhausted
        assert result.steps == ()

    def test_eliminates_trivial_generator(self) -> None:
        result = tietze.tietze_simplify(presentation.Presentation(["x", "y"], ["y"]))
        assert result.presentation == presentation.Presentation(["x"])
        assert result.rank_upper_bound == 1

    def test_drops_inverse_duplicate(self) -> None:
        group = presentation.Presentation(
            ["x", "y"], ["x y x^-1 y^-1", "y x y^-1 x^-1"]
        )
        result = tietze.tietze_simplify(group)
        assert len(result.presentation.relators) == 1
        assert result.steps[0] == "delete duplicate relator #1"

    def test_cyclic_reduction(self) -> None:
        group = presentation.Presentation(["x", "y"], ["y x x y^-1", "x y x^-1 y^-1"])
        result = tietze.tietze_simplify(group)
        assert "cyclically reduce relators" in result.steps

    def test_wirtinger_trefoil_reaches_two_generators(self) -> None:
        group = presentation.Presentation(
            ["a", "b", "c"],
            ["c a c^-1 b^-1", "a b a^-1 c^-1", "b c b^-1 a^-1"],
        )
        result = tietze.tietze_simplify(group)
        assert result.rank_upper_bound <= 2
        assert presentation.h1_equal(result.presentation, group)

    def test_budget_exhaustion(self) -> None:
        group = presentation.Presentation(["x", "y", "z"], ["y", "z"])
        result = tietze.tietze_simplify(group, budget=1)
        assert result.exhausted
        assert result.rank_upper_bound == 2

    def test_invalid_budget(self, trefoil_group: presentation.Presentation) -> None:
        with pytest.raises(errors.ConfigurationError):
            tietze.tietze_simplify(trefoil_group, budget=0)

    def test_preserves_abelianization(self) -> None:
        group = presentation.Presentation(
            ["x", "y", "z"], ["x y z^-1", "x x y", "z z z"]
        )
        result = tietze.tietze_simplify(group)
        assert result.presentation.abelianization == group.abelianization
