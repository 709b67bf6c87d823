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
from mqindex import sentinel
from mqindex.algebra import words
from mqindex.presentation import closure
from mqindex.presentation import presentation


class TestConjugators:
    def test_reduced_words_in_shortlex_order(self) -> None:
        found = [str(w) for w in closure.conjugators(["x"], 2)]
        assert found == ["", "x", "x^-1", "x x", "x^-1 x^-1"]

    def test_count(self) -> None:
        # 1 + 4 + 4 * 3 reduced words over two generators
        assert len(list(closure.conjugators(["x", "y"], 2))) == 17


class TestNormalClosure:
    def test_identity_needs_no_factor(self, free_group: presentation.Presentation) -> None:
        expression = closure.normal_closure_member_bounded(free_group, "", ["x"], 0, 1)
        assert isinstance(expression, closure.ClosureExpression)
        assert expression.factors == ()
        assert str(expression) == "1"

    def test_single_conjugate(self, free_group: presentation.Presentation) -> None:
        expression = closure.normal_closure_member_bounded(
            free_group, "y x y^-1", ["x"], 1, 1
        )
        assert isinstance(expression, closure.ClosureExpression)
        (factor,) = expression.factors
        assert factor.conjugator == words.Word.parse("y")
        assert factor.source == "seed"
        assert str(factor) == "[y] x [y]^-1"

    def test_product_of_conjugates(self, free_group: presentation.Presentation) -> None:
        target = words.Word.parse("x y x y^-1")
        expression = closure.normal_closure_member_bounded(
            free_group, target, ["x"], 1, 2
        )
        assert isinstance(expression, closure.ClosureExpression)
        assert len(expression.factors) <= 2
        assert expression.product() == target

    def test_relators_are_available(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        target = words.inverse(trefoil_group.relators[0])
        expression = closure.normal_closure_member_bounded(trefoil_group, target, [], 0, 1)
        assert isinstance(expression, closure.ClosureExpression)
        assert expression.factors[0].source == "relator"
        assert expression.factors[0].exponent == -1

    def test_outside_closure_is_inconclusive(
        self, free_group: presentation.Presentation
    ) -> None:
        result = closure.normal_closure_member_bounded(free_group, "y", ["x"], 1, 2)
        assert result is sentinel.INCONCLUSIVE
        assert not result

    def test_foreign_symbol(self, free_group: presentation.Presentation) -> None:
        with pytest.raises(errors.UnknownSymbolError):
            closure.normal_closure_member_bounded(free_group, "z", ["x"], 1, 1)
