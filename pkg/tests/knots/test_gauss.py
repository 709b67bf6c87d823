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
from mqindex.alexander import matrix
from mqindex.knots import gauss
from mqindex.knots import pd


class TestGaussCode:
    def test_from_trefoil_pd(self, trefoil_pd: pd.PDCode, trefoil_gauss: gauss.GaussCode) -> None:
        assert trefoil_gauss.crossing_count == 3
        assert [kind for _, kind, _ in trefoil_gauss.tokens] == ["U", "O"] * 3
        assert {trefoil_gauss.sign(c) for c in (1, 2, 3)} == set(trefoil_pd.signs)

    def test_parse_str(self, trefoil_gauss: gauss.GaussCode) -> None:
        assert gauss.parse_gauss(str(trefoil_gauss)) == trefoil_gauss
        assert gauss.parse_gauss(" O1- U2+ U1- O2+ ") == gauss.GaussCode(
            [(1, "O", -1), (2, "U", 1), (1, "U", -1), (2, "O", 1)]
        )

    def test_empty(self) -> None:
        code = gauss.parse_gauss("")
        assert code.is_empty()
        assert str(code) == ""

    @pytest.mark.parametrize(
        "text", ["O1+U1+O2+", "O1+U1-", "O2+U2+", "O1+O1+", "X1+", "O1+U1"]
    )
    def test_invalid(self, text: str) -> None:
        with pytest.raises(errors.ParseError):
            gauss.parse_gauss(text)

    def test_parse_error_position(self) -> None:
        with pytest.raises(errors.ParseError) as info:
            gauss.parse_gauss("O1+U1+?")
        assert info.value.position == 6

    def test_crossing_change(self, trefoil_gauss: gauss.GaussCode) -> None:
        changed = trefoil_gauss.crossing_change(2)
        assert changed.sign(2) == -trefoil_gauss.sign(2)
        assert changed.positions(2) == tuple(reversed(trefoil_gauss.positions(2)))
        assert changed.crossing_change(2) == trefoil_gauss

    def test_virtualize_keeps_ids_contiguous(self, trefoil_gauss: gauss.GaussCode) -> None:
        virtual = trefoil_gauss.virtualize(1)
        assert virtual.crossing_count == 2
        assert sorted({c for c, _, _ in virtual.tokens}) == [1, 2]

    def test_unknown_crossing(self, trefoil_gauss: gauss.GaussCode) -> None:
        with pytest.raises(errors.InvalidIdError):
            trefoil_gauss.virtualize(0)
        with pytest.raises(errors.InvalidIdError):
            trefoil_gauss.sign(4)

    def test_canonical_ignores_rotation_and_labels(
        self, trefoil_gauss: gauss.GaussCode
    ) -> None:
        tokens = trefoil_gauss.tokens
        rotated = gauss.GaussCode(tokens[2:] + tokens[:2])
        assert rotated.canonical() == trefoil_gauss.canonical()


class TestSimplify:
    def test_loop(self) -> None:
        code, trace = gauss.simplify(gauss.parse_gauss("O1+U1+"))
        assert code.is_empty()
        assert trace == ("R1 at crossing 1",)

    def test_bigon(self) -> None:
        code, trace = gauss.simplify(gauss.parse_gauss("O1+O2-U1+U2-"))
        assert code.is_empty()
        assert trace == ("R2 at crossings 1, 2",)

    def test_same_sign_bigon_stays(self) -> None:
        code = gauss.parse_gauss("O1+O2+U1+U2+")
        assert gauss.simplify(code) == (code, ())

    def test_trefoil_is_reduced(self, trefoil_gauss: gauss.GaussCode) -> None:
        assert gauss.simplify(trefoil_gauss) == (trefoil_gauss, ())


class TestWirtingerFromGauss:
    def test_matches_pd_route(self, trefoil_pd: pd.PDCode, trefoil_gauss: gauss.GaussCode) -> None:
        from_gauss = gauss.wirtinger_from_gauss(trefoil_gauss)
        from_pd = pd.wirtinger_from_pd(trefoil_pd)
        assert from_gauss.rank == 3
        assert matrix.alexander_polynomial(from_gauss) == matrix.alexander_polynomial(from_pd)

    def test_figure_eight(self, figure_eight_pd: pd.PDCode) -> None:
        group = gauss.wirtinger_from_gauss(gauss.gauss_from_pd(figure_eight_pd))
        assert str(matrix.alexander_polynomial(group)) == "1 - 3*t + t^2"

    def test_unknot(self) -> None:
        group = gauss.wirtinger_from_gauss(gauss.GaussCode())
        assert group.generators == ("x1",)
        assert group.relators == ()
