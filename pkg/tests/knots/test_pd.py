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
from mqindex.knots import pd

HOPF_LINK = "X[4,1,3,2] X[2,3,1,4]"


class TestParse:
    def test_trefoil(self, trefoil_pd: pd.PDCode) -> None:
        assert len(trefoil_pd) == 3
        assert trefoil_pd.is_knot
        assert str(trefoil_pd) == "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"

    def test_wrapper_and_commas(self, trefoil_pd: pd.PDCode) -> None:
        wrapped = pd.parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")
        assert wrapped == trefoil_pd

    def test_empty_is_unknot(self) -> None:
        unknot = pd.parse_pd("  ")
        assert len(unknot) == 0
        assert unknot.components == 1
        assert unknot.walk() == ()

    @pytest.mark.parametrize(
        "text, position",
        [("X[1,2,3]", 0), ("X[1,4,2,5] X[3,6,4,1] Y[5,2,6,3]", 22), ("PD[Q]", 3)],
    )
    def test_malformed_text(self, text: str, position: int) -> None:
        with pytest.raises(errors.ParseError) as info:
            pd.parse_pd(text)
        assert info.value.position == position

    @pytest.mark.parametrize(
        "text",
        ["X[1,1,1,2]", "X[1,3,3,1]", "X[1,4,2,5] X[3,6,4,1]", "X[0,1,2,1]"],
    )
    def test_invalid_code(self, text: str) -> None:
        with pytest.raises(errors.ParseError):
            pd.parse_pd(text)


class TestStructure:
    def test_trefoil_signs(self, trefoil_pd: pd.PDCode) -> None:
        assert len(set(trefoil_pd.signs)) == 1
        assert abs(trefoil_pd.writhe()) == 3

    def test_figure_eight_is_amphichiral_in_writhe(self, figure_eight_pd: pd.PDCode) -> None:
        assert figure_eight_pd.writhe() == 0

    def test_walk_starts_at_edge_one(self, trefoil_pd: pd.PDCode) -> None:
        walk = trefoil_pd.walk()
        assert len(walk) == 6
        crossing_id, position = walk[0]
        assert trefoil_pd.crossings[crossing_id - 1][position] == 1

    def test_link(self) -> None:
        hopf = pd.parse_pd(HOPF_LINK)
        assert hopf.components == 2
        assert not hopf.is_knot
        with pytest.raises(errors.InputError):
            hopf.walk()

    def test_crossing_change_flips_one_sign(self, trefoil_pd: pd.PDCode) -> None:
        changed = trefoil_pd.crossing_change(1)
        before = trefoil_pd.signs
        assert changed.signs == (-before[0],) + before[1:]
        assert changed.crossing_change(1).signs == before

    def test_crossing_change_unknown_id(self, trefoil_pd: pd.PDCode) -> None:
        with pytest.raises(errors.InvalidIdError):
            trefoil_pd.crossing_change(4)


class TestWirtingerFromPD:
    def test_trefoil(self, trefoil_pd: pd.PDCode) -> None:
        group = pd.wirtinger_from_pd(trefoil_pd)
        assert group.generators == ("x1", "x2", "x3")
        assert len(group.relators) == 3
        assert group.abelianization.is_infinite_cyclic()

    def test_unknot(self) -> None:
        group = pd.wirtinger_from_pd(pd.parse_pd(""))
        assert group.generators == ("x1",)
        assert group.relators == ()

    def test_link_needs_opt_in(self) -> None:
        hopf = pd.parse_pd(HOPF_LINK)
        with pytest.raises(errors.InputError):
            pd.wirtinger_from_pd(hopf)
        group = pd.wirtinger_from_pd(hopf, require_knot=False)
        assert str(group.abelianization) == "Z + Z"
