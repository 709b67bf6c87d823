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
from mqindex.knots import wirtinger


class TestWirtingerCrossing:
    @pytest.mark.parametrize(
        "sign, expected",
        [(1, "x2 x3^-1 x1^-1 x3"), (-1, "x2 x3 x1^-1 x3^-1"), (0, "x2 x1^-1")],
    )
    def test_relator(self, sign: int, expected: str) -> None:
        crossing = wirtinger.WirtingerCrossing(1, "x1", "x2", "x3", sign)
        assert str(crossing.relator()) == expected

    def test_invalid_sign(self) -> None:
        with pytest.raises(errors.InputError):
            wirtinger.WirtingerCrossing(1, "x1", "x2", "x3", 2)

    def test_changed(self) -> None:
        crossing = wirtinger.WirtingerCrossing(1, "x1", "x2", "x3", 1)
        assert crossing.changed().sign == -1
        assert crossing.virtualized().is_virtual
        with pytest.raises(errors.InvalidIdError):
            crossing.virtualized().changed()


class TestWirtingerPresentation:
    def test_generators_are_arcs(self) -> None:
        group = wirtinger.WirtingerPresentation(2, [])
        assert group.generators == ("x1", "x2")
        assert wirtinger.arc_name(9) == "x10"

    def test_relators_follow_crossings(self, trefoil_pd: pd.PDCode) -> None:
        group = pd.wirtinger_from_pd(trefoil_pd)
        assert group.relators == tuple(c.relator() for c in group.crossings)
        assert [c.crossing_id for c in group.crossings] == [1, 2, 3]

    def test_index_of(self, trefoil_pd: pd.PDCode) -> None:
        group = pd.wirtinger_from_pd(trefoil_pd)
        assert group.index_of(3) == 2
        with pytest.raises(errors.InvalidIdError):
            group.index_of(7)

    def test_with_crossing(self, trefoil_pd: pd.PDCode) -> None:
        group = pd.wirtinger_from_pd(trefoil_pd)
        updated = group.with_crossing(0, group.crossings[0].changed())
        assert updated.relators[1:] == group.relators[1:]
        assert updated.relators[0] != group.relators[0]
        with pytest.raises(errors.InvalidIdError):
            group.with_crossing(3, group.crossings[0])
