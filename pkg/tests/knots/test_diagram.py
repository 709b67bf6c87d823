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

import typing

import pytest

from mqindex import errors
from mqindex.alexander import matrix
from mqindex.knots import diagram
from mqindex.knots import pd
from mqindex.knots import tangles

T = tangles.RationalTangle


class TestNumeratorClosure:
    @pytest.mark.parametrize(
        "summands, crossings, determinant",
        [
            ([T(1)], 1, 1),
            ([T(3)], 3, 3),
            ([T(5)], 5, 5),
            ([T(1, 3), T(2, 5)], 7, 11),
            ([T(1), T(2, 5)], 5, 7),
            ([T(1, 4), T(2, 3), T(2, 3)], 10, 57),
        ],
    )
    def test_determinant(
        self, summands: typing.List[tangles.RationalTangle], crossings: int, determinant: int
    ) -> None:
        code = diagram.numerator_closure_pd(summands)
        assert code.is_knot
        assert len(code) == crossings
        assert matrix.knot_determinant(pd.wirtinger_from_pd(code)) == determinant

    @pytest.mark.parametrize(
        "summands",
        [[T(1, 3), T(2, 5)], [T(1), T(2, 5)], [T(2, 3), T(3, 7), T(-2, 5)], [T(5, 13)]],
    )
    def test_crossings_follow_the_continued_fractions(
        self, summands: typing.List[tangles.RationalTangle]
    ) -> None:
        code = diagram.numerator_closure_pd(summands)
        assert len(code) == sum(tangle.crossings for tangle in summands)

    def test_trefoil(self) -> None:
        code = diagram.numerator_closure_pd([T(3)])
        group = pd.wirtinger_from_pd(code)
        assert str(matrix.alexander_polynomial(group)) == "1 - t + t^2"
        assert abs(code.writhe()) == 3

    def test_single_walk(self) -> None:
        code = diagram.numerator_closure_pd([T(1, 3), T(2, 5)])
        visits = [crossing_id for crossing_id, _ in code.walk()]
        assert sorted(visits) == sorted(list(range(1, len(code) + 1)) * 2)

    def test_unknot(self) -> None:
        code = diagram.numerator_closure_pd([T(1, 3)])
        assert code.is_knot
        assert len(code) == T(1, 3).crossings
        assert matrix.knot_determinant(pd.wirtinger_from_pd(code)) == 1

    def test_empty(self) -> None:
        with pytest.raises(errors.InputError, match="at least one summand"):
            diagram.numerator_closure_pd([])

    def test_infinity(self) -> None:
        with pytest.raises(errors.OutOfScopeError):
            diagram.numerator_closure_pd([T(1, 3), tangles.INFINITY])

    def test_unlink(self) -> None:
        with pytest.raises(errors.InputError, match="unlink of 2 components"):
            diagram.numerator_closure_pd([tangles.ZERO_TANGLE])

    def test_link(self) -> None:
        with pytest.raises(errors.InputError, match="not a knot"):
            diagram.numerator_closure_pd([T(1, 2), T(1, 2)])
