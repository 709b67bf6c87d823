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
from mqindex.mq import interval
from mqindex.mq import witness
from mqindex.presentation import presentation

WIRTINGER_TREFOIL = presentation.Presentation(
    ["a", "b", "c"],
    ["c a c^-1 b^-1", "a b a^-1 c^-1", "b c b^-1 a^-1"],
)


class TestMQInterval:
    def test_str(self) -> None:
        assert str(interval.MQInterval(1, 2)) == "[1, 2]"
        assert str(interval.MQInterval(1, sentinel.UNBOUNDED)) == "[1, inf]"

    def test_exact(self) -> None:
        assert interval.MQInterval(1, 1).is_exact
        assert not interval.MQInterval(1, 2).is_exact
        assert not interval.MQInterval(1, sentinel.UNBOUNDED).is_exact

    def test_lower_above_upper(self) -> None:
        with pytest.raises(errors.InconsistencyError):
            interval.MQInterval(2, 1)

    def test_negative_lower(self) -> None:
        with pytest.raises(errors.InputError):
            interval.MQInterval(-1, 1)

    def test_negative_certificate(self) -> None:
        with pytest.raises(errors.InputError):
            interval.UpperCertificate(-1, interval.UpperSource.USER)

    def test_source_priority(self) -> None:
        assert [source.priority for source in interval.UpperSource] == [0, 1, 2, 3]


class TestIntervalComputation:
    def test_trefoil(self, trefoil_group: presentation.Presentation) -> None:
        result = interval.mq_interval(trefoil_group, nakanishi_lower=1)
        assert (result.lower, result.upper) == (1, 1)
        assert result.lower_certificate == "alexander module"
        assert result.upper_certificate is not None
        assert result.upper_certificate.source is interval.UpperSource.RANK_BOUND

    def test_without_lower_bound(self, trefoil_group: presentation.Presentation) -> None:
        result = interval.mq_interval(trefoil_group)
        assert result.lower == 0
        assert result.lower_certificate == "trivial"

    def test_simplification_tightens_upper(self) -> None:
        result = interval.mq_interval(WIRTINGER_TREFOIL, nakanishi_lower=1)
        assert result.upper == 1
        assert result.upper_certificate is not None
        assert result.upper_certificate.detail.startswith("simplified presentation")

    def test_extra_presentation(self) -> None:
        result = interval.mq_interval(
            WIRTINGER_TREFOIL,
            tietze_budget=1,
            extra_presentations=[
                ("braid closure", presentation.Presentation(["x", "y"], ["x y x y^-1 x^-1 y^-1"]))
            ],
        )
        assert result.upper == 1

    def test_ties_go_to_rank_bound(self, trefoil_group: presentation.Presentation) -> None:
        extra = interval.UpperCertificate(1, interval.UpperSource.MOVE_SEQUENCE, "cc")
        result = interval.mq_interval(trefoil_group, 1, extra_certificates=[extra])
        assert result.upper_certificate is not None
        assert result.upper_certificate.source is interval.UpperSource.RANK_BOUND

    def test_verified_user_witness(self) -> None:
        group = presentation.Presentation(["x", "y", "z"], ["y", "z"])
        claimed = witness.NormalGeneratorWitness(
            group, [], witness.Provenance.USER, witness.Status.VERIFIED
        )
        unchecked = witness.NormalGeneratorWitness(group, [], witness.Provenance.USER)
        assert interval.mq_interval(group, tietze_budget=1, user_witnesses=[unchecked]).upper == 1
        result = interval.mq_interval(group, tietze_budget=1, user_witnesses=[claimed])
        assert result.upper == 0
        assert result.upper_certificate is not None
        assert result.upper_certificate.source is interval.UpperSource.USER

    def test_inconsistent_lower_bound(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        with pytest.raises(errors.InconsistencyError):
            interval.mq_interval(trefoil_group, nakanishi_lower=2)


class TestDistance:
    def test_gap(self) -> None:
        high = interval.MQInterval(2, sentinel.UNBOUNDED)
        low = interval.MQInterval(0, 1)
        assert interval.gap(high, low) == 1
        assert interval.gap(low, high) == 1
        assert interval.gap(high, interval.MQInterval(0, sentinel.UNBOUNDED)) == 0

    def test_trefoil_to_unknot(self, trefoil_group: presentation.Presentation) -> None:
        unknot = presentation.Presentation(["x", "y"], ["x y^-1"])
        bounds = interval.presentation_distance_bounds(
            trefoil_group,
            unknot,
            interval.MQInterval(1, 1),
            interval.MQInterval(0, 0),
        )
        assert (bounds.lower, bounds.upper) == (1, 1)

    def test_abelianization_mismatch(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        other = presentation.Presentation(["x"], ["x x"])
        with pytest.raises(errors.AbelianizationMismatchError):
            interval.presentation_distance_bounds(
                trefoil_group,
                other,
                interval.MQInterval(1, 1),
                interval.MQInterval(0, 0),
            )
