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

from mqindex.mq import verify
from mqindex.mq import witness
from mqindex.presentation import presentation
from mqindex.presentation import rewriting


@pytest.fixture(name="infinite_cyclic")
def _infinite_cyclic() -> presentation.Presentation:
    return presentation.Presentation(["x"])


class TestVerify:
    def test_default_is_necessary_only(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        status = verify.verify_ngs(trefoil_group, ["x y^-1"])
        assert status is witness.Status.NECESSARY_CHECKS_PASSED

    def test_non_null_homologous_word_refutes(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        assert verify.verify_ngs(trefoil_group, ["x"]) is witness.Status.REFUTED

    def test_completion_verifies_empty_set_for_cyclic_group(
        self, infinite_cyclic: presentation.Presentation
    ) -> None:
        assert verify.verify_ngs(infinite_cyclic, [], verify.Completion()) is (
            witness.Status.VERIFIED
        )

    def test_completion_verifies_trefoil_witness(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        status = verify.verify_ngs(trefoil_group, ["x y^-1"], verify.Completion())
        assert status is witness.Status.VERIFIED

    def test_completion_refutes_empty_set_for_trefoil(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        status = verify.verify_ngs(trefoil_group, [], verify.Completion())
        assert status is witness.Status.REFUTED

    def test_inconclusive_completion_without_quotients(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        strategy = verify.Completion(
            rewriting.CompletionLimits(max_rules=5, max_length=40, max_steps=1),
            quotient_search=False,
        )
        status = verify.verify_ngs(trefoil_group, [], strategy)
        assert status is witness.Status.NECESSARY_CHECKS_PASSED

    def test_bounded_search(self, free_group: presentation.Presentation) -> None:
        status = verify.verify_ngs(
            free_group, ["x y x^-1 y^-1"], verify.BoundedSearch(depth=1, width=1)
        )
        assert status is witness.Status.VERIFIED

    def test_bounded_search_gives_up(self, free_group: presentation.Presentation) -> None:
        status = verify.verify_ngs(free_group, [], verify.BoundedSearch(depth=1, width=2))
        assert status is witness.Status.NECESSARY_CHECKS_PASSED


class TestFiniteQuotients:
    def test_trefoil_maps_onto_s3(self, trefoil_group: presentation.Presentation) -> None:
        assert verify.finite_quotient_refutes(trefoil_group, [])

    def test_identified_generators_commute(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        words = [trefoil_group.word("x y^-1")]
        assert not verify.finite_quotient_refutes(trefoil_group, words)

    def test_cyclic_presentations_are_skipped(
        self, infinite_cyclic: presentation.Presentation
    ) -> None:
        assert not verify.finite_quotient_refutes(infinite_cyclic, [])


class TestVerifyWitness:
    def test_records_status(self, trefoil_group: presentation.Presentation) -> None:
        claimed = witness.NormalGeneratorWitness(
            trefoil_group, ["x y^-1"], witness.Provenance.USER
        )
        checked = verify.verify_witness(claimed, verify.Completion())
        assert checked.status is witness.Status.VERIFIED
        assert checked.words == claimed.words

    def test_never_downgrades(self, trefoil_group: presentation.Presentation) -> None:
        claimed = witness.NormalGeneratorWitness(
            trefoil_group, ["x y^-1"], witness.Provenance.USER, witness.Status.VERIFIED
        )
        assert verify.verify_witness(claimed, verify.NecessaryOnly()) is claimed
