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
from mqindex.mq import rank_bound
from mqindex.mq import sampling
from mqindex.mq import transfer
from mqindex.mq import verify
from mqindex.mq import witness
from mqindex.presentation import presentation


class TestTransfer:
    def test_prepends_replaced_relators(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        source_witness = witness.NormalGeneratorWitness(
            trefoil_group, ["x y^-1"], witness.Provenance.USER, witness.Status.VERIFIED
        )
        target = presentation.replace_relator_at(trefoil_group, 0, "x y^-1")
        moved = transfer.transfer_ngs(trefoil_group, target, source_witness)
        assert moved.presentation == target
        assert [str(w) for w in moved.words] == ["x y x y^-1 x^-1 y^-1", "x y^-1"]
        assert moved.provenance is witness.Provenance.TRANSFER
        assert moved.status is witness.Status.NECESSARY_CHECKS_PASSED

    def test_identical_presentations(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        source_witness = witness.NormalGeneratorWitness(
            trefoil_group, ["x y^-1"], witness.Provenance.USER
        )
        moved = transfer.transfer_ngs(trefoil_group, trefoil_group, source_witness)
        assert moved.words == source_witness.words

    def test_generator_mismatch(self, trefoil_group: presentation.Presentation) -> None:
        other = presentation.Presentation(["x", "z"], ["x z^-1"])
        empty = witness.NormalGeneratorWitness(trefoil_group, [], witness.Provenance.USER)
        with pytest.raises(errors.GeneratorMismatchError):
            transfer.transfer_ngs(trefoil_group, other, empty)

    def test_abelianization_mismatch(
        self, trefoil_group: presentation.Presentation
    ) -> None:
        other = presentation.Presentation(["x", "y"], ["x", "y y"])
        empty = witness.NormalGeneratorWitness(trefoil_group, [], witness.Provenance.USER)
        with pytest.raises(errors.AbelianizationMismatchError):
            transfer.transfer_ngs(trefoil_group, other, empty)

    def test_new_relators_must_be_null_homologous(self) -> None:
        source = presentation.Presentation(["x", "y"], ["x x"])
        target = presentation.Presentation(["x", "y"], ["y y"])
        empty = witness.NormalGeneratorWitness(source, [], witness.Provenance.USER)
        with pytest.raises(errors.NullHomologyError) as info:
            transfer.transfer_ngs(source, target, empty)
        assert info.value.failures == (("y y", "G"),)


class TestTransferOnRandomReplacements:
    @pytest.mark.parametrize("case", range(200))
    def test_size_and_necessary_conditions(self, case: int) -> None:
        rng = random.Random(case)
        source = sampling.random_presentation(rng)
        target = sampling.replace_randomly(rng, source, rng.randint(1, 3))
        certificate = rank_bound.rank_bound_ngs(source)

        moved = transfer.transfer_ngs(source, target, certificate.witness)

        difference = presentation.diff(source, target)
        assert len(moved) == len(difference.only_left) + len(certificate.witness)
        assert verify.verify_ngs(target, moved) is not witness.Status.REFUTED
        assert presentation.h1_equal(source, target)
