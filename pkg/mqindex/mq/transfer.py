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
"""Transfer of a normal generating set across relator replacements."""
from __future__ import annotations

__all__: typing.Sequence[str] = ("transfer_ngs",)

import typing

from mqindex import errors
from mqindex.mq import witness as witness_
from mqindex.presentation import presentation as presentation_


def transfer_ngs(
    source: presentation_.Presentation,
    target: presentation_.Presentation,
    witness: witness_.NormalGeneratorWitness,
) -> witness_.NormalGeneratorWitness:
    """
    Turn a normal generating set of ``[G, G]`` into one of
    ``[G', G']`` when both presentations share their generators.

    The output lists the relators found only in `source` followed by
    the input witness words, so its size is exactly the number of
    such relators plus the input size. The result is conditional on
    the input witness, hence its status is necessary-checks-passed.

    Raises
    ------
    errors.GeneratorMismatchError
        If the generator lists differ.
    errors.AbelianizationMismatchError
        If the abelianizations differ.
    errors.NullHomologyError
        Naming every relator found only in `target` and every witness
        word that is not null-homologous in `source`.
    """
    difference = presentation_.diff(source, target)
    if not presentation_.h1_equal(source, target):
        raise errors.AbelianizationMismatchError(
            f"H_1 differs: {source.abelianization} for the source "
            f"and {target.abelianization} for the target."
        )

    failures: typing.List[typing.Tuple[str, str]] = [
        (str(relator), "G")
        for relator in difference.only_right
        if not presentation_.is_null_homologous(relator, source)
    ]
    failures.extend(
        (str(word), "G")
        for word in witness.words
        if not presentation_.is_null_homologous(word, source)
    )
    if failures:
        raise errors.NullHomologyError(failures)

    return witness_.NormalGeneratorWitness(
        target,
        difference.only_left + witness.words,
        witness_.Provenance.TRANSFER,
        witness_.Status.NECESSARY_CHECKS_PASSED,
    )
