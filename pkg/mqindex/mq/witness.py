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
"""
Normal generating witnesses for commutator subgroups.

A witness is a list of words claimed to normally generate ``[G, G]``
for the group presented by its presentation. Every word must be
null-homologous; the status records how far the claim was checked.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "Provenance",
    "Status",
    "NormalGeneratorWitness",
    "witness_document",
    "witness_from_document",
    "dump_witness",
    "load_witness",
)

import enum
import json
import typing

from mqindex import errors
from mqindex.algebra import words as words_
from mqindex.domain import value_object
from mqindex.presentation import io
from mqindex.presentation import presentation as presentation_


class Provenance(str, enum.Enum):
    TRANSFER = "transfer"
    RANK_BOUND = "rank-bound"
    USER = "user"


class Status(str, enum.Enum):
    UNVERIFIED = "unverified"
    NECESSARY_CHECKS_PASSED = "necessary-checks-passed"
    VERIFIED = "verified"
    REFUTED = "refuted"

    @property
    def level(self) -> int:
        return _levels[self]


_levels = {
    Status.UNVERIFIED: 0,
    Status.NECESSARY_CHECKS_PASSED: 1,
    Status.VERIFIED: 2,
    Status.REFUTED: 3,
}


class NormalGeneratorWitness(value_object.ValueObject):
    """
    Parameters
    ----------
    presentation : Presentation
        The presentation of the group whose commutator subgroup the
        words are claimed to normally generate.
    words : Sequence[Word or str]
        The claimed normal generators, as words in the presentation's
        generators.
    provenance : Provenance
        How the witness was produced.
    status : Status, default Status.UNVERIFIED
        How far the claim has been checked.

    Raises
    ------
    errors.NullHomologyError
        If some word is not null-homologous in the presentation.
    """

    __value_fields__ = ("presentation", "words", "provenance", "status")

    def __init__(
        self,
        presentation: presentation_.Presentation,
        words: typing.Sequence[presentation_.WordLike],
        provenance: Provenance,
        status: Status = Status.UNVERIFIED,
    ) -> None:
        checked = tuple(presentation.word(word) for word in words)
        failures = [
            (str(word), "G")
            for word in checked
            if not presentation_.is_null_homologous(word, presentation)
        ]
        if failures:
            raise errors.NullHomologyError(failures)

        self.presentation = presentation
        self.words: typing.Tuple[words_.Word, ...] = checked
        self.provenance = Provenance(provenance)
        self.status = Status(status)

    def __len__(self) -> int:
        return len(self.words)

    def with_status(self, status: Status) -> NormalGeneratorWitness:
        """
        A copy with an updated status. Statuses only move forward,
        except that anything may become refuted.

        Raises
        ------
        errors.InconsistencyError
            On a backward transition or on leaving the refuted state.
        """
        status = Status(status)
        if status is not Status.REFUTED and (
            self.status is Status.REFUTED or status.level < self.status.level
        ):
            raise errors.InconsistencyError(
                f"Witness status cannot move from {self.status.value} "
                f"to {status.value}."
            )

        return NormalGeneratorWitness(
            self.presentation, self.words, self.provenance, status
        )


def witness_document(witness: NormalGeneratorWitness) -> typing.Dict[str, typing.Any]:
    return {
        "presentation": io.presentation_document(witness.presentation),
        "words": [str(word) for word in witness.words],
        "provenance": witness.provenance.value,
        "status": witness.status.value,
        "size": len(witness.words),
    }


def witness_from_document(
    document: typing.Any, source: str = "<document>"
) -> NormalGeneratorWitness:
    """
    Raises
    ------
    errors.ParseError
        On a malformed document.
    errors.NullHomologyError
        If a stored word is not null-homologous.
    """
    if not isinstance(document, dict) or "presentation" not in document:
        raise errors.ParseError("Witness document needs a 'presentation' field", source)

    presentation = io.presentation_from_document(document["presentation"], source)
    stored = document.get("words", [])
    if not isinstance(stored, list) or not all(isinstance(w, str) for w in stored):
        raise errors.ParseError("Field 'words' must be a list of words", source)

    try:
        provenance = Provenance(document.get("provenance", Provenance.USER.value))
        status = Status(document.get("status", Status.UNVERIFIED.value))
    except ValueError as exc:
        raise errors.ParseError(str(exc), source) from None

    return NormalGeneratorWitness(presentation, stored, provenance, status)


def dump_witness(witness: NormalGeneratorWitness) -> str:
    return json.dumps(witness_document(witness), indent=2) + "\n"


def load_witness(text: str) -> NormalGeneratorWitness:
    return witness_from_document(io.load_document(text), text)
