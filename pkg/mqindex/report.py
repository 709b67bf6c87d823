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
Invariant reports: the Alexander data, the Nakanishi index lower
bound and the interval for the index of the commutator subgroup,
assembled into the chain ``m <= a <= u_q <= u``.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "Source",
    "ChainBound",
    "InvariantReport",
    "FORMATS",
    "parse_source",
    "knot_presentation",
    "build_report",
)

import logging
import typing

from mqindex import config as config_
from mqindex import errors
from mqindex import sentinel
from mqindex.alexander import ideals
from mqindex.alexander import matrix
from mqindex.domain import value_object
from mqindex.knots import braid as braid_
from mqindex.knots import gauss
from mqindex.knots import montesinos
from mqindex.knots import pd as pd_
from mqindex.knots import recognition
from mqindex.knots import search
from mqindex.mq import interval as interval_
from mqindex.presentation import io
from mqindex.presentation import presentation as presentation_

logger = logging.getLogger(__name__)

Source = typing.Union[
    pd_.PDCode,
    gauss.GaussCode,
    braid_.BraidWord,
    montesinos.MontesinosDescriptor,
    presentation_.Presentation,
]

_parsers: typing.Final[typing.Mapping[str, typing.Callable[[str], Source]]] = {
    "pd": pd_.parse_pd,
    "gauss": gauss.parse_gauss,
    "braid": braid_.parse_braid,
    "montesinos": montesinos.parse_montesinos,
    "presentation": io.load_presentation,
}

FORMATS: typing.Final[typing.Tuple[str, ...]] = tuple(_parsers)


def parse_source(text: str, format: str) -> Source:
    """
    Raises
    ------
    errors.ParseError
        If the text does not parse in the given format.
    errors.InputError
        If the format is unknown.
    """
    try:
        parser = _parsers[format]
    except KeyError:
        raise errors.InputError(f"Unknown input format {format!r}.") from None
    return parser(text.strip())


class ChainBound(value_object.ValueObject):
    """An upper bound in the chain with the certificate behind it."""

    __value_fields__ = ("value", "certificate")

    def __init__(self, value: sentinel.SentinelOr[int], certificate: str = "none") -> None:
        self.value = value
        self.certificate = certificate

    def __str__(self) -> str:
        if self.value is sentinel.UNBOUNDED:
            return "inf"
        return f"{self.value} ({self.certificate})"

    def as_int(self) -> typing.Optional[int]:
        if self.value is sentinel.UNBOUNDED:
            return None
        return self.value  # type: ignore[return-value]


def knot_presentation(
    source: Source,
) -> typing.Tuple[
    presentation_.Presentation,
    typing.Optional[gauss.GaussCode],
    typing.List[typing.Tuple[str, presentation_.Presentation]],
]:
    """
    The Wirtinger presentation of a diagram, its Gauss code when it
    has one, and further presentations of the same group.
    """
    if isinstance(source, presentation_.Presentation):
        return source, None, []
    if isinstance(source, gauss.GaussCode):
        return gauss.wirtinger_from_gauss(source), source, []

    extra: typing.List[typing.Tuple[str, presentation_.Presentation]] = []
    if isinstance(source, braid_.BraidWord):
        extra.append(("braid closure", braid_.artin_presentation(source)))
        code = braid_.pd_from_braid(source)
    elif isinstance(source, montesinos.MontesinosDescriptor):
        code = montesinos.pd_for_montesinos(source)
    else:
        code = source
    return pd_.wirtinger_from_pd(code), gauss.gauss_from_pd(code), extra


class InvariantReport(value_object.ValueObject):
    """
    Everything known about one input, with the certificate behind
    every bound.

    Raises
    ------
    errors.InconsistencyError
        If a lower bound in the chain exceeds an upper bound.
    """

    __value_fields__ = (
        "descriptor",
        "abelianization",
        "alexander_polynomial",
        "determinant",
        "nakanishi",
        "interval",
        "rational_unknotting",
        "unknotting",
        "unknot_recognition",
    )

    def __init__(
        self,
        descriptor: str,
        abelianization: str,
        alexander_polynomial: typing.Optional[str],
        determinant: typing.Optional[int],
        nakanishi: typing.Optional[ideals.NakanishiLowerBound],
        interval: interval_.MQInterval,
        rational_unknotting: ChainBound,
        unknotting: ChainBound,
        unknot_recognition: typing.Optional[recognition.Recognition] = None,
    ) -> None:
        lower = interval.lower
        for bound in (interval.upper, rational_unknotting.as_int(), unknotting.as_int()):
            if bound is None or bound is sentinel.UNBOUNDED:
                continue
            if lower > bound:  # type: ignore[operator]
                raise errors.InconsistencyError(
                    f"Lower bound {lower} exceeds the upper bound {bound} of {descriptor}."
                )

        self.descriptor = descriptor
        self.abelianization = abelianization
        self.alexander_polynomial = alexander_polynomial
        self.determinant = determinant
        self.nakanishi = nakanishi
        self.interval = interval
        self.rational_unknotting = rational_unknotting
        self.unknotting = unknotting
        self.unknot_recognition = unknot_recognition

    @property
    def nakanishi_lower(self) -> int:
        return self.nakanishi.value if self.nakanishi is not None else 0

    def chain(self) -> str:
        """``m >= .. <= a in [..] <= u_q <= .. <= u <= ..``."""
        return (
            f"m >= {self.nakanishi_lower}; "
            f"m <= a in {self.interval}; "
            f"a <= u_q <= {self.rational_unknotting}; "
            f"u_q <= u <= {self.unknotting}"
        )

    def document(self) -> typing.Dict[str, typing.Any]:
        upper = self.interval.upper
        certificate = self.interval.upper_certificate
        return {
            "input": self.descriptor,
            "abelianization": self.abelianization,
            "alexander_polynomial": self.alexander_polynomial,
            "determinant": self.determinant,
            "elementary_ideals": [
                {
                    "k": ideal.index,
                    "decision": str(ideal.decision),
                    "minors": len(ideal.generators),
                    "exhaustive": ideal.exhaustive,
                }
                for ideal in (self.nakanishi.ideals if self.nakanishi else ())
            ],
            "nakanishi_lower": self.nakanishi_lower,
            "mq_interval": {
                "lower": self.interval.lower,
                "lower_certificate": self.interval.lower_certificate,
                "upper": None if upper is sentinel.UNBOUNDED else upper,
                "upper_certificate": (
                    None
                    if certificate is None
                    else {"source": certificate.source.value, "detail": certificate.detail}
                ),
            },
            "u_q_upper": {
                "value": self.rational_unknotting.as_int(),
                "certificate": self.rational_unknotting.certificate,
            },
            "u_upper": {
                "value": self.unknotting.as_int(),
                "certificate": self.unknotting.certificate,
            },
            "recognition": (
                None if self.unknot_recognition is None else self.unknot_recognition.value
            ),
            "chain": self.chain(),
        }

    def lines(self) -> typing.List[str]:
        lines = [f"input: {self.descriptor}", f"H_1: {self.abelianization}"]
        if self.alexander_polynomial is not None:
            lines.append(f"Alexander polynomial: {self.alexander_polynomial}")
            lines.append(f"determinant: {self.determinant}")
        for ideal in self.nakanishi.ideals if self.nakanishi else ():
            lines.append(f"E_{ideal.index}: {ideal.decision}")
        if self.unknot_recognition is not None:
            lines.append(f"recognition: {self.unknot_recognition.value}")
        upper = self.interval.upper_certificate
        lines.append(
            f"a: {self.interval} (lower: {self.interval.lower_certificate}; "
            f"upper: {upper.detail if upper is not None else 'none'})"
        )
        lines.append(self.chain())
        return lines


def _minimum(*bounds: ChainBound) -> ChainBound:
    finite = [b for b in bounds if b.value is not sentinel.UNBOUNDED]
    if not finite:
        return ChainBound(sentinel.UNBOUNDED)
    return min(finite, key=lambda b: b.value)  # type: ignore[no-any-return]


def build_report(
    source: Source,
    configuration: typing.Optional[config_.RunConfiguration] = None,
    descriptor: typing.Optional[str] = None,
) -> InvariantReport:
    """
    Run every pipeline that applies to the input.

    Raises
    ------
    errors.InconsistencyError
        If the certificates contradict each other.
    """
    configuration = configuration or config_.RunConfiguration()
    presentation, code, extra = knot_presentation(source)

    polynomial: typing.Optional[str] = None
    determinant: typing.Optional[int] = None
    nakanishi: typing.Optional[ideals.NakanishiLowerBound] = None
    recognized: typing.Optional[recognition.Recognition] = None
    try:
        alexander = matrix.alexander_matrix(presentation)
    except errors.OutOfScopeError as exc:
        logger.info("Skipping the Alexander module: %s", exc)
    else:
        polynomial = str(matrix.alexander_polynomial(alexander))
        determinant = matrix.knot_determinant(alexander)
        nakanishi = ideals.nakanishi_lower(alexander)
        recognized = recognition.recognize_unknot(presentation, configuration.tietze_budget)

    certificates: typing.List[interval_.UpperCertificate] = []
    rational = ChainBound(sentinel.UNBOUNDED)
    unknotting = ChainBound(sentinel.UNBOUNDED)

    if recognized is recognition.Recognition.UNKNOT:
        rational = unknotting = ChainBound(0, "unknot")
        certificates.append(
            interval_.UpperCertificate(0, interval_.UpperSource.MOVE_SEQUENCE, "unknot")
        )

    if isinstance(source, montesinos.MontesinosDescriptor) and rational.as_int() != 0:
        found = montesinos.rational_unknotting_certificate(source, configuration.rational_bound)
        if found is not None:
            detail = (
                f"replace {found.original} at position {found.position} "
                f"by {found.replacement}"
            )
            rational = ChainBound(1, detail)
            certificates.append(
                interval_.UpperCertificate(1, interval_.UpperSource.RATIONAL_REPLACEMENT, detail)
            )

    if code is not None and not code.is_empty() and unknotting.as_int() != 0:
        classical = search.unknottability_search(
            code, 0, configuration.max_crossing_changes, configuration.search_depth
        )
        if classical is not None:
            unknotting = ChainBound(classical.crossing_changes, str(classical))
            certificates.append(
                interval_.UpperCertificate(
                    classical.crossing_changes,
                    interval_.UpperSource.MOVE_SEQUENCE,
                    str(classical),
                )
            )
        elif configuration.max_virtualizations:
            welded = search.unknottability_search(
                code,
                configuration.max_virtualizations,
                configuration.max_crossing_changes,
                configuration.search_depth,
            )
            if welded is not None:
                certificates.append(
                    interval_.UpperCertificate(
                        len(welded.moves), interval_.UpperSource.MOVE_SEQUENCE, str(welded)
                    )
                )

    rational = _minimum(rational, unknotting)
    mq = interval_.mq_interval(
        presentation,
        nakanishi_lower=None if nakanishi is None else nakanishi.value,
        extra_certificates=certificates,
        tietze_budget=configuration.tietze_budget,
        extra_presentations=extra,
    )
    return InvariantReport(
        descriptor or str(source),
        str(presentation.abelianization),
        polynomial,
        determinant,
        nakanishi,
        mq,
        rational,
        unknotting,
        recognized,
    )
