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
Intervals bracketing the minimum number of normal generators of the
commutator subgroup, and distance bounds derived from them.

The index itself is never reported as a bare value: lower and upper
ends always come with the certificate that produced them.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "UpperSource",
    "UpperCertificate",
    "MQInterval",
    "DistanceBounds",
    "mq_interval",
    "presentation_distance_bounds",
    "gap",
)

import enum
import logging
import typing

from mqindex import errors
from mqindex import sentinel
from mqindex.domain import value_object
from mqindex.mq import rank_bound
from mqindex.mq import witness as witness_
from mqindex.presentation import presentation as presentation_
from mqindex.presentation import tietze

logger = logging.getLogger(__name__)


class UpperSource(str, enum.Enum):
    """Where an upper bound comes from; declaration order breaks ties."""

    RANK_BOUND = "rank-bound"
    RATIONAL_REPLACEMENT = "rational-replacement"
    MOVE_SEQUENCE = "move-sequence"
    USER = "user"

    @property
    def priority(self) -> int:
        return list(UpperSource).index(self)


class UpperCertificate(value_object.ValueObject):
    __value_fields__ = ("value", "source", "detail")

    def __init__(self, value: int, source: UpperSource, detail: str = "") -> None:
        if value < 0:
            raise errors.InputError(f"Upper bound {value} is negative.")
        self.value = value
        self.source = UpperSource(source)
        self.detail = detail

    def sort_key(self) -> typing.Tuple[int, int]:
        return self.value, self.source.priority


class MQInterval(value_object.ValueObject):
    """
    ``lower <= a(G) <= upper``. The upper end is `sentinel.UNBOUNDED`
    when no certificate is available.

    Raises
    ------
    errors.InconsistencyError
        If ``lower > upper``.
    """

    __value_fields__ = ("lower", "upper", "lower_certificate", "upper_certificate")

    def __init__(
        self,
        lower: int,
        upper: sentinel.SentinelOr[int],
        lower_certificate: str = "trivial",
        upper_certificate: typing.Optional[UpperCertificate] = None,
    ) -> None:
        if lower < 0:
            raise errors.InputError(f"Lower bound {lower} is negative.")
        if upper is not sentinel.UNBOUNDED and lower > upper:  # type: ignore[operator]
            raise errors.InconsistencyError(
                f"Lower bound {lower} ({lower_certificate}) exceeds upper "
                f"bound {upper} ({upper_certificate})."
            )

        self.lower = lower
        self.upper = upper
        self.lower_certificate = lower_certificate
        self.upper_certificate = upper_certificate

    @property
    def is_exact(self) -> bool:
        return self.upper is not sentinel.UNBOUNDED and self.lower == self.upper

    def __str__(self) -> str:
        upper = "inf" if self.upper is sentinel.UNBOUNDED else str(self.upper)
        return f"[{self.lower}, {upper}]"


def _rank_certificate(
    presentation: presentation_.Presentation, label: str
) -> UpperCertificate:
    certificate = rank_bound.rank_bound_ngs(presentation)
    return UpperCertificate(
        certificate.bound,
        UpperSource.RANK_BOUND,
        f"{label}: r={presentation.rank}, h={certificate.h}",
    )


def mq_interval(
    presentation: presentation_.Presentation,
    nakanishi_lower: typing.Optional[int] = None,
    extra_certificates: typing.Sequence[UpperCertificate] = (),
    user_witnesses: typing.Sequence[witness_.NormalGeneratorWitness] = (),
    tietze_budget: int = 200,
    extra_presentations: typing.Sequence[
        typing.Tuple[str, presentation_.Presentation]
    ] = (),
    lower_certificate: str = "alexander module",
) -> MQInterval:
    """
    Bracket the index of a presented group.

    The upper end is the smallest of the rank bounds on the
    presentation, on its Tietze simplification and on any
    `extra_presentations` of the same group, the supplied
    certificates and the sizes of verified user witnesses. Ties go to
    the earliest `UpperSource`.

    Raises
    ------
    errors.InconsistencyError
        If the supplied lower bound exceeds the upper bound.
    """
    simplified = tietze.tietze_simplify(presentation, tietze_budget).presentation
    candidates = [
        _rank_certificate(presentation, "presentation"),
        _rank_certificate(simplified, "simplified presentation"),
    ]
    candidates.extend(
        _rank_certificate(other, label) for label, other in extra_presentations
    )
    candidates.extend(extra_certificates)
    candidates.extend(
        UpperCertificate(len(w.words), UpperSource.USER, "verified witness")
        for w in user_witnesses
        if w.status is witness_.Status.VERIFIED
    )
    best = min(candidates, key=lambda c: c.sort_key())
    logger.debug("upper certificates: %s", [c.sort_key() for c in candidates])

    if nakanishi_lower is None:
        lower, reason = 0, "trivial"
    else:
        lower, reason = max(nakanishi_lower, 0), lower_certificate

    return MQInterval(lower, best.value, reason, best)


class DistanceBounds(value_object.ValueObject):
    __value_fields__ = ("lower", "upper")

    def __init__(self, lower: int, upper: int) -> None:
        self.lower = lower
        self.upper = upper


def _gap(left: MQInterval, right: MQInterval) -> int:
    gaps = [0]
    if right.upper is not sentinel.UNBOUNDED:
        gaps.append(left.lower - right.upper)  # type: ignore[operator]
    if left.upper is not sentinel.UNBOUNDED:
        gaps.append(right.lower - left.upper)  # type: ignore[operator]
    return max(gaps)


def presentation_distance_bounds(
    left: presentation_.Presentation,
    right: presentation_.Presentation,
    left_interval: MQInterval,
    right_interval: MQInterval,
    tietze_budget: int = 200,
) -> DistanceBounds:
    """
    Bounds on the number of null-homologous relator replacements
    between two presentations of groups with the same ``H_1``.

    Raises
    ------
    errors.AbelianizationMismatchError
        If the abelianizations differ; the distance is undefined.
    """
    if not presentation_.h1_equal(left, right):
        raise errors.AbelianizationMismatchError(
            f"Distance needs equal H_1, got {left.abelianization} "
            f"and {right.abelianization}."
        )

    h = left.abelianization.minimal_generators
    rank_left = tietze.tietze_simplify(left, tietze_budget).rank_upper_bound
    rank_right = tietze.tietze_simplify(right, tietze_budget).rank_upper_bound
    return DistanceBounds(
        lower=_gap(left_interval, right_interval),
        upper=rank_left + rank_right + h * (h - 3),
    )


def gap(left: MQInterval, right: MQInterval) -> int:
    """``max(0, lower - other upper)`` over both orders."""
    return _gap(left, right)
