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
Self-checks against the shipped fixtures. A check that runs out of
budget is reported as inconclusive, never as a failure.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "Outcome",
    "CheckResult",
    "SelftestSummary",
    "MONTESINOS_IDENTITIES",
    "check_fixture",
    "check_cross_check",
    "check_identities",
    "check_routes",
    "check_transfer_sample",
    "run_selftest",
)

import enum
import logging
import random
import typing

from mqindex import config as config_
from mqindex import errors
from mqindex import fixtures as fixtures_
from mqindex import report as report_
from mqindex.algebra import laurent
from mqindex.alexander import ideals
from mqindex.alexander import matrix
from mqindex.domain import value_object
from mqindex.knots import gauss
from mqindex.knots import montesinos
from mqindex.knots import pd as pd_
from mqindex.knots import tangles
from mqindex.mq import rank_bound
from mqindex.mq import sampling
from mqindex.mq import transfer
from mqindex.mq import verify
from mqindex.presentation import presentation as presentation_

logger = logging.getLogger(__name__)

MONTESINOS_IDENTITIES: typing.Final[typing.Tuple[typing.Tuple[str, str], ...]] = (
    ("K(2/3, 1/3, 12/5)", "K(2/3, 10/3, -3/5)"),
    ("K(1/3, 3/4, 2/7)", "K(4/3, -1/4, 2/7)"),
)


@enum.unique
class Outcome(str, enum.Enum):
    PASSED = "passed"
    FAILED = "failed"
    INCONCLUSIVE = "inconclusive"


class CheckResult(value_object.ValueObject):
    __value_fields__ = ("name", "outcome", "detail")

    def __init__(self, name: str, outcome: Outcome, detail: str = "") -> None:
        self.name = name
        self.outcome = Outcome(outcome)
        self.detail = detail

    def __str__(self) -> str:
        suffix = f": {self.detail}" if self.detail else ""
        return f"{self.outcome.value.upper():<12} {self.name}{suffix}"


class SelftestSummary(value_object.ValueObject):
    __value_fields__ = ("results",)

    def __init__(self, results: typing.Iterable[CheckResult]) -> None:
        self.results: typing.Tuple[CheckResult, ...] = tuple(results)

    def count(self, outcome: Outcome) -> int:
        return sum(1 for result in self.results if result.outcome is outcome)

    @property
    def passed(self) -> bool:
        return self.count(Outcome.FAILED) == 0

    def lines(self) -> typing.List[str]:
        return [str(result) for result in self.results] + [
            f"{self.count(Outcome.PASSED)} passed, {self.count(Outcome.FAILED)} failed, "
            f"{self.count(Outcome.INCONCLUSIVE)} inconclusive"
        ]


def _compare_upper(
    name: str, found: typing.Optional[int], expected: int
) -> CheckResult:
    if found is None or found > expected:
        return CheckResult(name, Outcome.INCONCLUSIVE, f"found {found}, expected {expected}")
    if found < expected:
        return CheckResult(name, Outcome.FAILED, f"found {found}, expected {expected}")
    return CheckResult(name, Outcome.PASSED)


def _compare(name: str, found: typing.Any, expected: typing.Any) -> CheckResult:
    if found == expected:
        return CheckResult(name, Outcome.PASSED)
    return CheckResult(name, Outcome.FAILED, f"found {found}, expected {expected}")


def _fixture_checks(
    fixture: fixtures_.Fixture, configuration: config_.RunConfiguration
) -> typing.Iterator[CheckResult]:
    source = report_.parse_source(fixture.text, fixture.format)
    report = report_.build_report(source, configuration, fixture.text)
    expected = fixture.expected
    prefix = fixture.name

    if "alexander_polynomial" in expected:
        found = report.alexander_polynomial
        yield _compare(
            f"{prefix} alexander polynomial",
            None if found is None else laurent.LaurentPolynomial.parse(found),
            laurent.LaurentPolynomial.parse(expected["alexander_polynomial"]).normalize(),
        )
    if "determinant" in expected:
        yield _compare(f"{prefix} determinant", report.determinant, expected["determinant"])
    if "nakanishi_lower" in expected:
        yield _compare(
            f"{prefix} nakanishi lower bound", report.nakanishi_lower, expected["nakanishi_lower"]
        )
    if "mq_interval" in expected:
        lower, upper = expected["mq_interval"]
        yield _compare(f"{prefix} index lower bound", report.interval.lower, lower)
        found_upper = report.interval.upper
        yield _compare_upper(
            f"{prefix} index upper bound",
            found_upper if isinstance(found_upper, int) else None,
            upper,
        )
    if "u_q_upper" in expected:
        yield _compare_upper(
            f"{prefix} rational unknotting bound",
            report.rational_unknotting.as_int(),
            expected["u_q_upper"],
        )
    if "u_upper" in expected:
        yield _compare_upper(
            f"{prefix} unknotting bound", report.unknotting.as_int(), expected["u_upper"]
        )
    if "replacement" in expected:
        assert isinstance(source, montesinos.MontesinosDescriptor)
        replacement = expected["replacement"]
        result = montesinos.replace_tangle(
            source,
            replacement["position"],
            tangles.RationalTangle.parse(replacement["tangle"]),
        )
        yield _compare(
            f"{prefix} replacement at position {replacement['position']}",
            getattr(result, "kind", None),
            montesinos.TwoBridgeKind.UNKNOT,
        )


def check_fixture(
    fixture: fixtures_.Fixture,
    configuration: typing.Optional[config_.RunConfiguration] = None,
) -> typing.List[CheckResult]:
    configuration = configuration or config_.RunConfiguration()
    try:
        return list(_fixture_checks(fixture, configuration))
    except errors.MQIndexError as exc:
        return [CheckResult(fixture.name, Outcome.FAILED, str(exc))]


def check_identities() -> typing.List[CheckResult]:
    results = []
    for left, right in MONTESINOS_IDENTITIES:
        same = montesinos.montesinos_equiv(
            montesinos.parse_montesinos(left), montesinos.parse_montesinos(right)
        )
        results.append(_compare(f"{left} = {right}", same, True))
    return results


def _route_values(
    presentation: presentation_.Presentation,
) -> typing.Tuple[str, laurent.LaurentPolynomial, int, int]:
    alexander = matrix.alexander_matrix(presentation)
    return (
        str(presentation.abelianization),
        matrix.alexander_polynomial(alexander),
        matrix.knot_determinant(alexander),
        ideals.nakanishi_lower(alexander).value,
    )


def check_routes(fixture: fixtures_.Fixture) -> typing.List[CheckResult]:
    """Planar diagram and Gauss code routes must agree on a PD fixture."""
    if fixture.format != "pd":
        return []
    code = pd_.parse_pd(fixture.text)
    try:
        by_pd = _route_values(pd_.wirtinger_from_pd(code))
        by_gauss = _route_values(gauss.wirtinger_from_gauss(gauss.gauss_from_pd(code)))
    except errors.MQIndexError as exc:
        return [CheckResult(f"{fixture.name} routes", Outcome.FAILED, str(exc))]
    return [_compare(f"{fixture.name} routes", by_gauss, by_pd)]


def check_cross_check(fixture: fixtures_.Fixture) -> typing.List[CheckResult]:
    """A fixture's second diagram must give the same invariants as its first."""
    if fixture.cross_check is None:
        return []
    name = f"{fixture.name} cross-check"
    try:
        values = [
            _route_values(report_.knot_presentation(report_.parse_source(text, kind))[0])
            for kind, text in ((fixture.format, fixture.text), fixture.cross_check)
        ]
    except errors.MQIndexError as exc:
        return [CheckResult(name, Outcome.FAILED, str(exc))]
    return [_compare(name, *values)]


def check_transfer_sample(
    configuration: typing.Optional[config_.RunConfiguration] = None,
    samples: int = 20,
) -> CheckResult:
    """
    Transfer rank-bound witnesses across random null-homologous
    replacements and check the size of the result.
    """
    configuration = configuration or config_.RunConfiguration()
    rng = random.Random(configuration.seed)
    for sample in range(samples):
        base = sampling.random_presentation(rng)
        target = sampling.replace_randomly(rng, base, rng.randint(1, 3))
        witness = rank_bound.rank_bound_ngs(base).witness
        moved = transfer.transfer_ngs(base, target, witness)
        expected = len(presentation_.diff(base, target).only_left) + len(witness)
        if len(moved) != expected:
            return CheckResult(
                "transfer sample",
                Outcome.FAILED,
                f"sample {sample}: {len(moved)} words, expected {expected}",
            )
        if verify.verify_ngs(target, moved) is verify.Status.REFUTED:
            return CheckResult("transfer sample", Outcome.FAILED, f"sample {sample} refuted")
    detail = f"{samples} samples, seed {configuration.seed}"
    return CheckResult("transfer sample", Outcome.PASSED, detail)


def run_selftest(
    configuration: typing.Optional[config_.RunConfiguration] = None,
    fixtures: typing.Optional[typing.Sequence[fixtures_.Fixture]] = None,
) -> SelftestSummary:
    configuration = configuration or config_.RunConfiguration()
    chosen = fixtures_.all_fixtures() if fixtures is None else fixtures
    results: typing.List[CheckResult] = []
    for fixture in chosen:
        logger.info("Checking fixture %s", fixture.name)
        results.extend(check_fixture(fixture, configuration))
        results.extend(check_routes(fixture))
        results.extend(check_cross_check(fixture))
    results.extend(check_identities())
    results.append(check_transfer_sample(configuration))
    return SelftestSummary(results)
