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
Elementary ideals of the Alexander module and the unit-ideal decision
over ``Z[t, t^-1]``.

`ideal_is_unit` is exact and complete. An ideal is the whole ring iff
it is the whole ring over the rationals and modulo every prime that
divides the denominator of a rational certificate. Each proper
outcome names the image that is not the whole ring.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "UnitCertificate",
    "Unit",
    "Proper",
    "Decision",
    "ideal_is_unit",
    "ElementaryIdeal",
    "elementary_ideal",
    "NakanishiLowerBound",
    "nakanishi_lower",
)

import functools
import itertools
import logging
import typing

import sympy

from mqindex import errors
from mqindex.algebra import laurent
from mqindex.alexander import matrix as matrix_
from mqindex.domain import value_object
from mqindex.presentation import presentation as presentation_

logger = logging.getLogger(__name__)

Source = typing.Union[presentation_.Presentation, matrix_.AlexanderMatrix]


class UnitCertificate(value_object.ValueObject):
    """
    Record that ``1`` lies in the ideal.

    ``sum(multipliers[i] * generators[i]) == modulus`` holds exactly.
    When `modulus` is 1 this is an explicit combination. Otherwise
    every prime in `primes` divides `modulus` and the ideal reduced
    modulo that prime was checked to be the whole ring.
    """

    __value_fields__ = ("generators", "multipliers", "modulus", "primes")

    def __init__(
        self,
        generators: typing.Sequence[laurent.LaurentPolynomial],
        multipliers: typing.Sequence[laurent.LaurentPolynomial],
        modulus: int = 1,
        primes: typing.Sequence[int] = (),
    ) -> None:
        if len(generators) != len(multipliers):
            raise errors.DimensionMismatchError(
                f"{len(multipliers)} multipliers for {len(generators)} generators."
            )
        self.generators = tuple(generators)
        self.multipliers = tuple(multipliers)
        self.modulus = modulus
        self.primes = tuple(primes)

    def combination(self) -> laurent.LaurentPolynomial:
        total = laurent.ZERO
        for multiplier, generator in zip(self.multipliers, self.generators):
            total = total + multiplier * generator
        return total

    def is_valid(self) -> bool:
        if self.combination() != laurent.LaurentPolynomial.constant(self.modulus):
            return False
        return all(self.modulus % p == 0 for p in self.primes)


class Unit(value_object.ValueObject):
    """The ideal is the whole ring."""

    __value_fields__ = ("certificate",)

    is_unit: typing.Final[bool] = True

    def __init__(self, certificate: UnitCertificate) -> None:
        self.certificate = certificate

    def __str__(self) -> str:
        if self.certificate.modulus == 1:
            return "unit"
        primes = ", ".join(map(str, self.certificate.primes))
        return f"unit (rational certificate over {self.certificate.modulus}, primes {primes})"


class Proper(value_object.ValueObject):
    """
    The ideal is proper.

    `reason` is ``"zero"`` when every generator vanishes,
    ``"rational-gcd"`` when `residue` is a rational gcd of positive
    degree, and ``"prime"`` when the image modulo `prime` is generated
    by `residue`, which is zero or of positive degree.
    """

    __value_fields__ = ("reason", "prime", "residue")

    is_unit: typing.Final[bool] = False

    def __init__(
        self,
        reason: str,
        residue: laurent.LaurentPolynomial = laurent.ZERO,
        prime: typing.Optional[int] = None,
    ) -> None:
        self.reason = reason
        self.residue = residue
        self.prime = prime

    def __str__(self) -> str:
        if self.reason == "prime":
            return f"proper (mod {self.prime}: {self.residue})"
        if self.reason == "rational-gcd":
            return f"proper (rational gcd {self.residue})"
        return "proper (zero ideal)"


Decision = typing.Union[Unit, Proper]


def _integer_decision(
    generators: typing.Sequence[laurent.LaurentPolynomial],
) -> Decision:
    values = [g.evaluate_at(1) for g in generators]
    common, multipliers = abs(int(values[0])), [1 if values[0] > 0 else -1]
    for value in values[1:]:
        x, y, divisor = sympy.ZZ.gcdex(sympy.ZZ(common), sympy.ZZ(int(value)))
        common = int(divisor)
        multipliers = [int(x) * m for m in multipliers] + [int(y)]

    if common == 1:
        certificate = UnitCertificate(
            generators,
            [laurent.LaurentPolynomial.constant(m) for m in multipliers],
        )
        return Unit(certificate)
    return Proper("prime", laurent.ZERO, min(sympy.factorint(common)))


def _rational_combination(
    generators: typing.Sequence[laurent.LaurentPolynomial],
) -> typing.Tuple[sympy.Poly, typing.List[sympy.Poly]]:
    polys = [laurent.to_sympy(g, domain=sympy.QQ) for g in generators]
    common = polys[0]
    multipliers = [sympy.Poly(1, laurent.SYMBOL, domain=sympy.QQ)]
    for poly in polys[1:]:
        s, t, common = common.gcdex(poly)
        multipliers = [s * m for m in multipliers] + [t]
    return common, multipliers


def _clear_denominators(
    generators: typing.Sequence[laurent.LaurentPolynomial],
    common: sympy.Poly,
    multipliers: typing.Sequence[sympy.Poly],
) -> UnitCertificate:
    scale = common.LC()
    rational = [m.quo_ground(scale) for m in multipliers]
    modulus = functools.reduce(
        sympy.ilcm,
        (int(c.q) for m in rational for c in m.all_coeffs()),
        1,
    )
    lifted = [
        laurent.from_sympy((m * modulus).set_domain(sympy.ZZ)).shift(-g.lowest_exponent)
        for m, g in zip(rational, generators)
    ]
    certificate = UnitCertificate(generators, lifted, int(modulus))
    if not certificate.is_valid():
        raise errors.InconsistencyError(
            "Cleared rational combination does not evaluate to its modulus."
        )
    return certificate


def _prime_gcd(
    generators: typing.Sequence[laurent.LaurentPolynomial], p: int
) -> laurent.LaurentPolynomial:
    return functools.reduce(
        lambda acc, g: laurent.gcd_mod_p(acc, g, p),
        generators,
        laurent.ZERO,
    )


def ideal_is_unit(
    generators: typing.Iterable[laurent.LaurentPolynomial],
) -> Decision:
    """
    Decide whether the generators span ``Z[t, t^-1]``.

    Parameters
    ----------
    generators : Iterable[LaurentPolynomial]
        Ideal generators. Zeros are ignored.

    Returns
    -------
    Unit | Proper
        A checked unit certificate or a proper witness.

    Raises
    ------
    errors.InputError
        If no generators are given.
    """
    given = list(generators)
    if not given:
        raise errors.InputError("An ideal needs at least one generator.")

    nonzero = [g for g in given if not g.is_zero()]
    if not nonzero:
        return Proper("zero")

    for index, g in enumerate(nonzero):
        if g.is_unit():
            multipliers = [laurent.ZERO] * len(nonzero)
            multipliers[index] = g ** -1
            return Unit(UnitCertificate(nonzero, multipliers))

    if all(g.is_constant() for g in nonzero):
        return _integer_decision(nonzero)

    common, multipliers = _rational_combination(nonzero)
    if common.degree() > 0:
        residue = laurent.from_sympy(common.clear_denoms(convert=True)[1])
        return Proper("rational-gcd", residue.primitive_part().normalize())

    certificate = _clear_denominators(nonzero, common, multipliers)
    primes = sorted(sympy.factorint(certificate.modulus))
    for p in primes:
        residue = _prime_gcd(nonzero, p)
        if residue.is_zero() or not residue.is_constant():
            logger.debug("Ideal is proper modulo %d: %s", p, residue)
            return Proper("prime", residue, p)

    return Unit(
        UnitCertificate(
            nonzero, certificate.multipliers, certificate.modulus, primes
        )
    )


class ElementaryIdeal(value_object.ValueObject):
    """
    The ideal ``E_k`` spanned by the minors of order ``size - k`` of an
    Alexander matrix of size `size`.

    `exhaustive` is False when enumeration stopped at a prefix of the
    minors that was already certified to be the unit ideal.
    """

    __value_fields__ = ("index", "generators", "decision", "exhaustive")

    def __init__(
        self,
        index: int,
        generators: typing.Sequence[laurent.LaurentPolynomial],
        decision: Decision,
        exhaustive: bool = True,
        size: int = 0,
    ) -> None:
        self.index = index
        self.generators = tuple(generators)
        self.decision = decision
        self.exhaustive = exhaustive
        self.size = size

    @property
    def is_unit(self) -> bool:
        return self.decision.is_unit


def _minors(
    alexander: matrix_.AlexanderMatrix, order: int
) -> typing.Iterator[laurent.LaurentPolynomial]:
    indices = range(alexander.size)
    for rows in itertools.combinations(indices, order):
        for cols in itertools.combinations(indices, order):
            yield alexander.minor(rows, cols)


def _as_matrix(source: Source) -> matrix_.AlexanderMatrix:
    if isinstance(source, matrix_.AlexanderMatrix):
        return source
    return matrix_.alexander_matrix(source)


def elementary_ideal(
    source: Source, k: int, exhaustive: bool = True
) -> ElementaryIdeal:
    """
    Build ``E_k`` and decide it.

    Minors are enumerated with row subsets outermost, both in
    lexicographic order. With `exhaustive` False the enumeration stops
    as soon as the minors seen so far span the unit ideal. Orders of
    zero or below give the unit ideal.

    Raises
    ------
    errors.InputError
        If `k` is negative.
    """
    if k < 0:
        raise errors.InputError(f"Elementary ideal index must be nonnegative, got {k}.")

    alexander = _as_matrix(source)
    order = alexander.size - k
    if order <= 0:
        return ElementaryIdeal(
            k,
            (laurent.ONE,),
            Unit(UnitCertificate((laurent.ONE,), (laurent.ONE,))),
            size=alexander.size,
        )

    minors: typing.List[laurent.LaurentPolynomial] = []
    rational = laurent.ZERO
    for minor in _minors(alexander, order):
        minors.append(minor)
        if exhaustive or minor.is_zero():
            continue
        rational = laurent.laurent_gcd_over_rationals(rational, minor)
        if rational.is_constant():
            decision = ideal_is_unit(minors)
            if decision.is_unit:
                logger.debug(
                    "E_%d certified unit after %d minors of order %d", k, len(minors), order
                )
                return ElementaryIdeal(k, minors, decision, False, alexander.size)

    logger.debug("E_%d: %d minors of order %d", k, len(minors), order)
    return ElementaryIdeal(k, minors, ideal_is_unit(minors), True, alexander.size)


class NakanishiLowerBound(value_object.ValueObject):
    """
    Certified lower bound ``m(K) >= value``.

    `proper` is ``E_{value-1}`` (absent when the value is 0) and
    `unit` is ``E_value``. `ideals` holds every ideal decided on the
    way, ``E_0`` first.
    """

    __value_fields__ = ("value", "proper", "unit")

    def __init__(
        self,
        value: int,
        proper: typing.Optional[ElementaryIdeal],
        unit: typing.Optional[ElementaryIdeal],
        ideals: typing.Sequence[ElementaryIdeal] = (),
    ) -> None:
        if proper is not None and proper.is_unit:
            raise errors.InconsistencyError(f"E_{proper.index} is the unit ideal.")
        if unit is not None and not unit.is_unit:
            raise errors.InconsistencyError(f"E_{unit.index} is a proper ideal.")
        self.value = value
        self.proper = proper
        self.unit = unit
        self.ideals = tuple(ideals)

    def __int__(self) -> int:
        return self.value


def nakanishi_lower(source: Source, exhaustive: bool = False) -> NakanishiLowerBound:
    """
    Smallest `k` with ``E_k`` the unit ideal. The Alexander module then
    needs at least `k` generators.
    """
    alexander = _as_matrix(source)
    decided: typing.List[ElementaryIdeal] = []
    for k in range(alexander.size + 1):
        ideal = elementary_ideal(alexander, k, exhaustive=exhaustive)
        logger.debug("E_%d: %s", k, ideal.decision)
        if ideal.is_unit:
            logger.info("Nakanishi index lower bound: %d", k)
            previous = decided[-1] if decided else None
            return NakanishiLowerBound(k, previous, ideal, decided + [ideal])
        decided.append(ideal)

    raise errors.InconsistencyError("The empty-minor ideal must be the unit ideal.")
