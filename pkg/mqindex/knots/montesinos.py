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
Montesinos links, two-bridge classification and rational unknotting.

``K(f_1, ..., f_n)`` is the numerator closure of the sum of the
rational tangles ``f_i``. With at most two non-integer summands the
closure is the two-bridge link ``b(p, q)``.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "MontesinosDescriptor",
    "parse_montesinos",
    "montesinos_equiv",
    "TwoBridgeKind",
    "TwoBridgeLink",
    "two_bridge_classify",
    "replace_tangle",
    "RationalUnknottingCertificate",
    "rational_unknotting_certificate",
    "pd_for_montesinos",
)

import enum
import fractions
import logging
import re
import typing

import sympy

from mqindex import errors
from mqindex.domain import value_object
from mqindex.knots import diagram
from mqindex.knots import pd as pd_
from mqindex.knots import tangles

logger = logging.getLogger(__name__)

_descriptor_pattern: typing.Pattern[str] = re.compile(r"\s*K\s*\((?P<body>[^)]*)\)\s*$")


@enum.unique
class TwoBridgeKind(str, enum.Enum):
    UNKNOT = "unknot"
    KNOT = "knot"
    TWO_COMPONENT_LINK = "two-component link"


def two_bridge_classify(p: int, q: int = 1) -> TwoBridgeKind:
    """
    ``b(p, q)`` is the unknot for ``|p| = 1``, the two-component unlink
    for ``p = 0``, a knot for odd `p` and a two-component link
    otherwise.
    """
    if abs(p) == 1:
        return TwoBridgeKind.UNKNOT
    if p % 2:
        return TwoBridgeKind.KNOT
    return TwoBridgeKind.TWO_COMPONENT_LINK


class TwoBridgeLink(value_object.ValueObject):
    """
    The two-bridge link ``b(p, q)``, normalized to ``p >= 0`` and the
    least ``q`` in ``(0, p)`` among ``±q^±1 mod p``. Degenerate forms
    are ``b(0, 1)``, the two-component unlink, and ``b(1, 0)``, the
    unknot.
    """

    __value_fields__ = ("p", "q")

    def __init__(self, p: int, q: int) -> None:
        p = abs(p)
        if p == 0:
            self.p, self.q = 0, 1
            return
        if p == 1:
            self.p, self.q = 1, 0
            return
        if sympy.gcd(p, q) != 1:
            raise errors.InputError(f"b({p}, {q}) needs coprime p and q.")
        q %= p
        inverse = int(sympy.mod_inverse(q, p))
        self.p = p
        self.q = min(q, p - q, inverse, p - inverse)

    def __str__(self) -> str:
        return f"b({self.p}, {self.q})"

    @property
    def kind(self) -> TwoBridgeKind:
        return two_bridge_classify(self.p, self.q)

    @property
    def determinant(self) -> int:
        return self.p


class MontesinosDescriptor(value_object.ValueObject):
    """
    An ordered sum of finite rational tangles, closed by the numerator.

    Raises
    ------
    errors.InputError
        If no tangle is given or one of them is the infinity tangle.
    """

    __value_fields__ = ("tangles",)

    def __init__(self, summands: typing.Sequence[tangles.RationalTangle]) -> None:
        checked = tuple(summands)
        if not checked:
            raise errors.InputError("A Montesinos descriptor needs at least one tangle.")
        for tangle in checked:
            if tangle.is_infinity:
                raise errors.InputError("The infinity tangle cannot be a summand.")
        self.tangles: typing.Tuple[tangles.RationalTangle, ...] = checked

    def __str__(self) -> str:
        return "K({})".format(", ".join(str(tangle) for tangle in self.tangles))

    def __len__(self) -> int:
        return len(self.tangles)

    def __getitem__(self, position: int) -> tangles.RationalTangle:
        """1-based access."""
        return self.tangles[self._check_position(position)]

    def _check_position(self, position: int) -> int:
        if not 1 <= position <= len(self.tangles):
            raise errors.InvalidIdError(
                f"Position {position} is not in 1 .. {len(self.tangles)}."
            )
        return position - 1

    @property
    def total(self) -> fractions.Fraction:
        """``e``, the sum of all fractions."""
        return sum((tangle.value for tangle in self.tangles), fractions.Fraction(0))

    def fractional_parts(self) -> typing.Tuple[fractions.Fraction, ...]:
        """Non-zero ``f_i mod 1`` in order."""
        return tuple(
            tangle.value % 1 for tangle in self.tangles if not tangle.is_integer
        )

    def canonical_key(
        self,
    ) -> typing.Tuple[fractions.Fraction, typing.Tuple[fractions.Fraction, ...]]:
        """
        ``e`` together with the least rotation or reflection of the
        fractional parts.
        """
        parts = self.fractional_parts()
        orders = [parts[n:] + parts[:n] for n in range(len(parts))]
        orders += [tuple(reversed(order)) for order in orders]
        return self.total, min(orders, default=())

    def with_tangle(self, position: int, tangle: tangles.RationalTangle) -> MontesinosDescriptor:
        updated = list(self.tangles)
        updated[self._check_position(position)] = tangle
        return MontesinosDescriptor(updated)

    def two_bridge(self) -> typing.Optional[TwoBridgeLink]:
        """The closure as ``b(p, q)`` when at most two summands are non-integer."""
        rational = [t for t in self.tangles if not t.is_integer]
        shift = sum(t.p for t in self.tangles if t.is_integer)
        if len(rational) > 2:
            return None
        if not rational:
            return TwoBridgeLink(shift, 1)
        if len(rational) == 1:
            (only,) = rational
            return TwoBridgeLink(only.p + shift * only.q, only.q)

        first, second = rational
        p, q = first.p, first.q
        r, s = second.p + shift * second.q, second.q
        x, y, _ = sympy.ZZ.gcdex(sympy.ZZ(p), sympy.ZZ(q))
        return TwoBridgeLink(p * s + q * r, -int(y) * s + int(x) * r)


def parse_montesinos(text: str) -> MontesinosDescriptor:
    """
    Parse ``K(p1/q1, p2/q2, ...)``.

    Raises
    ------
    errors.ParseError
    """
    match = _descriptor_pattern.match(text)
    if match is None:
        raise errors.ParseError("Expected K(p1/q1, p2/q2, ...).", text, 0)
    offset = match.start("body")
    summands = []
    for item in match.group("body").split(","):
        summands.append(tangles.RationalTangle.parse(item))
    try:
        return MontesinosDescriptor(summands)
    except errors.InputError as exc:
        raise errors.ParseError(str(exc), text, offset) from exc


def montesinos_equiv(left: MontesinosDescriptor, right: MontesinosDescriptor) -> bool:
    """
    True when one descriptor turns into the other by moving integers
    between summands, rotating the summands or reversing them. False
    only means no such sequence exists.
    """
    return left.canonical_key() == right.canonical_key()


Replacement = typing.Union[MontesinosDescriptor, TwoBridgeLink]


def replace_tangle(
    descriptor: MontesinosDescriptor,
    position: int,
    tangle: tangles.RationalTangle,
) -> Replacement:
    """
    Replace the summand at 1-based `position`. The result is a
    two-bridge link when at most two non-integer summands remain.

    Raises
    ------
    errors.InvalidIdError
        If `position` is out of range.
    errors.OutOfScopeError
        If `tangle` is the infinity tangle.
    errors.ImproperReplacementError
        If the two tangles join different endpoints.
    """
    old = descriptor[position]
    if tangle.is_infinity:
        raise errors.OutOfScopeError(
            "Replacing a summand by the infinity tangle splits the closure."
        )
    if not tangles.is_proper_replacement(old, tangle):
        raise errors.ImproperReplacementError(
            f"{old} ({old.pairing.value}) and {tangle} ({tangle.pairing.value}) "
            "join different endpoints."
        )

    replaced = descriptor.with_tangle(position, tangle)
    closure = replaced.two_bridge()
    return replaced if closure is None else closure


class RationalUnknottingCertificate(value_object.ValueObject):
    """One proper rational replacement that turns `descriptor` into the unknot."""

    __value_fields__ = ("descriptor", "position", "replacement")

    def __init__(
        self,
        descriptor: MontesinosDescriptor,
        position: int,
        replacement: tangles.RationalTangle,
    ) -> None:
        self.descriptor = descriptor
        self.position = position
        self.replacement = replacement

    @property
    def original(self) -> tangles.RationalTangle:
        return self.descriptor[self.position]

    def result(self) -> Replacement:
        return replace_tangle(self.descriptor, self.position, self.replacement)

    def verify(self) -> bool:
        result = self.result()
        return isinstance(result, TwoBridgeLink) and result.kind is TwoBridgeKind.UNKNOT

    def trace(self) -> typing.Tuple[str, ...]:
        return (
            f"{self.descriptor}",
            f"replace {self.original} at position {self.position} by "
            f"{self.replacement} ({self.original.pairing.value} pairing kept)",
            f"closure {self.result()}",
        )


def _candidates(bound: int) -> typing.Iterator[tangles.RationalTangle]:
    for q in range(1, bound + 1):
        for magnitude in range(0, bound + 1):
            for p in (magnitude, -magnitude) if magnitude else (0,):
                if sympy.gcd(p, q) == 1:
                    yield tangles.RationalTangle(p, q)


def rational_unknotting_certificate(
    descriptor: MontesinosDescriptor, bound: int = 8
) -> typing.Optional[RationalUnknottingCertificate]:
    """
    Scan positions in order, then replacements ``p/q`` with
    ``1 <= q <= bound`` and ``|p| <= bound`` by increasing `q` and
    `|p|`, positive first, and return the first proper replacement
    whose closure is the unknot.

    Raises
    ------
    errors.ConfigurationError
        If `bound` is not positive.
    """
    if bound <= 0:
        raise errors.ConfigurationError(f"Search bound must be positive, got {bound}.")

    for position in range(1, len(descriptor) + 1):
        old = descriptor[position]
        for candidate in _candidates(bound):
            if candidate == old or not tangles.is_proper_replacement(old, candidate):
                continue
            certificate = RationalUnknottingCertificate(descriptor, position, candidate)
            if certificate.verify():
                logger.info(
                    "%s: replacing %s at position %d by %s gives the unknot",
                    descriptor, old, position, candidate,
                )
                return certificate

    logger.info("%s: no rational unknotting replacement with bound %d", descriptor, bound)
    return None


def pd_for_montesinos(descriptor: MontesinosDescriptor) -> pd_.PDCode:
    """
    PD code of the closure drawn from each summand's continued
    fraction; it has ``sum(|a_i|)`` crossings.

    Raises
    ------
    errors.InputError
        If the closure is not a knot.
    """
    return diagram.numerator_closure_pd(descriptor.tangles)
