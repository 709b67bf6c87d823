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
Rational tangles.

The continued fraction ``[a_1, ..., a_n]`` stands for
``a_n + 1/(a_(n-1) + 1/(... + 1/a_1))``; ``a_1`` twists are made first.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "EndpointPairing",
    "RationalTangle",
    "tangle_fraction",
    "cf_from_fraction",
    "pairing",
    "is_proper_replacement",
    "INFINITY",
    "ZERO_TANGLE",
)

import enum
import fractions
import math
import re
import typing

from mqindex import errors
from mqindex.domain import value_object

_fraction_pattern: typing.Pattern[str] = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


@enum.unique
class EndpointPairing(str, enum.Enum):
    """How a two-string tangle joins its four endpoints."""

    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    DIAGONAL = "diagonal"


def _reduce(p: int, q: int) -> typing.Tuple[int, int]:
    if p == 0 and q == 0:
        raise errors.InputError("0/0 is not a tangle fraction.")
    if q == 0:
        return 1, 0
    g = math.gcd(p, q)
    p, q = p // g, q // g
    return (-p, -q) if q < 0 else (p, q)


def tangle_fraction(cf: typing.Sequence[int]) -> typing.Tuple[int, int]:
    """
    Evaluate a continued fraction to a reduced ``(p, q)`` with
    ``q >= 0``; ``(1, 0)`` is the infinity tangle.

    Raises
    ------
    errors.InputError
        If `cf` is empty.
    """
    if not cf:
        raise errors.InputError("A continued fraction needs at least one term.")
    p, q = cf[0], 1
    for a in cf[1:]:
        p, q = a * p + q, p
    return _reduce(p, q)


def cf_from_fraction(p: int, q: int) -> typing.List[int]:
    """
    Continued fraction with all terms of one sign, innermost first.
    Only the outermost term may be zero.

    Raises
    ------
    errors.InputError
        On ``0/0``.
    """
    p, q = _reduce(p, q)
    if q == 0:
        return [0, 0]
    if p < 0:
        return [-a for a in cf_from_fraction(-p, q)]

    terms: typing.List[int] = []
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    return terms[::-1]


def pairing(p: int, q: int) -> EndpointPairing:
    """
    Raises
    ------
    errors.InputError
        If both `p` and `q` are even.
    """
    if p % 2 == 0 and q % 2 == 0:
        raise errors.InputError(f"{p}/{q} is not reduced.")
    if p % 2 == 0:
        return EndpointPairing.HORIZONTAL
    if q % 2 == 0:
        return EndpointPairing.VERTICAL
    return EndpointPairing.DIAGONAL


class RationalTangle(value_object.ValueObject):
    """
    A rational tangle given by its reduced fraction `p`/`q`.

    Parameters
    ----------
    p, q : int
        Fraction, reduced on construction; ``1/0`` is the infinity
        tangle.
    continued_fraction : Sequence[int], optional
        Expansion to keep, checked against the fraction. Defaults to
        `cf_from_fraction`.
    """

    __value_fields__ = ("p", "q")

    def __init__(
        self,
        p: int,
        q: int = 1,
        continued_fraction: typing.Optional[typing.Sequence[int]] = None,
    ) -> None:
        self.p, self.q = _reduce(p, q)
        if continued_fraction is None:
            continued_fraction = cf_from_fraction(self.p, self.q)
        elif tangle_fraction(continued_fraction) != (self.p, self.q):
            raise errors.InputError(
                f"{list(continued_fraction)} does not evaluate to {self.p}/{self.q}."
            )
        self.continued_fraction: typing.Tuple[int, ...] = tuple(continued_fraction)

    @classmethod
    def from_continued_fraction(cls, cf: typing.Sequence[int]) -> RationalTangle:
        return cls(*tangle_fraction(cf), continued_fraction=cf)

    @classmethod
    def parse(cls, text: str) -> RationalTangle:
        """
        Parse ``p/q`` or an integer ``p``.

        Raises
        ------
        errors.ParseError
        """
        match = _fraction_pattern.match(text)
        if match is None:
            raise errors.ParseError(f"Expected a fraction p/q, got {text!r}.", text, 0)
        p, q = int(match.group(1)), int(match.group(2) or 1)
        try:
            return cls(p, q)
        except errors.InputError as exc:
            raise errors.ParseError(str(exc), text, 0) from exc

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    @property
    def fraction(self) -> typing.Tuple[int, int]:
        return self.p, self.q

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    @property
    def is_integer(self) -> bool:
        return self.q == 1

    @property
    def value(self) -> fractions.Fraction:
        """
        Raises
        ------
        errors.OutOfScopeError
            For the infinity tangle.
        """
        if self.is_infinity:
            raise errors.OutOfScopeError("The infinity tangle has no finite value.")
        return fractions.Fraction(self.p, self.q)

    @property
    def pairing(self) -> EndpointPairing:
        return pairing(self.p, self.q)

    @property
    def crossings(self) -> int:
        return sum(abs(a) for a in self.continued_fraction)


def is_proper_replacement(old: RationalTangle, new: RationalTangle) -> bool:
    """True when both tangles join the same endpoints."""
    return old.pairing is new.pairing


INFINITY: typing.Final[RationalTangle] = RationalTangle(1, 0)
ZERO_TANGLE: typing.Final[RationalTangle] = RationalTangle(0, 1)
