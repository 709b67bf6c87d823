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
One-variable integer Laurent polynomials.

The canonical form stores the exponent of the lowest nonzero term and
the coefficient list from that exponent upwards, with no zero at
either end. The zero polynomial has no coefficients and lowest
exponent 0. Gcds and reductions modulo a prime go through sympy.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "LaurentPolynomial",
    "ZERO",
    "ONE",
    "T",
    "laurent_gcd_over_rationals",
    "laurent_matrix_det",
    "cofactor_determinant",
    "COFACTOR_LIMIT",
    "laurent_mod_p",
    "gcd_mod_p",
    "to_sympy",
    "from_sympy",
    "SYMBOL",
)

import fractions
import functools
import math
import re
import typing

import sympy

from mqindex import errors
from mqindex.domain import value_object

SYMBOL: typing.Final[sympy.Symbol] = sympy.Symbol("t")

_term_pattern: typing.Pattern[str] = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+)?\s*(?P<star>\*)?\s*"
    r"(?P<var>t(?:\^(?P<exp>-?\d+))?)?\s*"
)

Scalar = typing.Union[int, "LaurentPolynomial"]


class LaurentPolynomial(value_object.ValueObject):
    """
    An element of ``Z[t, t^-1]``.

    Parameters
    ----------
    lowest_exponent : int
        Exponent of the first coefficient.
    coefficients : Iterable[int]
        Coefficients of ``t^lowest_exponent``, ``t^(lowest_exponent+1)``
        and so on. Zeros at either end are stripped.
    """

    __value_fields__ = ("lowest_exponent", "coefficients")

    def __init__(
        self,
        lowest_exponent: int = 0,
        coefficients: typing.Iterable[int] = (),
    ) -> None:
        values = [int(c) for c in coefficients]
        start = next((i for i, c in enumerate(values) if c), len(values))
        end = len(values)
        while end > start and values[end - 1] == 0:
            end -= 1

        self.coefficients: typing.Tuple[int, ...] = tuple(values[start:end])
        self.lowest_exponent = lowest_exponent + start if self.coefficients else 0

    @classmethod
    def constant(cls, value: int) -> LaurentPolynomial:
        return cls(0, (value,))

    @classmethod
    def monomial(cls, coefficient: int, exponent: int) -> LaurentPolynomial:
        return cls(exponent, (coefficient,))

    @classmethod
    def from_terms(
        cls, terms: typing.Mapping[int, int]
    ) -> LaurentPolynomial:
        """Build from an exponent to coefficient mapping."""
        present = {k: c for k, c in terms.items() if c}
        if not present:
            return cls()

        low, high = min(present), max(present)
        return cls(low, (present.get(k, 0) for k in range(low, high + 1)))

    @classmethod
    def parse(cls, text: str) -> LaurentPolynomial:
        """
        Parse the text form ``c*t^k`` terms joined by ``+``/``-``, for
        example ``1 - t + t^2``, ``-3*t^-1`` or ``0``.

        Raises
        ------
        errors.ParseError
            If the text is not a sum of such terms.
        """
        terms: typing.Dict[int, int] = {}
        position = 0
        first = True
        stripped = text.strip()
        if not stripped:
            raise errors.ParseError("Empty polynomial", text, 0)

        while position < len(text) and text[position:].strip():
            match = _term_pattern.match(text, position)
            if (
                match is None
                or (match.group("coef") is None and match.group("var") is None)
                or (match.group("sign") is None and not first)
                or (match.group("star") and not (match.group("coef") and match.group("var")))
            ):
                raise errors.ParseError("Malformed polynomial term", text, position)

            sign = -1 if match.group("sign") == "-" else 1
            coefficient = int(match.group("coef") or 1)
            if match.group("var") is None:
                exponent = 0
            else:
                exponent = int(match.group("exp") or 1)
            terms[exponent] = terms.get(exponent, 0) + sign * coefficient
            position = match.end()
            first = False

        return cls.from_terms(terms)

    def terms(self) -> typing.Iterator[typing.Tuple[int, int]]:
        """(exponent, coefficient) pairs of the nonzero terms, ascending."""
        for offset, coefficient in enumerate(self.coefficients):
            if coefficient:
                yield self.lowest_exponent + offset, coefficient

    def __str__(self) -> str:
        if self.is_zero():
            return "0"

        parts: typing.List[str] = []
        for exponent, coefficient in self.terms():
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "t" if exponent == 1 else f"t^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not parts:
                parts.append(f"-{body}" if coefficient < 0 else body)
            else:
                parts.append(f"{'-' if coefficient < 0 else '+'} {body}")

        return " ".join(parts)

    @property
    def highest_exponent(self) -> int:
        return self.lowest_exponent + max(len(self.coefficients) - 1, 0)

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def degree_span(self) -> int:
        """Highest minus lowest exponent; zero for constants and for 0."""
        return max(len(self.coefficients) - 1, 0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return self.is_zero() or (
            len(self.coefficients) == 1 and self.lowest_exponent == 0
        )

    def is_unit(self) -> bool:
        """Units of the Laurent ring are exactly ``±t^k``."""
        return len(self.coefficients) == 1 and abs(self.coefficients[0]) == 1

    @staticmethod
    def _lift(value: Scalar) -> LaurentPolynomial:
        if isinstance(value, LaurentPolynomial):
            return value
        if isinstance(value, int):
            return LaurentPolynomial.constant(value)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Scalar) -> LaurentPolynomial:
        rhs = self._lift(other)
        if rhs is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return rhs
        if rhs.is_zero():
            return self

        low = min(self.lowest_exponent, rhs.lowest_exponent)
        high = max(self.highest_exponent, rhs.highest_exponent)
        values = [0] * (high - low + 1)
        for polynomial in (self, rhs):
            base = polynomial.lowest_exponent - low
            for offset, coefficient in enumerate(polynomial.coefficients):
                values[base + offset] += coefficient

        return LaurentPolynomial(low, values)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.lowest_exponent, (-c for c in self.coefficients))

    def __sub__(self, other: Scalar) -> LaurentPolynomial:
        rhs = self._lift(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Scalar) -> LaurentPolynomial:
        return (-self) + other

    def __mul__(self, other: Scalar) -> LaurentPolynomial:
        rhs = self._lift(other)
        if rhs is NotImplemented:
            return NotImplemented
        if self.is_zero() or rhs.is_zero():
            return ZERO

        values = [0] * (len(self.coefficients) + len(rhs.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(rhs.coefficients):
                    values[i + j] += a * b

        return LaurentPolynomial(self.lowest_exponent + rhs.lowest_exponent, values)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPolynomial:
        if exponent < 0:
            if not self.is_unit():
                raise errors.InputError(
                    f"Negative power of the non-unit {self}."
                )
            return LaurentPolynomial.monomial(
                self.coefficients[0] ** -exponent, exponent * self.lowest_exponent
            )

        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, exponent: int) -> LaurentPolynomial:
        """Multiply by ``t^exponent``."""
        if self.is_zero():
            return self
        return LaurentPolynomial(self.lowest_exponent + exponent, self.coefficients)

    def divide_exact(self, divisor: Scalar) -> LaurentPolynomial:
        """
        The quotient ``self / divisor`` when it lies in the Laurent ring.

        Raises
        ------
        errors.InputError
            If the divisor is zero or does not divide exactly.
        """
        rhs = self._lift(divisor)
        if rhs.is_zero():
            raise errors.InputError("Division by the zero polynomial.")
        if self.is_zero():
            return ZERO

        remainder = list(self.coefficients)
        lead = rhs.coefficients[-1]
        width = len(rhs.coefficients)
        if len(remainder) < width:
            raise errors.InputError(f"{rhs} does not divide {self}.")

        quotient = [0] * (len(remainder) - width + 1)
        for position in range(len(quotient) - 1, -1, -1):
            top = remainder[position + width - 1]
            if top % lead:
                raise errors.InputError(f"{rhs} does not divide {self}.")
            factor = top // lead
            quotient[position] = factor
            if factor:
                for offset, coefficient in enumerate(rhs.coefficients):
                    remainder[position + offset] -= factor * coefficient

        if any(remainder):
            raise errors.InputError(f"{rhs} does not divide {self}.")

        return LaurentPolynomial(
            self.lowest_exponent - rhs.lowest_exponent, quotient
        )

    def evaluate_at(self, point: int) -> typing.Union[int, fractions.Fraction]:
        """
        Value at an integer point. Terms with negative exponents make
        the result a fraction unless it happens to be integral.

        Raises
        ------
        errors.InputError
            At point 0 when a negative exponent is present.
        """
        if point == 0:
            if self.lowest_exponent < 0:
                raise errors.InputError(
                    f"Cannot evaluate {self} at 0: t is not invertible there."
                )
            return self.coefficients[0] if self.lowest_exponent == 0 and self.coefficients else 0

        total = sum(
            fractions.Fraction(point) ** exponent * coefficient
            for exponent, coefficient in self.terms()
        )
        value = fractions.Fraction(total)
        return int(value) if value.denominator == 1 else value

    def content(self) -> int:
        """Nonnegative gcd of the coefficients; 0 for the zero polynomial."""
        return functools.reduce(math.gcd, self.coefficients, 0)

    def primitive_part(self) -> LaurentPolynomial:
        """The polynomial divided by its content."""
        c = self.content()
        if c in (0, 1):
            return self
        return LaurentPolynomial(self.lowest_exponent, (x // c for x in self.coefficients))

    def normalize(self) -> LaurentPolynomial:
        """
        Strip units: shift the lowest exponent to 0 and make the
        leading coefficient positive.
        """
        if self.is_zero():
            return self
        sign = -1 if self.coefficients[-1] < 0 else 1
        return LaurentPolynomial(0, (sign * c for c in self.coefficients))

    def strip_power(self) -> LaurentPolynomial:
        """Divide by the power of t that makes the lowest exponent 0."""
        return LaurentPolynomial(0, self.coefficients)

    def substitute_inverse(self) -> LaurentPolynomial:
        """The polynomial in ``t^-1``."""
        if self.is_zero():
            return self
        return LaurentPolynomial(-self.highest_exponent, reversed(self.coefficients))


ZERO: typing.Final[LaurentPolynomial] = LaurentPolynomial()
ONE: typing.Final[LaurentPolynomial] = LaurentPolynomial.constant(1)
T: typing.Final[LaurentPolynomial] = LaurentPolynomial.monomial(1, 1)


def to_sympy(
    polynomial: LaurentPolynomial,
    domain: typing.Any = sympy.ZZ,
    modulus: typing.Optional[int] = None,
) -> sympy.Poly:
    """
    Ordinary polynomial obtained by dropping the lowest power of t,
    which is a unit in the Laurent ring.
    """
    coefficients = list(reversed(polynomial.coefficients)) or [0]
    if modulus is not None:
        return sympy.Poly(coefficients, SYMBOL, modulus=modulus)
    return sympy.Poly(coefficients, SYMBOL, domain=domain)


def from_sympy(polynomial: sympy.Poly, modulus: typing.Optional[int] = None) -> LaurentPolynomial:
    coefficients = [int(c) for c in reversed(polynomial.all_coeffs())]
    if modulus is not None:
        coefficients = [c % modulus for c in coefficients]
    return LaurentPolynomial(0, coefficients)


def laurent_gcd_over_rationals(
    f: LaurentPolynomial, g: LaurentPolynomial
) -> LaurentPolynomial:
    """
    Generator of the ideal ``(f, g)`` of ``Q[t, t^-1]``, returned as a
    primitive integer polynomial with lowest exponent 0 and positive
    leading coefficient.

    Raises
    ------
    errors.InputError
        If both arguments are zero.
    """
    if f.is_zero() and g.is_zero():
        raise errors.InputError("The gcd of two zero polynomials is undefined.")
    if g.is_zero():
        return f.primitive_part().normalize()
    if f.is_zero():
        return g.primitive_part().normalize()

    common = to_sympy(f).gcd(to_sympy(g))
    return from_sympy(common).primitive_part().normalize()


def _check_prime(p: int) -> None:
    if not sympy.isprime(p):
        raise errors.NotPrimeError(p)


def laurent_mod_p(f: LaurentPolynomial, p: int) -> LaurentPolynomial:
    """
    Reduce the coefficients into ``[0, p)``. The lowest exponent is
    kept, so the map is a ring homomorphism onto its image.

    Raises
    ------
    errors.NotPrimeError
        If `p` is not prime.
    """
    _check_prime(p)
    return LaurentPolynomial(f.lowest_exponent, (c % p for c in f.coefficients))


def gcd_mod_p(f: LaurentPolynomial, g: LaurentPolynomial, p: int) -> LaurentPolynomial:
    """
    Monic generator of ``(f, g)`` in ``F_p[t, t^-1]``, with the power of
    t stripped. Zero when both reductions vanish.

    Raises
    ------
    errors.NotPrimeError
        If `p` is not prime.
    """
    fp, gp = laurent_mod_p(f, p), laurent_mod_p(g, p)
    if fp.is_zero() and gp.is_zero():
        return ZERO

    common = to_sympy(fp, modulus=p).gcd(to_sympy(gp, modulus=p))
    return from_sympy(common.monic(), modulus=p).strip_power()


COFACTOR_LIMIT: typing.Final[int] = 4


def _pivot_cost(entry: LaurentPolynomial) -> typing.Tuple[int, int]:
    return entry.degree_span(), max(abs(c) for c in entry.coefficients)


def _square(
    matrix: typing.Sequence[typing.Sequence[LaurentPolynomial]],
) -> typing.List[typing.List[LaurentPolynomial]]:
    rows = [list(row) for row in matrix]
    if any(len(row) != len(rows) for row in rows):
        raise errors.DimensionMismatchError(
            "Determinant requested for a non-square polynomial matrix."
        )
    return rows


def laurent_matrix_det(
    matrix: typing.Sequence[typing.Sequence[LaurentPolynomial]],
) -> LaurentPolynomial:
    """
    Exact determinant. Matrices up to `COFACTOR_LIMIT` rows are
    expanded by cofactors, larger ones go through Bareiss
    fraction-free elimination.

    Raises
    ------
    errors.DimensionMismatchError
        If the matrix is not square.
    """
    if len(matrix) <= COFACTOR_LIMIT:
        return cofactor_determinant(matrix)
    return _bareiss_determinant(matrix)


def _bareiss_determinant(
    matrix: typing.Sequence[typing.Sequence[LaurentPolynomial]],
) -> LaurentPolynomial:
    # The pivot is the nonzero entry of the remaining submatrix with the
    # smallest (degree span, coefficient size).
    a = _square(matrix)
    n = len(a)
    if n == 0:
        return ONE

    sign = 1
    previous = ONE
    for k in range(n - 1):
        candidates = [
            (i, j)
            for i in range(k, n)
            for j in range(k, n)
            if not a[i][j].is_zero()
        ]
        if not candidates:
            return ZERO
        pi, pj = min(candidates, key=lambda cell: (_pivot_cost(a[cell[0]][cell[1]]), cell))
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign

        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]).divide_exact(previous)
        previous = pivot

    return a[n - 1][n - 1] * sign


def cofactor_determinant(
    matrix: typing.Sequence[typing.Sequence[LaurentPolynomial]],
) -> LaurentPolynomial:
    """Laplace expansion along the first row; meant for small matrices."""
    a = _square(matrix)
    if not a:
        return ONE

    total = ZERO
    for j, entry in enumerate(a[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = entry * cofactor_determinant(minor)
        total = total + term if j % 2 == 0 else total - term

    return total
