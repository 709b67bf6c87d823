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
Fox free differential calculus.

Derivatives live in the integral group ring of the free group; the
map to ``Z[t, t^-1]`` sends every generator to a power of t given by
its image in an infinite cyclic abelianization.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "GroupRingElement",
    "fox_derivative",
    "abelianize_t",
    "generator_weights",
)

import collections.abc
import typing

from mqindex import errors
from mqindex.algebra import laurent
from mqindex.algebra import words
from mqindex.domain import value_object
from mqindex.presentation import presentation as presentation_


class GroupRingElement(value_object.ValueObject):
    """
    A finite formal sum of free group words with integer
    coefficients. Zero coefficients are never stored.
    """

    __value_fields__ = ("terms",)

    def __init__(
        self,
        terms: typing.Union[
            typing.Mapping[words.Word, int],
            typing.Iterable[typing.Tuple[words.Word, int]],
        ] = (),
    ) -> None:
        items = terms.items() if isinstance(terms, collections.abc.Mapping) else terms
        collected: typing.Dict[words.Word, int] = {}
        for word, coefficient in items:
            collected[word] = collected.get(word, 0) + coefficient

        self.terms: typing.Tuple[typing.Tuple[words.Word, int], ...] = tuple(
            sorted(
                ((w, c) for w, c in collected.items() if c),
                key=lambda term: term[0].sort_key(),
            )
        )

    @classmethod
    def of(cls, word: words.Word, coefficient: int = 1) -> GroupRingElement:
        return cls([(word, coefficient)])

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        return GroupRingElement(self.terms + other.terms)

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement((w, -c) for w, c in self.terms)

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        return self + (-other)

    def __mul__(self, other: GroupRingElement) -> GroupRingElement:
        return GroupRingElement(
            (words.multiply(u, v), a * b)
            for u, a in self.terms
            for v, b in other.terms
        )

    def left_multiply(self, word: words.Word) -> GroupRingElement:
        """The product ``word · self``."""
        return GroupRingElement((words.multiply(word, w), c) for w, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for word, coefficient in self.terms:
            body = str(word) or "1"
            if abs(coefficient) != 1:
                body = f"{abs(coefficient)}*({body})"
            sign = "-" if coefficient < 0 else "+"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def fox_derivative(word: words.Word, name: str) -> GroupRingElement:
    """
    The Fox derivative ``∂word/∂name``.

    A letter ``name`` contributes the prefix before it, a letter
    ``name^-1`` contributes minus the prefix up to and including it.
    """
    terms: typing.List[typing.Tuple[words.Word, int]] = []
    prefix: typing.List[words.Letter] = []
    for letter in word.letters:
        if letter[0] == name:
            if letter[1] == 1:
                terms.append((words.Word(prefix), 1))
            else:
                terms.append((words.Word(prefix + [letter]), -1))
        prefix.append(letter)

    return GroupRingElement(terms)


def abelianize_t(
    element: GroupRingElement, weights: typing.Mapping[str, int]
) -> laurent.LaurentPolynomial:
    """
    Image of a group ring element under ``g -> t^weights[g]``.

    Raises
    ------
    errors.UnknownSymbolError
        If a word mentions a generator without weight.
    """
    terms: typing.Dict[int, int] = {}
    for word, coefficient in element.terms:
        exponent = 0
        for name, sign in word.letters:
            if name not in weights:
                raise errors.UnknownSymbolError(name)
            exponent += sign * weights[name]
        terms[exponent] = terms.get(exponent, 0) + coefficient

    return laurent.LaurentPolynomial.from_terms(terms)


def generator_weights(presentation: presentation_.Presentation) -> typing.Dict[str, int]:
    """
    Images of the generators in ``H_1 = Z``, signed so that the first
    nonzero weight is positive. For Wirtinger presentations every
    weight is 1.

    Raises
    ------
    errors.OutOfScopeError
        If ``H_1`` is not infinite cyclic.
    """
    if not presentation.abelianization.is_infinite_cyclic():
        raise errors.OutOfScopeError(
            f"H_1 = {presentation.abelianization} is not infinite cyclic: "
            "the multivariable case is out of scope."
        )

    smith = presentation.smith
    free = len(smith.invariant_factors)
    values = [smith.V[j, free] for j in range(presentation.rank)]
    sign = -1 if next(v for v in values if v) < 0 else 1
    return {name: sign * value for name, value in zip(presentation.generators, values)}
