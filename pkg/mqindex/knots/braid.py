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
"""Braid words, their closures and the Artin presentation."""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "BraidWord",
    "parse_braid",
    "pd_from_braid",
    "artin_presentation",
)

import re
import typing

from sympy.combinatorics import Permutation

from mqindex import errors
from mqindex.algebra import words
from mqindex.domain import value_object
from mqindex.knots import pd as pd_
from mqindex.knots import wirtinger
from mqindex.presentation import presentation as presentation_

_letter_pattern: typing.Pattern[str] = re.compile(r"s(\d+)(\^-1)?$")


class BraidWord(value_object.ValueObject):
    """
    A braid on `strands` strands. Letter ``i`` is the generator
    ``s_i`` and ``-i`` its inverse.
    """

    __value_fields__ = ("letters", "strands")

    def __init__(
        self,
        letters: typing.Sequence[int],
        strands: typing.Optional[int] = None,
    ) -> None:
        checked = tuple(int(letter) for letter in letters)
        if any(letter == 0 for letter in checked):
            raise errors.InputError("Braid generators are numbered from 1.")
        needed = max((abs(letter) for letter in checked), default=0) + 1
        strands = needed if strands is None else strands
        if strands < needed:
            raise errors.InputError(
                f"A braid using s{needed - 1} needs at least {needed} strands."
            )
        self.letters: typing.Tuple[int, ...] = checked
        self.strands: int = strands

    def __str__(self) -> str:
        return " ".join(
            f"s{letter}" if letter > 0 else f"s{-letter}^-1" for letter in self.letters
        )

    def __len__(self) -> int:
        return len(self.letters)

    def permutation(self) -> Permutation:
        """Permutation of strand positions induced by the braid."""
        result = Permutation(self.strands - 1)
        for letter in self.letters:
            i = abs(letter) - 1
            result = result * Permutation(i, i + 1, size=self.strands)
        return result

    def components(self) -> int:
        """Number of components of the closure."""
        return len(self.permutation().full_cyclic_form)


def parse_braid(text: str, strands: typing.Optional[int] = None) -> BraidWord:
    """
    Parse whitespace-separated ``s<i>`` and ``s<i>^-1`` letters.

    Raises
    ------
    errors.ParseError
        On a malformed letter.
    """
    letters: typing.List[int] = []
    position = 0
    for token in text.split():
        position = text.index(token, position)
        match = _letter_pattern.match(token)
        if match is None or int(match.group(1)) == 0:
            raise errors.ParseError(f"Malformed braid letter {token!r}.", text, position)
        index = int(match.group(1))
        letters.append(-index if match.group(2) else index)
        position += len(token)
    return BraidWord(letters, strands)


def pd_from_braid(braid: BraidWord) -> pd_.PDCode:
    """
    PD code of the braid closure, edges numbered along the knot.

    Strands run upward. At a positive letter the strand from the left
    position passes over; at a negative letter the strand from the
    right position does.

    Raises
    ------
    errors.InputError
        If the closure is not a knot.
    """
    if braid.components() != 1:
        raise errors.InputError(
            f"The closure of {braid} has {braid.components()} components."
        )
    if not braid.letters:
        return pd_.PDCode()

    next_edge = braid.strands
    current = list(range(braid.strands))
    raw: typing.List[typing.Tuple[int, int, int, int]] = []
    flows: typing.Dict[int, int] = {}

    for letter in braid.letters:
        a = abs(letter) - 1
        left_in, right_in = current[a], current[a + 1]
        left_out, right_out = next_edge, next_edge + 1
        next_edge += 2
        if letter > 0:
            raw.append((right_in, left_out, right_out, left_in))
        else:
            raw.append((left_in, right_in, left_out, right_out))
        flows[left_in], flows[right_in] = left_out, right_out
        current[a], current[a + 1] = right_out, left_out

    # Closing the braid joins the top edge at each position to the bottom one.
    alias = {top: bottom for bottom, top in enumerate(current)}

    def edge(e: int) -> int:
        return alias.get(e, e)

    successor = {edge(e): edge(f) for e, f in flows.items()}
    start = edge(raw[0][0])
    labels: typing.Dict[int, int] = {}
    e = start
    while e not in labels:
        labels[e] = len(labels) + 1
        e = successor[e]

    return pd_.PDCode([tuple(labels[edge(e)] for e in crossing) for crossing in raw])


def artin_presentation(braid: BraidWord) -> presentation_.Presentation:
    """
    ``<x_1 .. x_n | b(x_i) x_i^-1>`` for the Artin action of the braid.
    One relator is redundant, so the result has the shape of a
    Wirtinger presentation.
    """
    names = [wirtinger.arc_name(i) for i in range(braid.strands)]
    images = {name: words.generator(name) for name in names}

    for letter in braid.letters:
        a, b = names[abs(letter) - 1], names[abs(letter)]
        x, y = words.generator(a), words.generator(b)
        if letter > 0:
            step = {a: words.conjugate(y, by=x), b: x}
        else:
            step = {a: y, b: words.conjugate(x, by=~y)}
        images = {
            name: (step[name] if name in step else words.generator(name)).substitute(images)
            for name in names
        }

    return presentation_.Presentation(
        names, [images[name] * ~words.generator(name) for name in names]
    )
