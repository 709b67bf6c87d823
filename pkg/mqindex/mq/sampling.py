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
"""Seeded random presentations and null-homologous relator replacements."""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "random_word",
    "random_presentation",
    "replace_randomly",
)

import random
import typing

from mqindex.algebra import words
from mqindex.presentation import presentation as presentation_


def random_word(
    rng: random.Random, generators: typing.Sequence[str], max_length: int
) -> words.Word:
    """A freely reduced word of length at most `max_length`."""
    length = rng.randint(0, max_length)
    return words.reduce(
        (rng.choice(generators), rng.choice((1, -1))) for _ in range(length)
    )


def random_presentation(
    rng: random.Random,
    max_generators: int = 4,
    max_relators: int = 4,
    max_relator_length: int = 8,
) -> presentation_.Presentation:
    count = rng.randint(1, max_generators)
    generators = [f"x{i}" for i in range(1, count + 1)]
    relators = [
        random_word(rng, generators, max_relator_length)
        for _ in range(rng.randint(0, max_relators))
    ]
    return presentation_.Presentation(generators, [r for r in relators if not r.is_identity()])


def replace_randomly(
    rng: random.Random,
    presentation: presentation_.Presentation,
    replacements: int,
    max_length: int = 3,
) -> presentation_.Presentation:
    """
    Apply `replacements` null-homologous replacements, each turning a
    relator ``r`` into ``w r w^-1 [u, v]``. Presentations without
    relators gain commutators instead.
    """
    result = presentation
    generators = presentation.generators
    for _ in range(replacements):
        u = random_word(rng, generators, max_length)
        v = random_word(rng, generators, max_length)
        extra = words.commutator(u, v)
        if not result.relators:
            result = result.add_relators([extra])
            continue
        index = rng.randrange(len(result.relators))
        w = random_word(rng, generators, max_length)
        new = words.multiply(words.conjugate(result.relators[index], w), extra)
        result = presentation_.replace_relator_at(result, index, new)
    return result
