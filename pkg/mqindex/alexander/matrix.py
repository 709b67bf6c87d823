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
Alexander matrices of presentations with infinite cyclic
abelianization.

A presentation with `n` generators and `n` relators (Wirtinger form,
one relator redundant) drops one relator, the last by default. A
deficiency-one presentation with `n - 1` relators drops none. One
generator column, the first by default, is then deleted; its
generator must have weight ±1.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "AlexanderMatrix",
    "alexander_matrix",
    "alexander_polynomial",
    "knot_determinant",
)

import typing

from mqindex import errors
from mqindex.algebra import laurent
from mqindex.alexander import fox
from mqindex.domain import value_object
from mqindex.presentation import presentation as presentation_


class AlexanderMatrix(value_object.ValueObject):
    """
    Abelianized Fox Jacobian of the retained relators with one
    generator column deleted. `dropped_relator` is None when no
    relator was dropped.
    """

    __value_fields__ = ("entries", "dropped_relator", "dropped_column")

    def __init__(
        self,
        entries: typing.Sequence[typing.Sequence[laurent.LaurentPolynomial]],
        dropped_relator: typing.Optional[int],
        dropped_column: int,
        generators: typing.Sequence[str] = (),
    ) -> None:
        self.entries = tuple(tuple(row) for row in entries)
        self.dropped_relator = dropped_relator
        self.dropped_column = dropped_column
        self.generators = tuple(generators)

    @property
    def size(self) -> int:
        return len(self.entries)

    def determinant(self) -> laurent.LaurentPolynomial:
        return laurent.laurent_matrix_det(self.entries)

    def minor(
        self, rows: typing.Sequence[int], cols: typing.Sequence[int]
    ) -> laurent.LaurentPolynomial:
        return laurent.laurent_matrix_det(
            [[self.entries[i][j] for j in cols] for i in rows]
        )


def alexander_matrix(
    presentation: presentation_.Presentation,
    drop_relator: typing.Optional[int] = None,
    drop_column: int = 0,
) -> AlexanderMatrix:
    """
    Raises
    ------
    errors.OutOfScopeError
        If ``H_1`` is not infinite cyclic.
    errors.DimensionMismatchError
        If the relator count is neither ``n`` nor ``n - 1``.
    errors.InvalidIdError
        If a drop index is out of range or a relator drop is asked
        for a deficiency-one presentation.
    errors.HypothesisError
        If the deleted column's generator does not have weight ±1.
    """
    n = presentation.rank
    relators = list(presentation.relators)
    weights = fox.generator_weights(presentation)

    if len(relators) == n:
        dropped: typing.Optional[int] = n - 1 if drop_relator is None else drop_relator
        if not 0 <= dropped < n:  # type: ignore[operator]
            raise errors.InvalidIdError(f"Relator index {dropped} out of range.")
        del relators[dropped]  # type: ignore[arg-type]
    elif len(relators) == n - 1:
        if drop_relator is not None:
            raise errors.InvalidIdError(
                "A deficiency-one presentation keeps all its relators."
            )
        dropped = None
    else:
        raise errors.DimensionMismatchError(
            f"Alexander matrix needs {n} or {n - 1} relators for {n} "
            f"generators, got {len(relators)}."
        )

    if not 0 <= drop_column < n:
        raise errors.InvalidIdError(f"Column index {drop_column} out of range.")
    removed = presentation.generators[drop_column]
    if abs(weights[removed]) != 1:
        raise errors.HypothesisError(
            f"Generator {removed!r} has weight {weights[removed]}; "
            "only a weight ±1 column may be deleted."
        )

    kept = [name for name in presentation.generators if name != removed]
    entries = [
        [fox.abelianize_t(fox.fox_derivative(relator, name), weights) for name in kept]
        for relator in relators
    ]
    return AlexanderMatrix(entries, dropped, drop_column, kept)


def _as_matrix(
    source: typing.Union[presentation_.Presentation, AlexanderMatrix],
) -> AlexanderMatrix:
    if isinstance(source, AlexanderMatrix):
        return source
    return alexander_matrix(source)


def alexander_polynomial(
    source: typing.Union[presentation_.Presentation, AlexanderMatrix],
) -> laurent.LaurentPolynomial:
    """
    Determinant of the Alexander matrix up to units: lowest exponent
    0 and positive leading coefficient.
    """
    return _as_matrix(source).determinant().normalize()


def knot_determinant(
    source: typing.Union[presentation_.Presentation, AlexanderMatrix],
) -> int:
    """``|Δ(-1)|``."""
    return abs(int(alexander_polynomial(source).evaluate_at(-1)))
