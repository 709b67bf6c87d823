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
Rank bound witnesses.

For a presentation with `r` generators whose abelianization needs `h`
generators, a Nielsen automorphism of the free group is chosen so that
the first `h` transformed generators map onto generators of ``H_1``.
The commutators of those `h` generators together with one correction
word per remaining generator normally generate the commutator
subgroup, which gives ``a(G) <= r + h(h-3)/2``.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "NielsenMove",
    "NielsenAutomorphism",
    "RankBoundCertificate",
    "rank_bound_ngs",
    "rank_bound_size",
)

import typing

from mqindex import errors
from mqindex.algebra import matrices
from mqindex.algebra import words
from mqindex.domain import value_object
from mqindex.mq import witness as witness_
from mqindex.presentation import presentation as presentation_


def rank_bound_size(rank: int, h: int) -> int:
    """``rank + h(h-3)/2``, the size of the emitted witness."""
    return rank + h * (h - 3) // 2


class NielsenMove(value_object.ValueObject):
    """
    An elementary Nielsen transformation of a generator tuple.

    ``swap`` exchanges positions `i` and `j`, ``invert`` replaces
    ``t_i`` by its inverse and ``multiply`` replaces ``t_i`` by
    ``t_i · t_j^power``.
    """

    __value_fields__ = ("kind", "i", "j", "power")

    def __init__(
        self,
        kind: typing.Literal["swap", "invert", "multiply"],
        i: int,
        j: int = -1,
        power: int = 0,
    ) -> None:
        if kind not in ("swap", "invert", "multiply"):
            raise errors.InputError(f"Unknown Nielsen move {kind!r}.")
        if kind == "multiply" and i == j:
            raise errors.InputError("A Nielsen multiplication needs two positions.")

        self.kind = kind
        self.i = i
        self.j = j
        self.power = power

    @classmethod
    def from_row_operation(cls, operation: matrices.RowOperation) -> NielsenMove:
        if operation.kind == "swap":
            return cls("swap", operation.i, operation.j)
        if operation.kind == "negate":
            return cls("invert", operation.i)
        return cls("multiply", operation.i, operation.j, operation.factor)

    def inverse(self) -> NielsenMove:
        if self.kind == "multiply":
            return NielsenMove("multiply", self.i, self.j, -self.power)
        return self

    def apply(self, images: typing.Sequence[words.Word]) -> typing.Tuple[words.Word, ...]:
        updated = list(images)
        if self.kind == "swap":
            updated[self.i], updated[self.j] = updated[self.j], updated[self.i]
        elif self.kind == "invert":
            updated[self.i] = words.inverse(updated[self.i])
        else:
            updated[self.i] = words.multiply(
                updated[self.i], words.power(updated[self.j], self.power)
            )
        return tuple(updated)

    def __str__(self) -> str:
        if self.kind == "swap":
            return f"swap({self.i}, {self.j})"
        if self.kind == "invert":
            return f"invert({self.i})"
        return f"t{self.i} <- t{self.i} * t{self.j}^{self.power}"


class NielsenAutomorphism(value_object.ValueObject):
    """
    A free group automorphism given as a sequence of Nielsen moves
    applied, in order, to the tuple of generators.
    """

    __value_fields__ = ("generators", "moves")

    def __init__(
        self,
        generators: typing.Sequence[str],
        moves: typing.Sequence[NielsenMove],
    ) -> None:
        self.generators = tuple(generators)
        self.moves = tuple(moves)

    def apply(self, images: typing.Sequence[words.Word]) -> typing.Tuple[words.Word, ...]:
        """Run the moves on an arbitrary tuple of words."""
        current = tuple(images)
        for move in self.moves:
            current = move.apply(current)
        return current

    def images(self) -> typing.Tuple[words.Word, ...]:
        """Images of the generators, as words in the generators."""
        return self.apply([words.generator(name) for name in self.generators])

    def inverse(self) -> NielsenAutomorphism:
        return NielsenAutomorphism(
            self.generators, [move.inverse() for move in reversed(self.moves)]
        )

    def __call__(self, word: words.Word) -> words.Word:
        """Image of a word under the automorphism."""
        return word.substitute(dict(zip(self.generators, self.images())))


class RankBoundCertificate(value_object.ValueObject):
    """
    The construction behind the rank bound.

    `coefficients` has one row per generator beyond the first `h`;
    row ``k`` solves ``t_k = sum_i c_{k,i} t_i`` in ``H_1``.
    """

    __value_fields__ = (
        "nielsen_automorphism",
        "transformed_generators",
        "h",
        "coefficients",
        "witness",
    )

    def __init__(
        self,
        nielsen_automorphism: NielsenAutomorphism,
        transformed_generators: typing.Sequence[words.Word],
        h: int,
        coefficients: matrices.IntegerMatrix,
        witness: witness_.NormalGeneratorWitness,
    ) -> None:
        self.nielsen_automorphism = nielsen_automorphism
        self.transformed_generators = tuple(transformed_generators)
        self.h = h
        self.coefficients = coefficients
        self.witness = witness

    @property
    def bound(self) -> int:
        return len(self.witness.words)


def _homology_coordinates(
    presentation: presentation_.Presentation,
) -> typing.Tuple[int, matrices.IntegerMatrix, typing.Tuple[int, ...]]:
    """
    Number `u` of trivial Smith coordinates, the column transform `V`
    and the orders of the nontrivial coordinates (0 for free ones).
    """
    smith = presentation.smith
    factors = smith.invariant_factors
    u = sum(1 for d in factors if d == 1)
    orders = tuple(factors[u:]) + (0,) * (presentation.rank - len(factors))
    return u, smith.V, orders


def _project(
    vector: typing.Sequence[int], u: int, v: matrices.IntegerMatrix
) -> typing.Tuple[int, ...]:
    return v.apply_left(vector)[u:]


def _torsion_rows(orders: typing.Sequence[int]) -> typing.List[typing.List[int]]:
    return [
        [order if j == i else 0 for j in range(len(orders))]
        for i, order in enumerate(orders)
        if order
    ]


def _generates(
    images: typing.Sequence[typing.Sequence[int]], orders: typing.Sequence[int]
) -> bool:
    h = len(orders)
    lattice = matrices.IntegerMatrix.from_rows(
        [list(image) for image in images] + _torsion_rows(orders), h
    )
    return all(
        matrices.lattice_member(
            [int(i == j) for j in range(h)], lattice
        ).member
        for i in range(h)
    )


def _lift(
    generators: typing.Sequence[str], transform: matrices.IntegerMatrix
) -> NielsenAutomorphism:
    # The Hermite form of a unimodular matrix is the identity, so the
    # recorded operations factor it; replaying their inverses backwards
    # on the generator tuple realizes the rows of the matrix.
    decomposition = matrices.hnf(transform)
    if decomposition.H != matrices.IntegerMatrix.identity(transform.rows):
        raise errors.InconsistencyError(f"Transform {transform} is not unimodular.")

    moves = [
        NielsenMove.from_row_operation(operation).inverse()
        for operation in reversed(decomposition.operations)
    ]
    return NielsenAutomorphism(generators, moves)


def rank_bound_ngs(presentation: presentation_.Presentation) -> RankBoundCertificate:
    """
    Build the rank bound witness for a finite presentation.

    The witness words are the commutators ``[t_i, t_j]`` for
    ``i < j < h`` followed by ``t_k^-1 t_1^c_{k,1} ... t_h^c_{k,h}``
    for every ``k >= h``, all written in the original generators.
    """
    generators = presentation.generators
    r = len(generators)
    u, v, orders = _homology_coordinates(presentation)
    h = len(orders)

    def image(vector: typing.Sequence[int]) -> typing.Tuple[int, ...]:
        return _project(vector, u, v)

    identity = matrices.IntegerMatrix.identity(r)
    if _generates([image(identity.row(i)) for i in range(h)], orders):
        transform = identity
    else:
        # Rows of P · V^-1 map onto the Smith coordinates, nontrivial
        # ones first.
        v_inverse = matrices.hnf(v).U
        order = list(range(u, r)) + list(range(u))
        permutation = matrices.IntegerMatrix.from_rows(
            [[int(j == k) for j in range(r)] for k in order], r
        )
        transform = permutation @ v_inverse

    automorphism = _lift(generators, transform)
    transformed = automorphism.images()
    transformed_images = [image(presentation.exponent_vector(t)) for t in transformed]
    if not _generates(transformed_images[:h], orders):
        raise errors.InconsistencyError(
            f"Transformed generators of {presentation} do not generate H_1."
        )

    lattice = matrices.IntegerMatrix.from_rows(
        [list(vector) for vector in transformed_images[:h]] + _torsion_rows(orders), h
    )
    witness_words: typing.List[words.Word] = [
        words.commutator(transformed[i], transformed[j])
        for i in range(h)
        for j in range(i + 1, h)
    ]
    coefficient_rows: typing.List[typing.List[int]] = []
    for k in range(h, r):
        membership = matrices.lattice_member(transformed_images[k], lattice)
        if not membership.member or membership.witness is None:
            raise errors.InconsistencyError(
                f"Generator image {transformed_images[k]} escapes H_1."
            )
        row = list(membership.witness[:h])
        coefficient_rows.append(row)
        witness_words.append(
            words.multiply(
                words.inverse(transformed[k]),
                *(words.power(transformed[i], c) for i, c in enumerate(row)),
            )
        )

    witness = witness_.NormalGeneratorWitness(
        presentation,
        witness_words,
        witness_.Provenance.RANK_BOUND,
        witness_.Status.NECESSARY_CHECKS_PASSED,
    )
    return RankBoundCertificate(
        nielsen_automorphism=automorphism,
        transformed_generators=transformed,
        h=h,
        coefficients=matrices.IntegerMatrix.from_rows(coefficient_rows, h),
        witness=witness,
    )
