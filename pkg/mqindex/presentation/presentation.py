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
Finite group presentations, their abelianization and null-homologous
relator replacement.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "Presentation",
    "AbelianGroupInvariants",
    "PresentationDiff",
    "abelianization",
    "is_null_homologous",
    "diff",
    "replace_relator",
    "replace_relator_at",
    "h1_equal",
)

import collections
import functools
import typing

from mqindex import errors
from mqindex.algebra import matrices
from mqindex.algebra import words
from mqindex.domain import value_object

WordLike = typing.Union[words.Word, str]


def _as_word(value: WordLike) -> words.Word:
    if isinstance(value, words.Word):
        return value
    return words.Word.parse(value)


class AbelianGroupInvariants(value_object.ValueObject):
    """
    Structure of a finitely generated abelian group
    ``Z^free_rank + Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ...``.
    """

    __value_fields__ = ("free_rank", "torsion_factors")

    def __init__(
        self,
        free_rank: int,
        torsion_factors: typing.Sequence[int] = (),
    ) -> None:
        factors = tuple(int(d) for d in torsion_factors)
        if free_rank < 0 or any(d <= 1 for d in factors):
            raise errors.InputError(
                "Torsion factors must exceed 1 and the free rank "
                "must be nonnegative."
            )
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise errors.InputError(
                f"Torsion factors {factors} do not form a divisibility chain."
            )

        self.free_rank = free_rank
        self.torsion_factors = factors

    @property
    def minimal_generators(self) -> int:
        return self.free_rank + len(self.torsion_factors)

    def is_infinite_cyclic(self) -> bool:
        return self.free_rank == 1 and not self.torsion_factors

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion_factors]
        return " + ".join(parts) if parts else "0"


class Presentation(value_object.ValueObject):
    """
    A finite presentation ``<S | R>``.

    Parameters
    ----------
    generators : Sequence[str]
        Ordered, pairwise distinct generator names.
    relators : Iterable[Word or str]
        Relators; the multiset order is kept as given.

    Raises
    ------
    errors.InputError
        On an invalid or repeated generator name.
    errors.UnknownSymbolError
        If a relator mentions a name outside `generators`.
    """

    __value_fields__ = ("generators", "relators")

    def __init__(
        self,
        generators: typing.Sequence[str],
        relators: typing.Iterable[WordLike] = (),
    ) -> None:
        names = tuple(generators)
        for name in names:
            if not words.is_valid_name(name):
                raise errors.InputError(f"Invalid generator name {name!r}.")
        if len(set(names)) != len(names):
            raise errors.InputError(f"Repeated generator names in {names}.")

        known = frozenset(names)
        checked = tuple(_as_word(relator) for relator in relators)
        for relator in checked:
            unknown = sorted(relator.symbols() - known)
            if unknown:
                raise errors.UnknownSymbolError(unknown[0])

        self.generators: typing.Tuple[str, ...] = names
        self.relators: typing.Tuple[words.Word, ...] = checked

    def __str__(self) -> str:
        return "< {} | {} >".format(
            ", ".join(self.generators),
            ", ".join(str(relator) for relator in self.relators),
        )

    @property
    def rank(self) -> int:
        """Number of generators (an upper bound for the group rank)."""
        return len(self.generators)

    def word(self, value: WordLike) -> words.Word:
        """
        Parse a word and check that it only uses this presentation's
        generators.
        """
        word = _as_word(value)
        unknown = sorted(word.symbols() - frozenset(self.generators))
        if unknown:
            raise errors.UnknownSymbolError(unknown[0])
        return word

    def exponent_vector(self, word: WordLike) -> typing.Tuple[int, ...]:
        return words.exponent_vector(_as_word(word), self.generators)

    @functools.cached_property
    def exponent_matrix(self) -> matrices.IntegerMatrix:
        """Relator exponent sums, one row per relator."""
        return matrices.IntegerMatrix.from_rows(
            [self.exponent_vector(relator) for relator in self.relators],
            len(self.generators),
        )

    @functools.cached_property
    def smith(self) -> matrices.SmithDecomposition:
        return matrices.snf(self.exponent_matrix)

    @functools.cached_property
    def abelianization(self) -> AbelianGroupInvariants:
        factors = self.smith.invariant_factors
        return AbelianGroupInvariants(
            free_rank=len(self.generators) - len(factors),
            torsion_factors=[d for d in factors if d > 1],
        )

    def with_relators(self, relators: typing.Iterable[WordLike]) -> Presentation:
        return Presentation(self.generators, relators)

    def add_relators(self, extra: typing.Iterable[WordLike]) -> Presentation:
        return Presentation(self.generators, self.relators + tuple(extra))


def abelianization(presentation: Presentation) -> AbelianGroupInvariants:
    """Invariants of ``Z^|S|`` modulo the relator exponent lattice."""
    return presentation.abelianization


def is_null_homologous(word: WordLike, presentation: Presentation) -> bool:
    """
    Whether the word maps to zero in the abelianization.

    Raises
    ------
    errors.UnknownSymbolError
        If the word mentions a foreign generator.
    """
    vector = presentation.exponent_vector(word)
    return matrices.lattice_member(vector, presentation.exponent_matrix).member


def h1_equal(left: Presentation, right: Presentation) -> bool:
    return left.abelianization == right.abelianization


class PresentationDiff(value_object.ValueObject):
    """
    Relator multisets shared by two presentations over the same
    generators, and those only found on either side.
    """

    __value_fields__ = ("common", "only_left", "only_right", "loose")

    def __init__(
        self,
        common: typing.Sequence[words.Word],
        only_left: typing.Sequence[words.Word],
        only_right: typing.Sequence[words.Word],
        loose: bool = False,
    ) -> None:
        self.common = tuple(common)
        self.only_left = tuple(only_left)
        self.only_right = tuple(only_right)
        self.loose = loose

    @property
    def replacements(self) -> int:
        """Number of one-for-one relator replacements the diff implies."""
        return max(len(self.only_left), len(self.only_right))


def diff(
    left: Presentation,
    right: Presentation,
    loose: bool = False,
) -> PresentationDiff:
    """
    Split the relators of two presentations into a common part and
    the two remainders.

    Relators are compared as freely reduced words. With `loose`, two
    relators also match when one is a cyclic permutation of the other
    or of its inverse; the common part then holds the left spelling.

    Raises
    ------
    errors.GeneratorMismatchError
        If the generator lists differ (order matters).
    """
    if left.generators != right.generators:
        raise errors.GeneratorMismatchError(
            f"Generator lists differ: {left.generators} vs {right.generators}."
        )

    def key(word: words.Word) -> typing.Hashable:
        return word.cyclic_key() if loose else word

    available = collections.Counter(key(relator) for relator in right.relators)
    common: typing.List[words.Word] = []
    only_left: typing.List[words.Word] = []
    for relator in left.relators:
        k = key(relator)
        if available[k] > 0:
            available[k] -= 1
            common.append(relator)
        else:
            only_left.append(relator)

    matched = collections.Counter(key(relator) for relator in common)
    only_right: typing.List[words.Word] = []
    for relator in right.relators:
        k = key(relator)
        if matched[k] > 0:
            matched[k] -= 1
        else:
            only_right.append(relator)

    return PresentationDiff(common, only_left, only_right, loose)


def replace_relator_at(
    presentation: Presentation,
    index: int,
    new: WordLike,
    enforce_null_homologous: bool = True,
) -> Presentation:
    """
    Replace the relator at a given position, keeping the position.

    Raises
    ------
    errors.InvalidIdError
        If the index is out of range.
    errors.NullHomologyError
        With `enforce_null_homologous`, when the new relator is not
        null-homologous in the original group or the old relator is
        not null-homologous in the result. Every failing side is
        reported.
    """
    if not 0 <= index < len(presentation.relators):
        raise errors.InvalidIdError(
            f"Relator index {index} out of range for "
            f"{len(presentation.relators)} relators."
        )

    old = presentation.relators[index]
    replacement = presentation.word(new)
    relators = list(presentation.relators)
    relators[index] = replacement
    result = presentation.with_relators(relators)

    if enforce_null_homologous:
        failures = []
        if not is_null_homologous(replacement, presentation):
            failures.append((str(replacement), "G"))
        if not is_null_homologous(old, result):
            failures.append((str(old), "G'"))
        if failures:
            raise errors.NullHomologyError(failures)

    return result


def replace_relator(
    presentation: Presentation,
    old: WordLike,
    new: WordLike,
    enforce_null_homologous: bool = True,
) -> Presentation:
    """
    Replace the first occurrence of relator `old` by `new`.

    Raises
    ------
    errors.InputError
        If `old` is not a relator of the presentation.
    errors.NullHomologyError
        See `replace_relator_at`.
    """
    target = _as_word(old)
    try:
        index = presentation.relators.index(target)
    except ValueError:
        raise errors.InputError(
            f"{str(target)!r} is not a relator of {presentation}."
        ) from None

    return replace_relator_at(presentation, index, new, enforce_null_homologous)
