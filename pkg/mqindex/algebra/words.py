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
Free group words.

A word is a freely reduced sequence of letters, each letter being a
pair of a generator name and a sign (+1 or -1). The textual form is a
whitespace separated list of tokens ``name`` or ``name^-1``; the empty
string is the identity.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "Letter",
    "Word",
    "IDENTITY",
    "reduce",
    "generator",
    "multiply",
    "inverse",
    "conjugate",
    "commutator",
    "power",
    "exponent_vector",
    "is_valid_name",
)

import functools
import re
import typing

from mqindex import errors
from mqindex.domain import value_object

Letter = typing.Tuple[str, int]

_name_pattern: typing.Pattern[str] = re.compile(r"^[A-Za-z0-9_]+$")
_token_pattern: typing.Pattern[str] = re.compile(
    r"^(?P<name>[A-Za-z0-9_]+)(?P<inverse>\^-1)?$"
)


def is_valid_name(name: str) -> bool:
    """Whether the string is an acceptable generator name."""
    return bool(_name_pattern.match(name))


def _free_reduce(letters: typing.Iterable[Letter]) -> typing.Tuple[Letter, ...]:
    stack: typing.List[Letter] = []
    for name, sign in letters:
        if stack and stack[-1][0] == name and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((name, sign))

    return tuple(stack)


class Word(value_object.ValueObject):
    """
    An element of the free group on generator names.

    Parameters
    ----------
    letters : Iterable[Tuple[str, int]]
        Raw letters. They are freely reduced on construction, so the
        stored sequence never contains a letter followed by its
        inverse.

    Raises
    ------
    errors.InputError
        If a name is not alphanumeric or a sign is not +1/-1.
    """

    __value_fields__ = ("letters",)

    def __init__(self, letters: typing.Iterable[Letter] = ()) -> None:
        checked = []
        for name, sign in letters:
            if sign not in (1, -1):
                raise errors.InputError(
                    f"Letter sign must be +1 or -1, got {sign!r}."
                )
            if not is_valid_name(name):
                raise errors.InputError(f"Invalid generator name {name!r}.")
            checked.append((name, int(sign)))

        self.letters: typing.Tuple[Letter, ...] = _free_reduce(checked)

    @classmethod
    def parse(cls, text: str) -> Word:
        """
        Parse the token form, for example ``"x y^-1 x"``.

        Raises
        ------
        errors.ParseError
            On a malformed token; the position is the character
            offset of the token.
        """
        letters: typing.List[Letter] = []
        for match in re.finditer(r"\S+", text):
            token = match.group(0)
            parsed = _token_pattern.match(token)
            if parsed is None:
                raise errors.ParseError(
                    f"Malformed word token {token!r}", text, match.start()
                )
            sign = -1 if parsed.group("inverse") else 1
            letters.append((parsed.group("name"), sign))

        return cls(letters)

    def __str__(self) -> str:
        return " ".join(
            name if sign == 1 else f"{name}^-1" for name, sign in self.letters
        )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> typing.Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, index: int) -> Letter:
        return self.letters[index]

    def __mul__(self, other: Word) -> Word:
        return multiply(self, other)

    def __invert__(self) -> Word:
        return inverse(self)

    def is_identity(self) -> bool:
        return not self.letters

    def symbols(self) -> typing.FrozenSet[str]:
        """Names of the generators the word mentions."""
        return frozenset(name for name, _ in self.letters)

    def occurrences(self, name: str) -> int:
        """How many letters (of either sign) carry the given name."""
        return sum(1 for letter, _ in self.letters if letter == name)

    def sort_key(self) -> typing.Tuple[int, str]:
        """Deterministic total order: length first, then text."""
        return len(self.letters), str(self)

    def cyclically_reduce(self) -> Word:
        """
        The shortest cyclic conjugate of this word: letters that
        cancel around the end of the word are removed.
        """
        letters = self.letters
        start, end = 0, len(letters)
        while end - start >= 2:
            (first, first_sign), (last, last_sign) = letters[start], letters[end - 1]
            if first == last and first_sign == -last_sign:
                start += 1
                end -= 1
            else:
                break

        return Word(letters[start:end])

    def rotations(self) -> typing.Tuple[Word, ...]:
        """All cyclic rotations of the cyclically reduced word."""
        core = self.cyclically_reduce().letters
        if not core:
            return (IDENTITY,)

        return tuple(Word(core[i:] + core[:i]) for i in range(len(core)))

    def cyclic_key(self) -> typing.Tuple[int, str]:
        """
        Minimal `sort_key` over the rotations of this word and of its
        inverse. Two relators with the same key define the same normal
        closure.
        """
        candidates = self.rotations() + inverse(self).rotations()
        return min(candidate.sort_key() for candidate in candidates)

    def substitute(self, mapping: typing.Mapping[str, Word]) -> Word:
        """
        Replace every generator named in `mapping` by its image; the
        inverse letter is replaced by the inverse image.
        """
        letters: typing.List[Letter] = []
        for name, sign in self.letters:
            image = mapping.get(name)
            if image is None:
                letters.append((name, sign))
            elif sign == 1:
                letters.extend(image.letters)
            else:
                letters.extend(inverse(image).letters)

        return Word(letters)


IDENTITY: typing.Final[Word] = Word()


def reduce(letters: typing.Iterable[Letter]) -> Word:
    """Free reduction of a raw letter sequence."""
    return Word(letters)


def generator(name: str, sign: int = 1) -> Word:
    return Word(((name, sign),))


def multiply(*words: Word) -> Word:
    letters: typing.List[Letter] = []
    for word in words:
        letters.extend(word.letters)

    return Word(letters)


def inverse(word: Word) -> Word:
    return Word((name, -sign) for name, sign in reversed(word.letters))


def conjugate(word: Word, by: Word) -> Word:
    """The conjugate ``by · word · by^-1``."""
    return multiply(by, word, inverse(by))


def commutator(u: Word, v: Word) -> Word:
    """The commutator ``u v u^-1 v^-1``."""
    return multiply(u, v, inverse(u), inverse(v))


def power(word: Word, exponent: int) -> Word:
    if exponent < 0:
        word, exponent = inverse(word), -exponent

    return functools.reduce(multiply, (word for _ in range(exponent)), IDENTITY)


def exponent_vector(
    word: Word, basis: typing.Sequence[str]
) -> typing.Tuple[int, ...]:
    """
    Signed letter counts of the word with respect to an ordered list
    of generator names.

    Raises
    ------
    errors.UnknownSymbolError
        If the word mentions a name outside `basis`.
    """
    positions = {name: index for index, name in enumerate(basis)}
    vector = [0] * len(basis)
    for name, sign in word.letters:
        index = positions.get(name)
        if index is None:
            raise errors.UnknownSymbolError(name)
        vector[index] += sign

    return tuple(vector)
