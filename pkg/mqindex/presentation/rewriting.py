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
Knuth-Bendix completion for group presentations.

Words are encoded as strings, one character per letter, so that the
plain string order of equal-length encodings is the shortlex order
with every generator immediately followed by its inverse. The group
is treated as a monoid with the free cancellation rules added.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "CompletionLimits",
    "RewriteSystem",
    "knuth_bendix",
    "word_problem",
)

import logging
import typing

from mqindex import errors
from mqindex import sentinel
from mqindex.algebra import words
from mqindex.domain import value_object
from mqindex.presentation import presentation as presentation_

logger = logging.getLogger(__name__)

_BASE: typing.Final[int] = 0x100

_Rule = typing.Tuple[str, str]


class CompletionLimits(value_object.ValueObject):
    """
    Resource caps for `knuth_bendix`: the number of rules, the length
    of a rule's left-hand side and the number of completion rounds.
    """

    __value_fields__ = ("max_rules", "max_length", "max_steps")

    def __init__(
        self,
        max_rules: int = 300,
        max_length: int = 40,
        max_steps: int = 40,
    ) -> None:
        if min(max_rules, max_length, max_steps) <= 0:
            raise errors.ConfigurationError("Completion limits must be positive.")

        self.max_rules = max_rules
        self.max_length = max_length
        self.max_steps = max_steps


class _Alphabet:
    def __init__(self, generators: typing.Sequence[str]) -> None:
        self.generators = tuple(generators)
        self._codes = {name: index for index, name in enumerate(self.generators)}

    def encode(self, word: words.Word) -> str:
        try:
            return "".join(
                chr(_BASE + 2 * self._codes[name] + (0 if sign == 1 else 1))
                for name, sign in word.letters
            )
        except KeyError as exc:
            raise errors.UnknownSymbolError(exc.args[0]) from None

    def decode(self, text: str) -> words.Word:
        letters = []
        for char in text:
            code = ord(char) - _BASE
            letters.append((self.generators[code // 2], 1 if code % 2 == 0 else -1))
        return words.Word(letters)

    def cancellations(self) -> typing.List[_Rule]:
        rules = []
        for index in range(len(self.generators)):
            g, g_inv = chr(_BASE + 2 * index), chr(_BASE + 2 * index + 1)
            rules.append((g + g_inv, ""))
            rules.append((g_inv + g, ""))
        return rules


def _shortlex(word: str) -> typing.Tuple[int, str]:
    return len(word), word


def _orient(a: str, b: str) -> _Rule:
    return (a, b) if _shortlex(a) > _shortlex(b) else (b, a)


def _rewrite(word: str, rules: typing.Sequence[_Rule]) -> str:
    while True:
        before = word
        for left, right in rules:
            if left in word:
                word = word.replace(left, right)
        if word == before:
            return word


def _interreduce(rules: typing.Iterable[_Rule]) -> typing.List[_Rule]:
    pending = list(rules)
    system: typing.List[_Rule] = []
    while pending:
        left, right = pending.pop()
        left, right = _rewrite(left, system), _rewrite(right, system)
        if left == right:
            continue
        left, right = _orient(left, right)
        kept = []
        for rule in system:
            if left in rule[0]:
                pending.append(rule)
            else:
                kept.append(rule)
        system = kept + [(left, right)]

    system = [(left, _rewrite(right, system)) for left, right in system]
    return sorted(set(system), key=lambda rule: (_shortlex(rule[0]), rule[1]))


def _critical_pairs(rules: typing.Sequence[_Rule]) -> typing.List[_Rule]:
    found = []
    for left1, right1 in rules:
        for left2, right2 in rules:
            for k in range(1, min(len(left1), len(left2))):
                if left1[-k:] != left2[:k]:
                    continue
                one = _rewrite(right1 + left2[k:], rules)
                two = _rewrite(left1[:-k] + right2, rules)
                if one != two:
                    found.append(_orient(one, two))
    return found


class RewriteSystem(value_object.ValueObject):
    """
    A rewriting system over the generators of a presentation. Rules
    strictly decrease the shortlex order. The free cancellation rules
    are implicit and never listed in `rules`. When `complete` is set
    the system is confluent and decides the word problem.
    """

    __value_fields__ = ("generators", "rules", "complete")

    ordering: typing.ClassVar[str] = "shortlex"

    def __init__(
        self,
        generators: typing.Sequence[str],
        rules: typing.Sequence[typing.Tuple[words.Word, words.Word]],
        complete: bool,
    ) -> None:
        self.generators = tuple(generators)
        self.rules = tuple(rules)
        self.complete = complete
        alphabet = _Alphabet(self.generators)
        self._alphabet = alphabet
        self._encoded = alphabet.cancellations() + [
            (alphabet.encode(left), alphabet.encode(right)) for left, right in self.rules
        ]

    def normal_form(self, word: words.Word) -> words.Word:
        return self._alphabet.decode(
            _rewrite(self._alphabet.encode(word), self._encoded)
        )

    def __len__(self) -> int:
        return len(self.rules)


def knuth_bendix(
    presentation: presentation_.Presentation,
    limits: typing.Optional[CompletionLimits] = None,
) -> sentinel.SentinelOr[RewriteSystem]:
    """
    Complete the relators of a presentation into a confluent
    rewriting system, or give up with `sentinel.INCONCLUSIVE` once a
    limit is reached.
    """
    limits = limits or CompletionLimits()
    alphabet = _Alphabet(presentation.generators)
    seeds = alphabet.cancellations() + [
        (alphabet.encode(relator), "") for relator in presentation.relators
    ]
    rules = _interreduce(seeds)

    for step in range(limits.max_steps):
        pairs = _critical_pairs(rules)
        logger.debug(
            "completion round %d: %d rules, %d unresolved pairs",
            step, len(rules), len(pairs),
        )
        if not pairs:
            logger.info(
                "Completion of %s finished with %d rules", presentation, len(rules)
            )
            decoded = [(alphabet.decode(left), alphabet.decode(right)) for left, right in rules]
            # cancellation rules decode to the identity on both sides
            return RewriteSystem(
                presentation.generators,
                [(left, right) for left, right in decoded if left != right],
                complete=True,
            )

        rules = _interreduce(rules + pairs)
        longest = max((len(left) for left, _ in rules), default=0)
        if len(rules) > limits.max_rules or longest > limits.max_length:
            logger.warning(
                "Completion abandoned: %d rules, longest left side %d",
                len(rules), longest,
            )
            return sentinel.INCONCLUSIVE

    logger.warning("Completion abandoned after %d rounds", limits.max_steps)
    return sentinel.INCONCLUSIVE


def word_problem(system: RewriteSystem, word: words.Word) -> bool:
    """
    Whether the word represents the identity.

    Raises
    ------
    errors.HypothesisError
        If the system is not complete.
    """
    if not system.complete:
        raise errors.HypothesisError(
            "The word problem needs a complete rewriting system."
        )
    return system.normal_form(word).is_identity()
