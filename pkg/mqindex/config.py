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
"""Run configuration shared by the command line and the report."""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "RunConfiguration",
    "DEFAULT_TIETZE_BUDGET",
    "DEFAULT_KB_MAX_STEPS",
    "DEFAULT_SEARCH_DEPTH",
    "DEFAULT_SEARCH_WIDTH",
    "DEFAULT_RATIONAL_BOUND",
    "DEFAULT_MAX_VIRTUALIZATIONS",
    "DEFAULT_MAX_CROSSING_CHANGES",
    "DEFAULT_SEED",
)

import typing

from mqindex import errors
from mqindex.domain import value_object
from mqindex.presentation import rewriting

DEFAULT_TIETZE_BUDGET: typing.Final[int] = 200
DEFAULT_KB_MAX_STEPS: typing.Final[int] = 40
DEFAULT_SEARCH_DEPTH: typing.Final[int] = 2
DEFAULT_SEARCH_WIDTH: typing.Final[int] = 3
DEFAULT_RATIONAL_BOUND: typing.Final[int] = 8
DEFAULT_MAX_VIRTUALIZATIONS: typing.Final[int] = 2
DEFAULT_MAX_CROSSING_CHANGES: typing.Final[int] = 2
DEFAULT_SEED: typing.Final[int] = 20240229

_BUDGETS: typing.Final[typing.Tuple[str, ...]] = (
    "tietze_budget",
    "kb_max_rules",
    "kb_max_length",
    "kb_max_steps",
    "search_depth",
    "search_width",
    "rational_bound",
)


class RunConfiguration(value_object.ValueObject):
    """
    Effort budgets and output mode.

    Every budget must be positive; `max_virtualizations`,
    `max_crossing_changes` and `seed` must be nonnegative.

    Raises
    ------
    errors.ConfigurationError
        On a value out of range.
    """

    __value_fields__ = (
        "tietze_budget",
        "kb_max_rules",
        "kb_max_length",
        "kb_max_steps",
        "search_depth",
        "search_width",
        "rational_bound",
        "max_virtualizations",
        "max_crossing_changes",
        "structured",
        "seed",
    )

    def __init__(
        self,
        tietze_budget: int = DEFAULT_TIETZE_BUDGET,
        kb_max_rules: int = 300,
        kb_max_length: int = 40,
        kb_max_steps: int = DEFAULT_KB_MAX_STEPS,
        search_depth: int = DEFAULT_SEARCH_DEPTH,
        search_width: int = DEFAULT_SEARCH_WIDTH,
        rational_bound: int = DEFAULT_RATIONAL_BOUND,
        max_virtualizations: int = DEFAULT_MAX_VIRTUALIZATIONS,
        max_crossing_changes: int = DEFAULT_MAX_CROSSING_CHANGES,
        structured: bool = False,
        seed: int = DEFAULT_SEED,
    ) -> None:
        values = dict(
            tietze_budget=tietze_budget,
            kb_max_rules=kb_max_rules,
            kb_max_length=kb_max_length,
            kb_max_steps=kb_max_steps,
            search_depth=search_depth,
            search_width=search_width,
            rational_bound=rational_bound,
        )
        for name in _BUDGETS:
            if values[name] <= 0:
                raise errors.ConfigurationError(
                    f"{name} must be positive, got {values[name]}."
                )
        for name, value in (
            ("max_virtualizations", max_virtualizations),
            ("max_crossing_changes", max_crossing_changes),
            ("seed", seed),
        ):
            if value < 0:
                raise errors.ConfigurationError(f"{name} must be nonnegative, got {value}.")

        self.tietze_budget = tietze_budget
        self.kb_max_rules = kb_max_rules
        self.kb_max_length = kb_max_length
        self.kb_max_steps = kb_max_steps
        self.search_depth = search_depth
        self.search_width = search_width
        self.rational_bound = rational_bound
        self.max_virtualizations = max_virtualizations
        self.max_crossing_changes = max_crossing_changes
        self.structured = structured
        self.seed = seed

    def replace(self, **changes: typing.Any) -> RunConfiguration:
        """A validated copy with some fields changed."""
        unknown = sorted(set(changes) - set(self.__value_fields__))
        if unknown:
            raise errors.ConfigurationError(f"Unknown configuration fields {unknown}.")
        values = {name: getattr(self, name) for name in self.__value_fields__}
        values.update(changes)
        return RunConfiguration(**values)

    @property
    def completion_limits(self) -> rewriting.CompletionLimits:
        return rewriting.CompletionLimits(
            max_rules=self.kb_max_rules,
            max_length=self.kb_max_length,
            max_steps=self.kb_max_steps,
        )
