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
Exception hierarchy of the package.

Every exception carries a class-level `exit_code` which the command
line front end returns when the exception escapes a command.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "MQIndexError",
    "InputError",
    "ParseError",
    "UnknownSymbolError",
    "DimensionMismatchError",
    "NotPrimeError",
    "InvalidIdError",
    "ConfigurationError",
    "InconsistencyError",
    "HypothesisError",
    "NullHomologyError",
    "AbelianizationMismatchError",
    "GeneratorMismatchError",
    "ImproperReplacementError",
    "OutOfScopeError",
)

import typing


class MQIndexError(Exception):
    """The base class for all exceptions raised by the package."""

    exit_code: typing.ClassVar[int] = 1


class InputError(MQIndexError):
    """Malformed or invalid input data."""

    exit_code: typing.ClassVar[int] = 2


class ParseError(InputError):
    """
    An exception that is raised if a textual notation cannot be
    parsed.

    Parameters
    ----------
    message : str
        Human readable description of the problem.
    text : str
        The text that was being parsed.
    position : Optional[int]
        Zero-based offset of the offending character or token,
        if known.
    """

    def __init__(
        self,
        message: str,
        text: str,
        position: typing.Optional[int] = None,
    ) -> None:
        where = "" if position is None else f" at position {position}"
        super().__init__(f"{message}{where}: {text!r}")
        self._text = text
        self._position = position

    @property
    def text(self) -> str:
        """The text that was being parsed."""
        return self._text

    @property
    def position(self) -> typing.Optional[int]:
        """Offset of the offending token, if known."""
        return self._position


class UnknownSymbolError(InputError):
    """
    An exception that is raised if a word mentions a generator
    that is not part of the generating set at hand.

    Parameters
    ----------
    symbol : str
        The unknown generator name.
    """

    def __init__(self, symbol: str) -> None:
        super().__init__(f"Unknown generator symbol {symbol!r}.")
        self._symbol = symbol

    @property
    def symbol(self) -> str:
        """The unknown generator name."""
        return self._symbol


class DimensionMismatchError(InputError):
    pass


class NotPrimeError(InputError):
    def __init__(self, modulus: int) -> None:
        super().__init__(f"Modulus {modulus} is not a prime.")
        self.modulus = modulus


class InvalidIdError(InputError):
    """A crossing id, relator index or tangle position is out of range."""


class ConfigurationError(InputError):
    pass


class InconsistencyError(MQIndexError):
    """
    An internal invariant was violated, for example a lower bound
    exceeding an upper bound. This always signals an unsound input
    certificate or a defect.
    """

    exit_code: typing.ClassVar[int] = 3


class HypothesisError(MQIndexError):
    """A mathematical precondition of an operation does not hold."""

    exit_code: typing.ClassVar[int] = 4


class NullHomologyError(HypothesisError):
    """
    An exception that is raised if a relator or a witness word is
    required to be null-homologous but is not.

    Parameters
    ----------
    failures : Sequence[Tuple[str, str]]
        Pairs of (word, side) naming every failed check, where side
        describes the group in which the word had to vanish in H_1.
    """

    def __init__(
        self,
        failures: typing.Sequence[typing.Tuple[str, str]],
    ) -> None:
        described = "; ".join(
            f"{word!r} is not null-homologous in {side}"
            for word, side in failures
        )
        super().__init__(f"Null-homology check failed: {described}.")
        self._failures = tuple(failures)

    @property
    def failures(self) -> typing.Tuple[typing.Tuple[str, str], ...]:
        """Every failed (word, side) pair."""
        return self._failures


class AbelianizationMismatchError(HypothesisError):
    pass


class GeneratorMismatchError(HypothesisError):
    pass


class ImproperReplacementError(HypothesisError):
    pass


class OutOfScopeError(HypothesisError):
    pass
