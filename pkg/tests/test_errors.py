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
from __future__ import annotations

import typing

import pytest

from mqindex import errors


@pytest.mark.parametrize(
    "error, code",
    [
        (errors.MQIndexError, 1),
        (errors.InputError, 2),
        (errors.ParseError, 2),
        (errors.UnknownSymbolError, 2),
        (errors.DimensionMismatchError, 2),
        (errors.NotPrimeError, 2),
        (errors.InvalidIdError, 2),
        (errors.ConfigurationError, 2),
        (errors.InconsistencyError, 3),
        (errors.HypothesisError, 4),
        (errors.NullHomologyError, 4),
        (errors.AbelianizationMismatchError, 4),
        (errors.GeneratorMismatchError, 4),
        (errors.ImproperReplacementError, 4),
        (errors.OutOfScopeError, 4),
    ],
)
def test_exit_codes(error: typing.Type[errors.MQIndexError], code: int) -> None:
    assert error.exit_code == code
    assert issubclass(error, errors.MQIndexError)


def test_parse_error() -> None:
    error = errors.ParseError("Unexpected token", "x y ^", 4)
    assert str(error) == "Unexpected token at position 4: 'x y ^'"
    assert error.text == "x y ^"
    assert error.position == 4
    assert str(errors.ParseError("Empty", "")) == "Empty: ''"


def test_unknown_symbol() -> None:
    error = errors.UnknownSymbolError("z")
    assert error.symbol == "z"
    assert "'z'" in str(error)


def test_null_homology_failures() -> None:
    error = errors.NullHomologyError([("x", "G"), ("y y", "G'")])
    assert error.failures == (("x", "G"), ("y y", "G'"))
    assert str(error) == (
        "Null-homology check failed: 'x' is not null-homologous in G; "
        "'y y' is not null-homologous in G'."
    )


def test_not_prime() -> None:
    assert errors.NotPrimeError(6).modulus == 6
