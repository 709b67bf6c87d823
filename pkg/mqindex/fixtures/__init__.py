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
Knot fixtures shipped with the package. Every record names its input
format, the diagram, where the diagram comes from and the values it
is expected to produce.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "Fixture",
    "FIXTURE_DIRECTORY",
    "fixture_names",
    "load_fixture",
    "all_fixtures",
)

import json
import pathlib
import typing

from mqindex import errors
from mqindex.domain import value_object

FIXTURE_DIRECTORY: typing.Final[pathlib.Path] = pathlib.Path(__file__).parent

FORMATS: typing.Final[typing.FrozenSet[str]] = frozenset(
    {"pd", "gauss", "braid", "montesinos", "presentation"}
)


class Fixture(value_object.ValueObject):
    """
    Parameters
    ----------
    name : str
        Table name of the knot.
    format : str
        One of ``pd``, ``gauss``, ``braid``, ``montesinos`` or
        ``presentation``.
    text : str
        The diagram in that format.
    provenance : str
        Where the diagram comes from.
    expected : Mapping[str, Any]
        Expected report values, keyed like the structured report.
    cross_check : Tuple[str, str], optional
        A second diagram of the same knot as ``(format, text)``. Both
        diagrams must give the same invariants.
    """

    __value_fields__ = ("name", "format", "text")

    def __init__(
        self,
        name: str,
        format: str,
        text: str,
        provenance: str,
        expected: typing.Mapping[str, typing.Any],
        cross_check: typing.Optional[typing.Tuple[str, str]] = None,
    ) -> None:
        for checked, source in ((format, text), cross_check or (format, text)):
            if checked not in FORMATS:
                raise errors.ParseError(
                    f"Fixture {name!r} has unknown format {checked!r}", source
                )
        self.name = name
        self.format = format
        self.text = text
        self.provenance = provenance
        self.expected = dict(expected)
        self.cross_check = None if cross_check is None else tuple(cross_check)


def _from_document(document: typing.Any, source: str) -> Fixture:
    if not isinstance(document, dict):
        raise errors.ParseError(f"Fixture {source} must be an object", source)
    try:
        cross_check = document.get("cross_check")
        return Fixture(
            document["name"],
            document["format"],
            document["input"],
            document.get("provenance", ""),
            document.get("expected", {}),
            None if cross_check is None else (cross_check["format"], cross_check["input"]),
        )
    except KeyError as exc:
        raise errors.ParseError(f"Fixture {source} lacks field {exc.args[0]!r}", source) from None


def fixture_names() -> typing.List[str]:
    return sorted(path.stem for path in FIXTURE_DIRECTORY.glob("*.json"))


def load_fixture(name: str) -> Fixture:
    """
    Raises
    ------
    errors.InvalidIdError
        If no fixture has that name.
    errors.ParseError
        If the file is malformed.
    """
    path = FIXTURE_DIRECTORY / f"{name}.json"
    if not path.is_file():
        raise errors.InvalidIdError(f"No fixture named {name!r}.")
    text = path.read_text(encoding="utf-8")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise errors.ParseError(
            f"Fixture {name} is not valid JSON ({exc.msg})", text, exc.pos
        ) from None
    return _from_document(document, name)


def all_fixtures() -> typing.List[Fixture]:
    return [load_fixture(name) for name in fixture_names()]
