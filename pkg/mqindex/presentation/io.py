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
JSON documents for presentations.

The document has exactly two fields, in this order: ``generators``
(list of names) and ``relators`` (list of words in token syntax).
Generator order is significant and preserved.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "presentation_document",
    "presentation_from_document",
    "dump_presentation",
    "load_presentation",
    "load_document",
)

import json
import typing

from mqindex import errors
from mqindex.presentation import presentation as presentation_


def presentation_document(
    presentation: presentation_.Presentation,
) -> typing.Dict[str, typing.Any]:
    return {
        "generators": list(presentation.generators),
        "relators": [str(relator) for relator in presentation.relators],
    }


def presentation_from_document(
    document: typing.Any, source: str = "<document>"
) -> presentation_.Presentation:
    """
    Raises
    ------
    errors.ParseError
        If a field is missing or has the wrong shape.
    """
    if not isinstance(document, dict):
        raise errors.ParseError("Presentation document must be an object", source)

    generators = document.get("generators")
    relators = document.get("relators", [])
    if not isinstance(generators, list) or not all(isinstance(g, str) for g in generators):
        raise errors.ParseError("Field 'generators' must be a list of names", source)
    if not isinstance(relators, list) or not all(isinstance(r, str) for r in relators):
        raise errors.ParseError("Field 'relators' must be a list of words", source)

    return presentation_.Presentation(generators, relators)


def load_document(text: str) -> typing.Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise errors.ParseError(f"Invalid JSON ({exc.msg})", text, exc.pos) from None


def dump_presentation(presentation: presentation_.Presentation) -> str:
    return json.dumps(presentation_document(presentation), indent=2) + "\n"


def load_presentation(text: str) -> presentation_.Presentation:
    return presentation_from_document(load_document(text), text)
