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
Immutability support for domain values.

Instances of classes built by `FrozenMeta` are sealed as soon as the
constructor returns: any later attempt to set or delete an attribute
raises `FrozenObjectError`. The classes themselves are sealed right
after their body is executed.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "Frozen",
    "FrozenMeta",
    "FrozenError",
    "FrozenObjectError",
)

import sys
import typing

from mqindex import errors

SEALED: typing.Final[str] = sys.intern("__sealed__")
"""
Name of the instance (and class) level flag telling whether the
object has finished its construction. Once it is set, the object no
longer accepts attribute assignment or deletion.
"""

THAWED: typing.Final[str] = sys.intern("__thawed__")
"""
Name of the class attribute listing attribute names that stay
writable after sealing. Value objects keep it empty; it exists for
lazily filled caches that cannot go through `functools.cached_property`.
"""


class FrozenError(errors.MQIndexError):
    """The base class for all exceptions related to this module."""
    pass


class FrozenObjectError(FrozenError):
    """
    An exception that is raised if an attempt is made to
    modify a frozen object.

    Parameters
    ----------
    obj : typing.Any
        A frozen object that was attempted to be modified.
    """

    def __init__(self, obj: typing.Any) -> None:
        super().__init__(f"Object {obj!r} is frozen.")
        self._obj = obj

    @property
    def obj(self) -> typing.Any:
        """A frozen object that was attempted to be modified."""
        return self._obj


def _is_writable(ref: typing.Any, key: str) -> bool:
    if not ref.__dict__.get(SEALED, False):
        return True

    return key in getattr(type(ref), THAWED, frozenset())


def _sealed_setattr(ref: typing.Any, key: str, value: typing.Any) -> None:
    if not _is_writable(ref, key):
        raise FrozenObjectError(ref)

    object.__setattr__(ref, key, value)


def _sealed_delattr(ref: typing.Any, key: str) -> None:
    if not _is_writable(ref, key):
        raise FrozenObjectError(ref)

    object.__delattr__(ref, key)


class FrozenMeta(type):
    """
    Metaclass sealing both the class after its creation and every
    instance after its `__init__` has run.
    """

    def __new__(
        mcs: typing.Type[FrozenMeta],
        name: str,
        bases: typing.Tuple[typing.Type[typing.Any], ...],
        attrs: typing.Dict[str, typing.Any],
    ) -> typing.Any:
        thawed = attrs.pop(THAWED, frozenset())
        if not isinstance(thawed, (set, frozenset)):
            raise ValueError(
                f"__thawed__ expected a set value, "
                f"but {type(thawed)}/{thawed} received."
            )

        attrs[THAWED] = frozenset(thawed)
        attrs["__setattr__"] = _sealed_setattr
        attrs["__delattr__"] = _sealed_delattr
        cls = super().__new__(mcs, name, bases, attrs)
        type.__setattr__(cls, SEALED, True)
        return cls

    def __call__(cls, *args: typing.Any, **kwargs: typing.Any) -> typing.Any:
        instance = super().__call__(*args, **kwargs)
        object.__setattr__(instance, SEALED, True)
        return instance

    # Changing a class attribute would silently change every
    # instance, so the class is sealed as well.
    def __setattr__(cls, key: str, value: typing.Any) -> None:
        if cls.__dict__.get(SEALED, False):
            raise FrozenObjectError(cls)

        type.__setattr__(cls, key, value)

    def __delattr__(cls, key: str) -> None:
        if cls.__dict__.get(SEALED, False):
            raise FrozenObjectError(cls)

        type.__delattr__(cls, key)


class Frozen(metaclass=FrozenMeta):
    """
    A class whose instances can be initialized in `__init__` and are
    read-only afterwards. Derived data may still be cached through
    `functools.cached_property`, which writes to the instance
    dictionary directly.
    """
    pass
