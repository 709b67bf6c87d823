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

__all__: typing.Sequence[str] = (
    "__author__",
    "__maintainer__",
    "__copyright__",
    "__email__",
    "__license__",
    "__version__",
    "Version",
    "version",
)

import re
import typing

__author__: typing.Final[str] = "INSPXRXD"
__maintainer__: typing.Final[str] = "INSPXRXD"
__copyright__: typing.Final[str] = "2024-present, INSPXRXD"
__email__: typing.Final[str] = "inspxrxd@gmail.com"
__license__: typing.Final[str] = "MIT"
__version__: typing.Final[str] = "0.1a0"

_version_pattern: typing.Pattern[str] = re.compile(
    r"^(?P<major>\d+)\.(?P<minor>\d+)(?:(?P<stage>a|b|rc)(?P<serial>\d+))?$"
)


class Version(typing.NamedTuple):
    """
    Version of the project in the `major.minor[stage serial]` form,
    for example ``0.1a0`` or ``1.2``. The stage is None for final
    releases.
    """

    major: int
    minor: int
    serial: int = 0
    stage: typing.Optional[typing.Literal["a", "b", "rc"]] = None

    @classmethod
    def from_str(cls, version_str: str) -> Version:
        match = _version_pattern.match(version_str)
        if match is None:
            raise ValueError(f"Invalid version string: {version_str}")

        major, minor, stage, serial = match.groups()
        return cls(
            major=int(major),
            minor=int(minor),
            serial=0 if serial is None else int(serial),
            stage=stage,
        )

    def is_final(self) -> bool:
        return self.stage is None

    def __str__(self) -> str:
        base = f"{self.major}.{self.minor}"
        if self.stage is None:
            return base

        return f"{base}{self.stage}{self.serial}"


version: typing.Final[Version] = Version.from_str(__version__)
"""Current version of the project."""
