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

import pytest

from mqindex import errors
from mqindex import frozen
from mqindex import sentinel
from mqindex.mq import catalog
from mqindex.mq import interval


class TestCatalog:
    def test_default_costs(self) -> None:
        assert catalog.DEFAULT_CATALOG.costs() == {
            "cc": 1,
            "virtualization": 1,
            "sharp": 3,
            "rational": 1,
        }

    def test_lookup(self) -> None:
        entry = catalog.DEFAULT_CATALOG["cc"]
        assert entry.description == "crossing change"
        assert "welded" in entry.applicable_objects
        with pytest.raises(errors.InvalidIdError):
            catalog.DEFAULT_CATALOG["pass"]

    def test_register(self) -> None:
        moves = catalog.MoveCatalog().register("pass", 4, description="pass move")
        entry = moves["pass"]
        assert entry.relator_cost == 3
        assert len(moves) == 1
        assert list(moves) == [entry]
        with pytest.raises(errors.InputError, match="already registered"):
            moves.register("pass", 4)

    def test_register_leaves_the_catalog_unchanged(self) -> None:
        extended = catalog.DEFAULT_CATALOG.register("pass", 4)
        assert "pass" in extended
        assert "pass" not in catalog.DEFAULT_CATALOG
        assert len(extended) == len(catalog.DEFAULT_CATALOG) + 1
        assert list(extended)[:-1] == list(catalog.DEFAULT_CATALOG)

    def test_frozen(self) -> None:
        with pytest.raises(frozen.FrozenObjectError):
            catalog.DEFAULT_CATALOG.entries = ()  # type: ignore[misc]

    def test_value_equality(self) -> None:
        one = catalog.MoveCatalog().register("cc", 2)
        assert one == catalog.MoveCatalog([catalog.MoveCatalogEntry("cc", 2)])
        assert hash(one) == hash(catalog.MoveCatalog().register("cc", 2))

    @pytest.mark.parametrize(
        "strands, objects", [(1, ("classical",)), (2, ("spatial",))]
    )
    def test_invalid_entry(self, strands: int, objects: tuple) -> None:
        with pytest.raises(errors.InputError):
            catalog.MoveCatalogEntry("bad", strands, objects)


class TestGordianBounds:
    @pytest.mark.parametrize("move, expected", [("cc", 3), ("sharp", 1), ("rational", 3)])
    def test_lower_bound(self, move: str, expected: int) -> None:
        left = interval.MQInterval(3, 3)
        right = interval.MQInterval(0, 0)
        assert catalog.gordian_lower_bound(left, right, catalog.DEFAULT_CATALOG[move]) == expected

    def test_overlapping_intervals(self) -> None:
        left = interval.MQInterval(1, sentinel.UNBOUNDED)
        right = interval.MQInterval(0, 2)
        assert catalog.gordian_lower_bound(left, right, catalog.DEFAULT_CATALOG["cc"]) == 0

    def test_unknotting_lower_bound(self) -> None:
        assert catalog.unknotting_lower_bound(
            interval.MQInterval(2, 2), catalog.DEFAULT_CATALOG["sharp"]
        ) == 1
