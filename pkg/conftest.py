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

import random

import pytest

from mqindex.knots import braid
from mqindex.knots import gauss
from mqindex.knots import montesinos
from mqindex.knots import pd
from mqindex.presentation import presentation

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT_PD = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
GRANNY_BRAID = "s1 s1 s1 s2 s2 s2"
SEED = 20240229


@pytest.fixture(name="rng")
def _rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture(name="trefoil_pd")
def _trefoil_pd() -> pd.PDCode:
    return pd.parse_pd(TREFOIL_PD)


@pytest.fixture(name="figure_eight_pd")
def _figure_eight_pd() -> pd.PDCode:
    return pd.parse_pd(FIGURE_EIGHT_PD)


@pytest.fixture(name="trefoil_gauss")
def _trefoil_gauss(trefoil_pd: pd.PDCode) -> gauss.GaussCode:
    return gauss.gauss_from_pd(trefoil_pd)


@pytest.fixture(name="granny_braid")
def _granny_braid() -> braid.BraidWord:
    return braid.parse_braid(GRANNY_BRAID)


@pytest.fixture(name="trefoil_group")
def _trefoil_group() -> presentation.Presentation:
    return presentation.Presentation(["x", "y"], ["x y x y^-1 x^-1 y^-1"])


@pytest.fixture(name="free_group")
def _free_group() -> presentation.Presentation:
    return presentation.Presentation(["x", "y"])


@pytest.fixture(name="montesinos_12a_504")
def _montesinos_12a_504() -> montesinos.MontesinosDescriptor:
    return montesinos.parse_montesinos("K(2/3, 10/3, -3/5)")
