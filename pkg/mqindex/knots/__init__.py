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
"""Knot and link notations, local moves, tangles and Montesinos links."""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "PDCode",
    "parse_pd",
    "wirtinger_from_pd",
    "GaussCode",
    "parse_gauss",
    "wirtinger_from_gauss",
    "gauss_from_pd",
    "BraidWord",
    "parse_braid",
    "pd_from_braid",
    "artin_presentation",
    "WirtingerPresentation",
    "crossing_change",
    "virtualize",
    "crossing_change_relator_delta",
    "virtualize_relator_delta",
    "RationalTangle",
    "EndpointPairing",
    "tangle_fraction",
    "cf_from_fraction",
    "pairing",
    "is_proper_replacement",
    "MontesinosDescriptor",
    "parse_montesinos",
    "montesinos_equiv",
    "replace_tangle",
    "TwoBridgeLink",
    "TwoBridgeKind",
    "two_bridge_classify",
    "pd_for_montesinos",
    "rational_unknotting_certificate",
    "UnknottabilityCertificate",
    "unknottability_search",
    "replay",
    "Recognition",
    "recognize_unknot",
)

import typing

from mqindex.knots.braid import BraidWord
from mqindex.knots.braid import artin_presentation
from mqindex.knots.braid import parse_braid
from mqindex.knots.braid import pd_from_braid
from mqindex.knots.gauss import GaussCode
from mqindex.knots.gauss import gauss_from_pd
from mqindex.knots.gauss import parse_gauss
from mqindex.knots.gauss import wirtinger_from_gauss
from mqindex.knots.montesinos import MontesinosDescriptor
from mqindex.knots.montesinos import TwoBridgeKind
from mqindex.knots.montesinos import TwoBridgeLink
from mqindex.knots.montesinos import montesinos_equiv
from mqindex.knots.montesinos import parse_montesinos
from mqindex.knots.montesinos import pd_for_montesinos
from mqindex.knots.montesinos import rational_unknotting_certificate
from mqindex.knots.montesinos import replace_tangle
from mqindex.knots.montesinos import two_bridge_classify
from mqindex.knots.moves import crossing_change
from mqindex.knots.moves import crossing_change_relator_delta
from mqindex.knots.moves import virtualize
from mqindex.knots.moves import virtualize_relator_delta
from mqindex.knots.pd import PDCode
from mqindex.knots.pd import parse_pd
from mqindex.knots.pd import wirtinger_from_pd
from mqindex.knots.recognition import Recognition
from mqindex.knots.recognition import recognize_unknot
from mqindex.knots.search import UnknottabilityCertificate
from mqindex.knots.search import replay
from mqindex.knots.search import unknottability_search
from mqindex.knots.tangles import EndpointPairing
from mqindex.knots.tangles import RationalTangle
from mqindex.knots.tangles import cf_from_fraction
from mqindex.knots.tangles import is_proper_replacement
from mqindex.knots.tangles import pairing
from mqindex.knots.tangles import tangle_fraction
from mqindex.knots.wirtinger import WirtingerPresentation
