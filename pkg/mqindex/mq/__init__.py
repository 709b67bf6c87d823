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
"""Normal generating witnesses, index intervals and move costs."""
from __future__ import annotations

__all__: typing.Sequence[str] = (
    "NormalGeneratorWitness",
    "Provenance",
    "Status",
    "transfer_ngs",
    "rank_bound_ngs",
    "RankBoundCertificate",
    "verify_ngs",
    "NecessaryOnly",
    "BoundedSearch",
    "Completion",
    "MQInterval",
    "mq_interval",
    "presentation_distance_bounds",
    "MoveCatalogEntry",
    "DEFAULT_CATALOG",
    "gordian_lower_bound",
)

import typing

from mqindex.mq.catalog import DEFAULT_CATALOG
from mqindex.mq.catalog import MoveCatalogEntry
from mqindex.mq.catalog import gordian_lower_bound
from mqindex.mq.interval import MQInterval
from mqindex.mq.interval import mq_interval
from mqindex.mq.interval import presentation_distance_bounds
from mqindex.mq.rank_bound import RankBoundCertificate
from mqindex.mq.rank_bound import rank_bound_ngs
from mqindex.mq.transfer import transfer_ngs
from mqindex.mq.verify import BoundedSearch
from mqindex.mq.verify import Completion
from mqindex.mq.verify import NecessaryOnly
from mqindex.mq.verify import verify_ngs
from mqindex.mq.witness import NormalGeneratorWitness
from mqindex.mq.witness import Provenance
from mqindex.mq.witness import Status
