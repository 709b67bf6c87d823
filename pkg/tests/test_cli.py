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

import json
import pathlib
import typing

import pytest
from click import testing

from mqindex import __about__
from mqindex import cli
from mqindex import errors
from mqindex import report
from mqindex.knots import search

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


@pytest.fixture(name="runner")
def _runner() -> testing.CliRunner:
    return testing.CliRunner()


@pytest.fixture(name="invoke")
def _invoke(runner: testing.CliRunner) -> typing.Callable[..., testing.Result]:
    def invoke(*args: str, input: typing.Optional[str] = None) -> testing.Result:
        return runner.invoke(cli.main, list(args), input=input)

    return invoke


def _write(path: pathlib.Path, document: typing.Mapping[str, typing.Any]) -> str:
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


@pytest.fixture(name="trefoil_file")
def _trefoil_file(tmp_path: pathlib.Path) -> str:
    return _write(
        tmp_path / "trefoil.json",
        {"generators": ["x", "y"], "relators": ["x y x y^-1 x^-1 y^-1"]},
    )


@pytest.fixture(name="unknot_file")
def _unknot_file(tmp_path: pathlib.Path) -> str:
    return _write(tmp_path / "unknot.json", {"generators": ["x", "y"], "relators": ["x y^-1"]})


def test_version(invoke: typing.Callable[..., testing.Result]) -> None:
    result = invoke("--version")
    assert result.exit_code == 0
    assert __about__.__version__ in result.output


class TestInvariants:
    def test_fixture(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke("invariants", "--fixture", "trefoil")
        assert result.exit_code == 0, result.output
        assert "Alexander polynomial: 1 - t + t^2" in result.output
        assert "determinant: 3" in result.output

    def test_json_from_stdin(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke("--json", "invariants", "--format", "pd", input=TREFOIL_PD)
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert document["input"] == f"pd: {TREFOIL_PD}"
        assert document["determinant"] == 3
        assert document["mq_interval"]["lower"] == 1

    def test_montesinos(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke(
            "--json", "invariants", "--format", "montesinos", input="K(4/3, -1/4, 2/7)"
        )
        assert result.exit_code == 0, result.output
        assert json.loads(result.output)["u_q_upper"]["value"] == 1

    def test_parse_error(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke("invariants", "--format", "braid", input="s1 s")
        assert result.exit_code == 2
        assert "error:" in result.output

    def test_link_is_out_of_scope(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke("invariants", "--format", "braid", input="s1 s1")
        assert result.exit_code == 2

    def test_bad_configuration(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke("--budget-tietze", "0", "invariants", "--fixture", "trefoil")
        assert result.exit_code == 2
        assert "tietze_budget must be positive" in result.output

    def test_inconsistency(
        self,
        invoke: typing.Callable[..., testing.Result],
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        def build_report(*args: typing.Any, **kwargs: typing.Any) -> typing.NoReturn:
            raise errors.InconsistencyError("lower bound 2 exceeds upper bound 1")

        monkeypatch.setattr(report, "build_report", build_report)
        result = invoke("invariants", "--fixture", "trefoil")
        assert result.exit_code == 3
        assert "error: lower bound 2 exceeds upper bound 1" in result.output


class TestGroup:
    def test_abelianize(
        self, invoke: typing.Callable[..., testing.Result], trefoil_file: str
    ) -> None:
        result = invoke("group", "abelianize", trefoil_file)
        assert result.exit_code == 0
        assert result.output.strip() == "Z"

    def test_abelianize_json(
        self, invoke: typing.Callable[..., testing.Result], tmp_path: pathlib.Path
    ) -> None:
        path = _write(
            tmp_path / "g.json",
            {"generators": ["x", "y"], "relators": ["x x", "y^-1 y^-1 y^-1 y^-1"]},
        )
        document = json.loads(invoke("--json", "group", "abelianize", path).output)
        assert document == {"abelianization": "Z/2 + Z/4", "free_rank": 0, "torsion": [2, 4]}

    def test_nullhom(
        self, invoke: typing.Callable[..., testing.Result], trefoil_file: str
    ) -> None:
        result = invoke("group", "nullhom", trefoil_file, "x y^-1", "x")
        assert result.exit_code == 0
        assert result.output.splitlines() == ["x y^-1: yes", "x: no"]

    def test_replace(
        self, invoke: typing.Callable[..., testing.Result], trefoil_file: str
    ) -> None:
        result = invoke(
            "--json", "group", "replace", trefoil_file, "--index", "0", "--relator", "x y^-1"
        )
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert document["presentation"]["relators"] == ["x y^-1"]
        assert document["replaced"]["old"] == "x y x y^-1 x^-1 y^-1"

    def test_replace_not_null_homologous(
        self, invoke: typing.Callable[..., testing.Result], trefoil_file: str
    ) -> None:
        result = invoke("group", "replace", trefoil_file, "--index", "0", "--relator", "x")
        assert result.exit_code == 4
        assert invoke(
            "group", "replace", trefoil_file, "--index", "0", "--relator", "x", "--unchecked"
        ).exit_code == 0

    def test_replace_bad_index(
        self, invoke: typing.Callable[..., testing.Result], trefoil_file: str
    ) -> None:
        result = invoke("group", "replace", trefoil_file, "--index", "3", "--relator", "x y^-1")
        assert result.exit_code == 2

    def test_rank_bound_transfer_verify(
        self,
        invoke: typing.Callable[..., testing.Result],
        tmp_path: pathlib.Path,
        trefoil_file: str,
        unknot_file: str,
    ) -> None:
        witness = str(tmp_path / "witness.json")
        result = invoke("group", "rank-bound", trefoil_file, "-o", witness)
        assert result.exit_code == 0, result.output
        assert result.output.splitlines()[0] == "a <= 1 (r=2, h=1)"

        moved = str(tmp_path / "moved.json")
        result = invoke(
            "--json", "group", "transfer", trefoil_file, unknot_file, witness, "-o", moved
        )
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert document["size"] == 2
        assert document["provenance"] == "transfer"

        result = invoke("group", "verify", moved, "--strategy", "necessary")
        assert result.exit_code == 0
        assert result.output.strip() == "necessary-checks-passed"

    def test_transfer_mismatch(
        self,
        invoke: typing.Callable[..., testing.Result],
        tmp_path: pathlib.Path,
        trefoil_file: str,
    ) -> None:
        witness = str(tmp_path / "witness.json")
        invoke("group", "rank-bound", trefoil_file, "-o", witness)
        document = {"generators": ["x", "y"], "relators": ["x", "y y"]}
        other = _write(tmp_path / "other.json", document)
        result = invoke("group", "transfer", trefoil_file, other, witness)
        assert result.exit_code == 4

    def test_distance(
        self,
        invoke: typing.Callable[..., testing.Result],
        trefoil_file: str,
        unknot_file: str,
    ) -> None:
        result = invoke("group", "distance", trefoil_file, unknot_file)
        assert result.exit_code == 0, result.output
        assert result.output.splitlines() == [
            "a(G) in [1, 1], a(G') in [0, 0]",
            "1 <= d(G, G') <= 1",
        ]


class TestMoves:
    def test_list(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke("--json", "moves", "list")
        assert result.exit_code == 0
        costs = {entry["name"]: entry["cost"] for entry in json.loads(result.output)["moves"]}
        assert costs["sharp"] == 3

    def test_apply_crossing_change(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke(
            "--json", "moves", "apply", "--move", "cc", "--crossing", "1", input=TREFOIL_PD
        )
        assert result.exit_code == 0, result.output
        document = json.loads(result.output)
        assert document["relator_replacement"]["index"] == 0
        assert document["relator_replacement"]["null_homologous_both_ways"]
        assert document["recognition"] != "nontrivial"

    def test_apply_virtualization(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke(
            "--json",
            "moves",
            "apply",
            "--move",
            "virtualization",
            "--crossing",
            "2",
            input=TREFOIL_PD,
        )
        assert result.exit_code == 0, result.output
        replacement = json.loads(result.output)["relator_replacement"]
        assert replacement["new"].endswith("^-1")
        assert len(replacement["new"].split()) == 2

    def test_apply_unknown_crossing(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke("moves", "apply", "--move", "cc", "--crossing", "9", input=TREFOIL_PD)
        assert result.exit_code == 2


class TestSearch:
    def test_found(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke("search", "-m", "0", "-n", "1", input=TREFOIL_PD)
        assert result.exit_code == 0, result.output
        lines = result.output.splitlines()
        assert lines[0].startswith("(0, 1)-unknotting of ")
        assert lines[-1] == "1 <= m <= a <= 1"

    def test_not_found(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke("--json", "search", "-m", "0", "-n", "0", input=TREFOIL_PD)
        assert result.exit_code == 0
        assert json.loads(result.output) == {"certificate": None, "nakanishi_lower": 1}

    def test_negative_bound(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke("search", "--max-virtualizations=-1", input=TREFOIL_PD)
        assert result.exit_code == 2

    def test_certificate_that_does_not_replay(
        self,
        invoke: typing.Callable[..., testing.Result],
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        monkeypatch.setattr(search, "replay", lambda certificate: False)
        result = invoke("search", "-m", "0", "-n", "1", input=TREFOIL_PD)
        assert result.exit_code == 3
        assert "does not replay" in result.output


class TestSelftest:
    def test_single_fixture(self, invoke: typing.Callable[..., testing.Result]) -> None:
        result = invoke("selftest", "--fixture", "trefoil")
        assert result.exit_code == 0, result.output
        assert ", 0 failed, " in result.output.splitlines()[-1]

    def test_unknown_fixture(self, invoke: typing.Callable[..., testing.Result]) -> None:
        assert invoke("selftest", "--fixture", "5_1").exit_code == 2
