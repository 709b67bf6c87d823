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
Command-line front end.

Structured output (``--json``) goes to stdout as one document per
invocation; logs go to stderr. Errors exit with the code their class
declares: 2 for bad input, 3 for contradicting certificates and 4 for
an unmet hypothesis.
"""
from __future__ import annotations

__all__: typing.Sequence[str] = ("main",)

import functools
import json
import logging
import typing

import click

from mqindex import __about__
from mqindex import config as config_
from mqindex import errors
from mqindex import fixtures as fixtures_
from mqindex import report as report_
from mqindex import selftest as selftest_
from mqindex.alexander import ideals
from mqindex.knots import gauss
from mqindex.knots import moves as moves_
from mqindex.knots import pd as pd_
from mqindex.knots import recognition
from mqindex.knots import search as search_
from mqindex.knots import wirtinger
from mqindex.mq import catalog
from mqindex.mq import interval as interval_
from mqindex.mq import rank_bound as rank_bound_
from mqindex.mq import transfer as transfer_
from mqindex.mq import verify as verify_
from mqindex.mq import witness as witness_
from mqindex.presentation import io
from mqindex.presentation import presentation as presentation_

logger = logging.getLogger(__name__)

_F = typing.TypeVar("_F", bound=typing.Callable[..., typing.Any])

_LOG_LEVELS: typing.Final[typing.Tuple[int, ...]] = (logging.WARNING, logging.INFO, logging.DEBUG)


def _reports_errors(command: _F) -> _F:
    @functools.wraps(command)
    def wrapper(*args: typing.Any, **kwargs: typing.Any) -> typing.Any:
        try:
            return command(*args, **kwargs)
        except errors.MQIndexError as exc:
            logger.debug("%s failed", command.__name__, exc_info=True)
            click.echo(f"error: {exc}", err=True)
            click.get_current_context().exit(exc.exit_code)

    return typing.cast(_F, wrapper)


def _emit(
    configuration: config_.RunConfiguration,
    document: typing.Mapping[str, typing.Any],
    lines: typing.Iterable[str],
) -> None:
    if configuration.structured:
        click.echo(json.dumps(document, indent=2))
    else:
        for line in lines:
            click.echo(line)


def _read_presentation(path: str) -> presentation_.Presentation:
    with open(path, encoding="utf-8") as stream:
        return io.load_presentation(stream.read())


def _read_witness(path: str) -> witness_.NormalGeneratorWitness:
    with open(path, encoding="utf-8") as stream:
        return witness_.load_witness(stream.read())


def _write_witness(
    witness: witness_.NormalGeneratorWitness, output: typing.Optional[str]
) -> None:
    if output is not None:
        with open(output, "w", encoding="utf-8") as stream:
            stream.write(witness_.dump_witness(witness))
        logger.info("Wrote witness to %s", output)


def _witness_lines(witness: witness_.NormalGeneratorWitness) -> typing.List[str]:
    return [
        f"presentation: {witness.presentation}",
        f"size: {len(witness)}",
        f"status: {witness.status.value}",
        *(f"  {word}" for word in witness.words),
    ]


_input_option = click.option(
    "--input",
    "stream",
    type=click.File("r", encoding="utf-8"),
    default="-",
    show_default=True,
    help="File to read the diagram from, or - for stdin.",
)


def _format_option(choices: typing.Sequence[str] = report_.FORMATS) -> typing.Callable[[_F], _F]:
    return click.option(
        "--format",
        "format_",
        type=click.Choice(list(choices)),
        default="pd",
        show_default=True,
        help="Notation of the input.",
    )


def _int_option(
    *names: str, default: int, help: typing.Optional[str] = None
) -> typing.Callable[[_F], _F]:
    return click.option(*names, type=int, default=default, show_default=True, help=help)


@click.group()
@click.version_option(__about__.__version__, prog_name="mqindex")
@click.option("-v", "--verbose", count=True, help="Log more (repeat for debug output).")
@click.option("--json", "structured", is_flag=True, help="Print one JSON document.")
@_int_option("--budget-tietze", default=config_.DEFAULT_TIETZE_BUDGET)
@_int_option("--budget-kb", default=config_.DEFAULT_KB_MAX_STEPS, help="Completion step cap.")
@_int_option("--search-depth", default=config_.DEFAULT_SEARCH_DEPTH)
@_int_option("--search-width", default=config_.DEFAULT_SEARCH_WIDTH)
@_int_option("--rational-bound", default=config_.DEFAULT_RATIONAL_BOUND)
@_int_option("--seed", default=config_.DEFAULT_SEED)
@click.pass_context
@_reports_errors
def main(
    ctx: click.Context,
    verbose: int,
    structured: bool,
    budget_tietze: int,
    budget_kb: int,
    search_depth: int,
    search_width: int,
    rational_bound: int,
    seed: int,
) -> None:
    """Bounds on the Ma-Qiu and Nakanishi indices of groups and knots."""
    logging.basicConfig(
        level=_LOG_LEVELS[min(verbose, len(_LOG_LEVELS) - 1)],
        format="%(levelname)s %(name)s: %(message)s",
    )
    ctx.obj = config_.RunConfiguration(
        tietze_budget=budget_tietze,
        kb_max_steps=budget_kb,
        search_depth=search_depth,
        search_width=search_width,
        rational_bound=rational_bound,
        structured=structured,
        seed=seed,
    )


@main.command()
@_input_option
@_format_option()
@click.option("--fixture", help="Use a shipped fixture instead of --input.")
@click.pass_obj
@_reports_errors
def invariants(
    configuration: config_.RunConfiguration,
    stream: typing.TextIO,
    format_: str,
    fixture: typing.Optional[str],
) -> None:
    """Alexander data, index bounds and the unknotting chain of a knot."""
    if fixture is not None:
        record = fixtures_.load_fixture(fixture)
        text, format_ = record.text, record.format
    else:
        text = stream.read()
    source = report_.parse_source(text, format_)
    descriptor = f"{format_}: {str(source) or 'empty diagram'}"
    report = report_.build_report(source, configuration, descriptor)
    _emit(configuration, report.document(), report.lines())


@main.group()
def group() -> None:
    """Operations on presentation files."""


@group.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
@_reports_errors
def abelianize(configuration: config_.RunConfiguration, path: str) -> None:
    presentation = _read_presentation(path)
    structure = presentation.abelianization
    _emit(
        configuration,
        {
            "abelianization": str(structure),
            "free_rank": structure.free_rank,
            "torsion": list(structure.torsion_factors),
        },
        [str(structure)],
    )


@group.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.argument("words", nargs=-1, required=True)
@click.pass_obj
@_reports_errors
def nullhom(
    configuration: config_.RunConfiguration, path: str, words: typing.Sequence[str]
) -> None:
    """Whether each word maps to zero in H_1."""
    presentation = _read_presentation(path)
    answers = [(word, presentation_.is_null_homologous(word, presentation)) for word in words]
    _emit(
        configuration,
        {"words": [{"word": word, "null_homologous": answer} for word, answer in answers]},
        [f"{word}: {'yes' if answer else 'no'}" for word, answer in answers],
    )


@group.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--index", type=int, required=True, help="0-based relator position.")
@click.option("--relator", required=True, help="The new relator.")
@click.option("--unchecked", is_flag=True, help="Skip the null-homology checks.")
@click.pass_obj
@_reports_errors
def replace(
    configuration: config_.RunConfiguration,
    path: str,
    index: int,
    relator: str,
    unchecked: bool,
) -> None:
    """Replace one relator by a null-homologous one."""
    presentation = _read_presentation(path)
    result = presentation_.replace_relator_at(
        presentation, index, relator, enforce_null_homologous=not unchecked
    )
    _emit(
        configuration,
        {
            "presentation": io.presentation_document(result),
            "replaced": {
                "index": index,
                "old": str(presentation.relators[index]),
                "new": str(result.relators[index]),
            },
        },
        [str(result)],
    )


@group.command()
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.argument("target", type=click.Path(exists=True, dir_okay=False))
@click.argument("witness", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Witness file to write.")
@click.pass_obj
@_reports_errors
def transfer(
    configuration: config_.RunConfiguration,
    source: str,
    target: str,
    witness: str,
    output: typing.Optional[str],
) -> None:
    """Move a normal generating set of [G, G] to [G', G']."""
    moved = transfer_.transfer_ngs(
        _read_presentation(source), _read_presentation(target), _read_witness(witness)
    )
    _write_witness(moved, output)
    _emit(configuration, witness_.witness_document(moved), _witness_lines(moved))


@group.command("rank-bound")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Witness file to write.")
@click.pass_obj
@_reports_errors
def rank_bound(
    configuration: config_.RunConfiguration, path: str, output: typing.Optional[str]
) -> None:
    """A normal generating set of size r + h(h-3)/2."""
    presentation = _read_presentation(path)
    certificate = rank_bound_.rank_bound_ngs(presentation)
    _write_witness(certificate.witness, output)
    document = witness_.witness_document(certificate.witness)
    document["h"] = certificate.h
    _emit(
        configuration,
        document,
        [f"a <= {certificate.bound} (r={presentation.rank}, h={certificate.h})",
         *_witness_lines(certificate.witness)],
    )


_STRATEGIES: typing.Final[typing.Tuple[str, ...]] = ("necessary", "search", "completion")


@group.command("verify")
@click.argument("witness", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--strategy",
    type=click.Choice(list(_STRATEGIES)),
    default="completion",
    show_default=True,
)
@click.pass_obj
@_reports_errors
def verify_command(
    configuration: config_.RunConfiguration, witness: str, strategy: str
) -> None:
    """Check a witness file as far as the budgets allow."""
    loaded = _read_witness(witness)
    chosen: verify_.Strategy
    if strategy == "necessary":
        chosen = verify_.NecessaryOnly()
    elif strategy == "search":
        chosen = verify_.BoundedSearch(configuration.search_depth, configuration.search_width)
    else:
        chosen = verify_.Completion(configuration.completion_limits)
    checked = verify_.verify_witness(loaded, chosen)
    _emit(
        configuration,
        {"status": checked.status.value, "size": len(checked), "strategy": strategy},
        [checked.status.value],
    )


def _interval(
    presentation: presentation_.Presentation, configuration: config_.RunConfiguration
) -> interval_.MQInterval:
    try:
        lower: typing.Optional[int] = ideals.nakanishi_lower(presentation).value
    except errors.OutOfScopeError as exc:
        logger.info("No Nakanishi bound: %s", exc)
        lower = None
    return interval_.mq_interval(
        presentation, nakanishi_lower=lower, tietze_budget=configuration.tietze_budget
    )


@group.command()
@click.argument("left", type=click.Path(exists=True, dir_okay=False))
@click.argument("right", type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
@_reports_errors
def distance(configuration: config_.RunConfiguration, left: str, right: str) -> None:
    """Bounds on d(G, G'); |a(G) - a(G')| <= d(G, G')."""
    first, second = _read_presentation(left), _read_presentation(right)
    left_interval = _interval(first, configuration)
    right_interval = _interval(second, configuration)
    bounds = interval_.presentation_distance_bounds(
        first, second, left_interval, right_interval, configuration.tietze_budget
    )
    _emit(
        configuration,
        {
            "left": str(left_interval),
            "right": str(right_interval),
            "lower": bounds.lower,
            "upper": bounds.upper,
        },
        [
            f"a(G) in {left_interval}, a(G') in {right_interval}",
            f"{bounds.lower} <= d(G, G') <= {bounds.upper}",
        ],
    )


@main.group()
def moves() -> None:
    """Local moves on diagrams."""


@moves.command("list")
@click.pass_obj
@_reports_errors
def list_moves(configuration: config_.RunConfiguration) -> None:
    """The move catalog with the relator cost of each move."""
    entries = list(catalog.DEFAULT_CATALOG)
    _emit(
        configuration,
        {
            "moves": [
                {
                    "name": entry.name,
                    "description": entry.description,
                    "strands": entry.tangle_strands,
                    "cost": entry.relator_cost,
                    "objects": sorted(entry.applicable_objects),
                }
                for entry in entries
            ]
        },
        [
            f"{entry.name:<16} cost {entry.relator_cost}  "
            f"{entry.tangle_strands}-tangle  {', '.join(sorted(entry.applicable_objects))}"
            for entry in entries
        ],
    )


def _knot_code(stream: typing.TextIO, format_: str) -> typing.Union[pd_.PDCode, gauss.GaussCode]:
    source = report_.parse_source(stream.read(), format_)
    assert isinstance(source, (pd_.PDCode, gauss.GaussCode))
    return source


def _wirtinger(code: typing.Union[pd_.PDCode, gauss.GaussCode]) -> wirtinger.WirtingerPresentation:
    if isinstance(code, pd_.PDCode):
        return pd_.wirtinger_from_pd(code)
    return gauss.wirtinger_from_gauss(code)


@moves.command("apply")
@_input_option
@_format_option(("pd", "gauss"))
@click.option("--move", "move", type=click.Choice(["cc", "virtualization"]), required=True)
@click.option("--crossing", type=int, required=True, help="1-based crossing id.")
@click.pass_obj
@_reports_errors
def apply_move(
    configuration: config_.RunConfiguration,
    stream: typing.TextIO,
    format_: str,
    move: str,
    crossing: int,
) -> None:
    """Apply a move and show the one relator it replaces."""
    code = _knot_code(stream, format_)
    after_code: typing.Union[pd_.PDCode, gauss.GaussCode]
    if move == "virtualization":
        before_code = gauss.gauss_from_pd(code) if isinstance(code, pd_.PDCode) else code
        after_code = moves_.virtualize(before_code, crossing)
        before = _wirtinger(before_code)
        after = moves_.virtualize_relator_delta(before, crossing)
    else:
        after_code = moves_.crossing_change(code, crossing)
        before = _wirtinger(code)
        after = moves_.crossing_change_relator_delta(before, before.index_of(crossing))

    index = before.index_of(crossing)
    old, new = before.relators[index], after.relators[index]
    both_ways = presentation_.is_null_homologous(new, before) and presentation_.is_null_homologous(
        old, after
    )
    recognized = recognition.recognize_unknot(_wirtinger(after_code), configuration.tietze_budget)
    _emit(
        configuration,
        {
            "code": str(after_code),
            "move": move,
            "crossing": crossing,
            "relator_replacement": {
                "index": index,
                "old": str(old),
                "new": str(new),
                "null_homologous_both_ways": both_ways,
            },
            "recognition": recognized.value,
        },
        [
            f"code: {after_code or 'empty'}",
            f"relator {index}: {old} -> {new}",
            f"null-homologous both ways: {'yes' if both_ways else 'no'}",
            f"recognition: {recognized.value}",
        ],
    )


@main.command()
@_input_option
@_format_option(("pd", "gauss"))
@_int_option("--max-virtualizations", "-m", default=config_.DEFAULT_MAX_VIRTUALIZATIONS)
@_int_option("--max-crossing-changes", "-n", default=config_.DEFAULT_MAX_CROSSING_CHANGES)
@click.pass_obj
@_reports_errors
def search(
    configuration: config_.RunConfiguration,
    stream: typing.TextIO,
    format_: str,
    max_virtualizations: int,
    max_crossing_changes: int,
) -> None:
    """Look for an (m, n)-unknotting sequence; a <= m + n."""
    code = _knot_code(stream, format_)
    gauss_code = gauss.gauss_from_pd(code) if isinstance(code, pd_.PDCode) else code
    assert isinstance(gauss_code, gauss.GaussCode)
    certificate = search_.unknottability_search(
        gauss_code, max_virtualizations, max_crossing_changes
    )

    try:
        lower: typing.Optional[int] = ideals.nakanishi_lower(_wirtinger(code)).value
    except errors.OutOfScopeError as exc:
        logger.info("No Nakanishi bound: %s", exc)
        lower = None

    if certificate is None:
        _emit(
            configuration,
            {"certificate": None, "nakanishi_lower": lower},
            [
                f"no ({max_virtualizations}, {max_crossing_changes})-unknotting found",
                f"m >= {lower}",
            ],
        )
        return

    if not search_.replay(certificate):
        raise errors.InconsistencyError(f"Certificate does not replay: {certificate}.")
    upper = len(certificate.moves)
    if lower is not None and lower > upper:
        raise errors.InconsistencyError(
            f"Nakanishi lower bound {lower} exceeds the certified bound {upper}."
        )
    _emit(
        configuration,
        {
            "certificate": {
                "moves": [str(move) for move in certificate.moves],
                "virtualizations": certificate.virtualizations,
                "crossing_changes": certificate.crossing_changes,
                "trace": list(certificate.trace),
            },
            "index_upper": upper,
            "nakanishi_lower": lower,
        },
        [str(certificate), *certificate.trace, f"{lower} <= m <= a <= {upper}"],
    )


@main.command()
@click.option("--fixture", "names", multiple=True, help="Only check these fixtures.")
@click.pass_obj
@_reports_errors
def selftest(configuration: config_.RunConfiguration, names: typing.Sequence[str]) -> None:
    """Check the shipped fixtures; exits 1 on any failure."""
    chosen = [fixtures_.load_fixture(name) for name in names] if names else None
    summary = selftest_.run_selftest(configuration, chosen)
    _emit(
        configuration,
        {
            "results": [
                {"name": r.name, "outcome": r.outcome.value, "detail": r.detail}
                for r in summary.results
            ],
            "passed": summary.passed,
        },
        summary.lines(),
    )
    if not summary.passed:
        click.get_current_context().exit(1)
