"""
Command-line entry point (``python -m dlmkit``).

Exit codes: 0 when every verdict passes, 1 on a verification failure or a graph6 parse
error in ``spectrum``, 2 on usage and input errors.
"""

import logging
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import typer
from pydantic import ValidationError
from rich.console import Console

from dlmkit.config import Settings, get_settings, setup_logging
from dlmkit.core.graph import Graph
from dlmkit.core.graph6 import ingest_graph6_stream, to_graph6
from dlmkit.enumerate import all_graphs, canonical_relabel, enumerate_connected
from dlmkit.errors import DisconnectedGraph, DlmkitError, Graph6Error
from dlmkit.families import build, classified_family_members
from dlmkit.models import (
    FamilySpec,
    FamilyTag,
    FormulaReport,
    MatrixKind,
    OutputFormat,
    SmallCaseReport,
    SuiteResult,
    SuiteStatus,
    Verdict,
    VerifyKind,
)
from dlmkit.spectra import dl_spectrum, laplacian_spectrum
from dlmkit.verify import (
    classify_sweep,
    ds_check,
    extremal_check,
    formulas_check,
    property_suite,
    small_case_sweeps,
)
from dlmkit.verify import reports
from dlmkit.verify.sweep import FORMULA_MIN_N

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

CLASSIFIED = "classified"
SKIP_BAD_LINES_HELP = "Log and skip unparsable graph6 lines instead of stopping at the first one"

app = typer.Typer(
    help="Exact distance Laplacian spectra and checks of the multiplicity n-3 classification.",
    no_args_is_help=True,
    add_completion=False,
)


@dataclass
class CliState:
    settings: Settings
    show_progress: bool


def _state(ctx: typer.Context) -> CliState:
    if ctx.obj is None:
        ctx.obj = CliState(get_settings(), True)
    return ctx.obj


def _fail(code: int, message: str) -> None:
    Console(stderr=True, highlight=False).print(f"[red]error:[/red] {message}")
    raise typer.Exit(code)


@contextmanager
def _usage_errors() -> Iterator[None]:
    """Library errors raised while handling a command become exit code 2."""
    try:
        yield
    except (DlmkitError, ValidationError, OSError) as e:
        logger.debug(f"Usage error: {str(e)}")
        _fail(EXIT_USAGE, str(e))


def _emit(text: str, out: Optional[Path]) -> None:
    if text and not text.endswith("\n"):
        text += "\n"
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text)
        logger.info(f"Wrote {out}")


def _emit_rich(draw: Callable[[Console], None], out: Optional[Path]) -> None:
    if out is None:
        draw(Console(highlight=False))
        return
    with out.open("w") as handle:
        draw(Console(file=handle, width=120, highlight=False))
    logger.info(f"Wrote {out}")


def _read_lines(file: Optional[Path]) -> List[str]:
    if file is None:
        return sys.stdin.read().splitlines()
    return file.read_text().splitlines()


def _load_corpus(file: Path, skip_bad_lines: bool = False) -> List[Graph]:
    """Connected graphs from a graph6 file; disconnected lines are dropped."""
    graphs = list(ingest_graph6_stream(_read_lines(file), connected_only=True, abort_on_error=not skip_bad_lines))
    logger.info(f"Read {len(graphs)} connected graphs from {file}")
    return graphs


def _corpus_order(corpus: Sequence[Graph], n: Optional[int]) -> int:
    if n is not None:
        return n
    sizes = {g.n for g in corpus}
    if len(sizes) != 1:
        _fail(EXIT_USAGE, "the corpus mixes vertex counts or is empty; pass --n")
    return sizes.pop()


def _parse_parts(parts: Optional[str]) -> Optional[List[int]]:
    if parts is None:
        return None
    try:
        return [int(p) for p in parts.split(",") if p.strip()]
    except ValueError:
        raise typer.BadParameter(f"expected comma-separated integers, got {parts!r}", param_hint="--parts")


def _family_spec(tag: FamilyTag, n: Optional[int], parts: Optional[str], a: Optional[int], b: Optional[int]) -> FamilySpec:
    return FamilySpec(tag=tag, n=n, parts=_parse_parts(parts), a=a, b=b)


def _all_passed(suites: Sequence[SuiteResult]) -> bool:
    return all(s.status == SuiteStatus.PASS for s in suites)


@app.callback()
def main(
    ctx: typer.Context,
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING or ERROR"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", help="Also append log records to this file"),
    quiet: bool = typer.Option(False, "--quiet", help="No progress bars; warnings and errors only"),
    no_cache: bool = typer.Option(False, "--no-cache", help="Ignore and do not write the sweep cache"),
):
    settings = get_settings()
    level = (log_level or ("WARNING" if quiet else settings.log_level)).upper()
    if not isinstance(logging.getLevelName(level), int):
        raise typer.BadParameter(f"unknown log level {log_level!r}", param_hint="--log-level")
    update = {"log_level": level}
    if log_file is not None:
        update["log_file"] = log_file
    if no_cache:
        update["use_cache"] = False
    settings = settings.model_copy(update=update)
    setup_logging(settings.log_level, settings.log_file)
    ctx.obj = CliState(settings=settings, show_progress=not quiet)


@app.command()
def spectrum(
    ctx: typer.Context,
    g6: Optional[str] = typer.Option(None, "--g6", help="A single graph6 string"),
    file: Optional[Path] = typer.Option(None, "--file", help="graph6 file, one graph per line"),
    family: Optional[FamilyTag] = typer.Option(None, "--family", help="Build the graph from a named family"),
    n: Optional[int] = typer.Option(None, "--n", min=1, help="Vertex count for --family"),
    parts: Optional[str] = typer.Option(None, "--parts", help="Part sizes for complete-multipartite, e.g. 2,2,2"),
    a: Optional[int] = typer.Option(None, "--a", min=1, help="Left pendant count for j-graph"),
    b: Optional[int] = typer.Option(None, "--b", min=1, help="Right pendant count for j-graph"),
    matrix: MatrixKind = typer.Option(MatrixKind.DL, "--matrix", help="dl (distance Laplacian) or l (Laplacian)"),
    skip_bad_lines: bool = typer.Option(False, "--skip-bad-lines", help=SKIP_BAD_LINES_HELP),
    output_format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write to this file instead of stdout"),
):
    """Exact eigenvalues with multiplicities; graphs come from --g6, --file, --family or stdin."""
    state = _state(ctx)
    settings = state.settings
    if sum(source is not None for source in (g6, file, family)) > 1:
        _fail(EXIT_USAGE, "give at most one of --g6, --file and --family")

    graphs: List[Tuple[str, Graph]] = []
    if family is not None:
        with _usage_errors():
            g = build(_family_spec(family, n, parts, a, b))
        graphs.append((to_graph6(g), g))
    else:
        with _usage_errors():
            lines = [g6] if g6 is not None else _read_lines(file)
        try:
            graphs = [(to_graph6(g), g) for g in ingest_graph6_stream(lines, abort_on_error=not skip_bad_lines)]
        except Graph6Error as e:
            _fail(EXIT_FAILURE, f"graph6 parse error: {str(e)}")
    if not graphs:
        _fail(EXIT_USAGE, "no graphs given")

    compute = dl_spectrum if matrix == MatrixKind.DL else laplacian_spectrum
    models = []
    for code, g in graphs:
        try:
            s = compute(g, settings.interval_bits, settings.compare_cap_bits)
        except DisconnectedGraph:
            _fail(EXIT_USAGE, f"{code} is disconnected; the distance Laplacian needs a connected graph")
        models.append(reports.spectrum_model(s, matrix, code))

    if output_format == OutputFormat.JSON:
        text = reports.to_json(models[0]) if len(models) == 1 else reports.to_json_list(models)
    elif output_format == OutputFormat.CSV:
        text = reports.spectrum_csv(models)
    elif len(models) == 1:
        text = models[0].text
    else:
        text = "\n".join(f"{m.graph6}\t{m.text}" for m in models)
    _emit(text, out)


@app.command("enumerate")
def enumerate_graphs(
    ctx: typer.Context,
    n: Optional[int] = typer.Option(None, "--n", min=1, help="Vertex count"),
    file: Optional[Path] = typer.Option(None, "--file", help="Canonicalize and dedup a graph6 corpus instead"),
    connected_only: bool = typer.Option(True, "--connected-only/--all-graphs", help="Drop disconnected graphs"),
    skip_bad_lines: bool = typer.Option(False, "--skip-bad-lines", help=SKIP_BAD_LINES_HELP),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """One canonical graph6 line per isomorphism class, sorted."""
    state = _state(ctx)
    with _usage_errors():
        if file is not None:
            corpus = ingest_graph6_stream(_read_lines(file), connected_only=connected_only, abort_on_error=not skip_bad_lines)
            codes = sorted({to_graph6(canonical_relabel(g)) for g in corpus if n is None or g.n == n})
        elif n is None:
            _fail(EXIT_USAGE, "give --n or --file")
        elif connected_only:
            codes = [to_graph6(g) for g in enumerate_connected(n, state.show_progress)]
        else:
            codes = [to_graph6(g) for g in all_graphs(n)]
    logger.info(f"Emitting {len(codes)} graphs")
    _emit("\n".join(codes), out)


@app.command()
def family(
    ctx: typer.Context,
    name: str = typer.Option(..., "--name", help=f"'{CLASSIFIED}' or a family tag"),
    n: Optional[int] = typer.Option(None, "--n", min=1),
    parts: Optional[str] = typer.Option(None, "--parts"),
    a: Optional[int] = typer.Option(None, "--a", min=1),
    b: Optional[int] = typer.Option(None, "--b", min=1),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """graph6 lines for a named family, or every classified member on n vertices."""
    _state(ctx)
    with _usage_errors():
        if name == CLASSIFIED:
            if n is None:
                _fail(EXIT_USAGE, "--name classified needs --n")
            graphs = [g for _, g in classified_family_members(n)]
        else:
            try:
                tag = FamilyTag(name)
            except ValueError:
                choices = ", ".join([CLASSIFIED] + [t.value for t in FamilyTag])
                _fail(EXIT_USAGE, f"unknown family {name!r}; choose from {choices}")
            graphs = [build(_family_spec(tag, n, parts, a, b))]
    _emit("\n".join(to_graph6(g) for g in graphs), out)


@app.command()
def verify(
    ctx: typer.Context,
    kind: VerifyKind = typer.Argument(..., help="Which check to run"),
    n: Optional[int] = typer.Option(None, "--n", min=1),
    file: Optional[Path] = typer.Option(None, "--file", help="graph6 corpus used instead of built-in enumeration"),
    output_format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
    seed: int = typer.Option(0, "--seed", help="Seed for sampled property checks"),
    samples: int = typer.Option(1000, "--samples", min=0, help="Sample budget for sampled property checks"),
    workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Worker processes for sweeps"),
    max_n: int = typer.Option(14, "--max-n", min=6, help="Largest n for the formulas check"),
    min_n: Optional[int] = typer.Option(None, "--min-n", min=2, help="properties: also check every order from this one up to --n"),
    skip_bad_lines: bool = typer.Option(False, "--skip-bad-lines", help=SKIP_BAD_LINES_HELP),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Run one verification; exit 0 only if every verdict passes."""
    state = _state(ctx)
    settings = state.settings
    if workers is not None:
        settings = settings.model_copy(update={"workers": workers})
    progress = state.show_progress

    with _usage_errors():
        corpus = _load_corpus(file, skip_bad_lines) if file is not None else None
        if kind in (VerifyKind.THM33, VerifyKind.COSPECTRAL, VerifyKind.PROPERTIES, VerifyKind.EXTREMAL):
            if corpus is not None:
                n = _corpus_order(corpus, n)
            if n is None:
                _fail(EXIT_USAGE, f"verify {kind.value} needs --n")

        if kind == VerifyKind.THM33:
            report = classify_sweep(n, corpus, settings, progress)
            passed = report.verdict == Verdict.MATCH and _all_passed(report.suites)
            render = {
                OutputFormat.JSON: lambda: reports.to_json(report),
                OutputFormat.CSV: lambda: reports.records_csv(report.records),
            }
            draw = lambda console: reports.print_classification(report, console)
        elif kind == VerifyKind.REMARK45:
            small = small_case_sweeps(settings, progress)
            passed = all(r.verdict == Verdict.MATCH and _all_passed(r.suites) for r in small)
            small_report = SmallCaseReport(verdict=Verdict.MATCH if passed else Verdict.MISMATCH, reports=small)
            render = {
                OutputFormat.JSON: lambda: reports.to_json(small_report),
                OutputFormat.CSV: lambda: reports.records_csv([rec for r in small for rec in r.records]),
            }

            def draw(console: Console) -> None:
                for r in small:
                    reports.print_classification(r, console)
        elif kind == VerifyKind.FORMULAS:
            suites = formulas_check(max_n)
            passed = _all_passed(suites)
            formula_report = FormulaReport(
                min_n=FORMULA_MIN_N,
                max_n=max_n,
                verdict=Verdict.MATCH if passed else Verdict.MISMATCH,
                suites=suites,
            )
            render = {
                OutputFormat.JSON: lambda: reports.to_json(formula_report),
                OutputFormat.CSV: lambda: reports.suites_csv(suites),
            }
            draw = lambda console: console.print(reports.suites_table(suites, f"closed forms, {FORMULA_MIN_N} <= n <= {max_n}"))
        elif kind == VerifyKind.PROPERTIES:
            suite_report = property_suite(n, samples, seed, settings, progress, min_n=min_n)
            passed = suite_report.verdict == Verdict.MATCH
            render = {
                OutputFormat.JSON: lambda: reports.to_json(suite_report),
                OutputFormat.CSV: lambda: reports.suites_csv(suite_report.suites),
            }
            draw = lambda console: console.print(
                reports.suites_table(suite_report.suites, f"properties n={suite_report.min_n}..{n} seed={seed} samples={samples}")
            )
        elif kind == VerifyKind.COSPECTRAL:
            cospectral = ds_check(n, corpus, settings, progress)
            passed = cospectral.verdict == Verdict.MATCH
            render = {
                OutputFormat.JSON: lambda: reports.to_json(cospectral),
                OutputFormat.CSV: lambda: reports.cospectral_csv(cospectral),
            }
            draw = lambda console: reports.print_cospectral(cospectral, console)
        else:
            result = extremal_check(n, settings, progress)
            passed = result.status == SuiteStatus.PASS
            render = {
                OutputFormat.JSON: lambda: reports.to_json(result),
                OutputFormat.CSV: lambda: reports.suites_csv([result]),
            }
            draw = lambda console: console.print(reports.suites_table([result], f"extremal classes n={n}"))

    if output_format == OutputFormat.TEXT:
        _emit_rich(draw, out)
    else:
        _emit(render[output_format](), out)

    if not passed:
        logger.warning(f"verify {kind.value}: failed")
        raise typer.Exit(EXIT_FAILURE)
    logger.info(f"verify {kind.value}: passed")


@app.command()
def cospectral(
    ctx: typer.Context,
    n: Optional[int] = typer.Option(None, "--n", min=1),
    file: Optional[Path] = typer.Option(None, "--file", help="graph6 corpus used instead of built-in enumeration"),
    output_format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
    workers: Optional[int] = typer.Option(None, "--workers", min=1),
    skip_bad_lines: bool = typer.Option(False, "--skip-bad-lines", help=SKIP_BAD_LINES_HELP),
    out: Optional[Path] = typer.Option(None, "--out"),
):
    """Groups of graphs sharing a distance Laplacian characteristic polynomial, one paragraph each."""
    state = _state(ctx)
    settings = state.settings
    if workers is not None:
        settings = settings.model_copy(update={"workers": workers})
    with _usage_errors():
        corpus = _load_corpus(file, skip_bad_lines) if file is not None else None
        if corpus is not None:
            n = _corpus_order(corpus, n)
        if n is None:
            _fail(EXIT_USAGE, "give --n or --file")
        report = ds_check(n, corpus, settings, state.show_progress)

    if output_format == OutputFormat.JSON:
        _emit(reports.to_json(report), out)
    elif output_format == OutputFormat.CSV:
        _emit(reports.cospectral_csv(report), out)
    else:
        _emit(reports.cospectral_paragraphs(report), out)
