"""Rendering of spectra and verification reports as JSON, CSV and rich text tables."""

import json
from typing import List, Optional

import pandas as pd
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from dlmkit.linalg.roots import ExactSpectrum, RealRoot
from dlmkit.models import (
    ClassificationReport,
    CospectralReport,
    GraphRecord,
    MatrixKind,
    RootDescriptorModel,
    SpectrumEntryModel,
    SpectrumModel,
    SuiteResult,
)

DECIMAL_DIGITS = 10


def root_model(root: RealRoot) -> RootDescriptorModel:
    if root.is_integer:
        return RootDescriptorModel(exact=root.value, approx=float(root.value))
    return RootDescriptorModel(lo=str(root.lo), hi=str(root.hi), approx=float(root.midpoint))


def describe(model: RootDescriptorModel) -> str:
    if model.exact is not None:
        return str(model.exact)
    return f"≈{model.approx:.{DECIMAL_DIGITS}g}"


def spectrum_model(s: ExactSpectrum, matrix: MatrixKind, graph6: Optional[str] = None) -> SpectrumModel:
    return SpectrumModel(
        graph6=graph6,
        matrix=matrix,
        n=s.order,
        text=s.render_text(DECIMAL_DIGITS),
        entries=[SpectrumEntryModel(root=root_model(e.root), multiplicity=e.multiplicity) for e in s.entries],
    )


def to_json(model: BaseModel) -> str:
    """Byte-stable JSON: sorted keys, fixed indent."""
    return json.dumps(model.model_dump(mode="json"), indent=2, sort_keys=True)


def to_json_list(models: List[BaseModel]) -> str:
    return json.dumps([m.model_dump(mode="json") for m in models], indent=2, sort_keys=True)


def records_frame(records: List[GraphRecord]) -> pd.DataFrame:
    rows = [
        {
            "graph6": r.graph6,
            "largest": describe(r.largest),
            "multiplicity": r.multiplicity,
            "distinct": r.distinct,
            "diameter": r.diameter,
            "p5_free": r.p5_free,
            "complement_components": r.complement_components,
            "max_transmission": r.max_transmission,
            "char_poly": " ".join(str(c) for c in r.char_poly),
        }
        for r in records
    ]
    columns = ["graph6", "largest", "multiplicity", "distinct", "diameter", "p5_free",
               "complement_components", "max_transmission", "char_poly"]
    return pd.DataFrame(rows, columns=columns)


def records_csv(records: List[GraphRecord]) -> str:
    return records_frame(records).to_csv(index=False, lineterminator="\n")


def spectrum_csv(models: List[SpectrumModel]) -> str:
    """One row per distinct eigenvalue; exact values fill both interval columns."""
    frame = pd.DataFrame(
        [
            {
                "graph6": model.graph6 or "",
                "matrix": model.matrix.value,
                "eigenvalue": describe(e.root),
                "multiplicity": e.multiplicity,
                "lo": e.root.lo if e.root.exact is None else e.root.exact,
                "hi": e.root.hi if e.root.exact is None else e.root.exact,
            }
            for model in models
            for e in model.entries
        ],
        columns=["graph6", "matrix", "eigenvalue", "multiplicity", "lo", "hi"],
    )
    return frame.to_csv(index=False, lineterminator="\n")


def suites_csv(suites: List[SuiteResult]) -> str:
    frame = pd.DataFrame(
        [
            {"name": s.name, "status": s.status.value, "checked": s.checked,
             "counterexamples": " ".join(s.counterexamples)}
            for s in suites
        ],
        columns=["name", "status", "checked", "counterexamples"],
    )
    return frame.to_csv(index=False, lineterminator="\n")


def suites_table(suites: List[SuiteResult], title: str) -> Table:
    table = Table(title=title)
    table.add_column("suite")
    table.add_column("status")
    table.add_column("checked", justify="right")
    table.add_column("counterexamples")
    for s in suites:
        style = "green" if s.status.value == "pass" else "red"
        table.add_row(s.name, f"[{style}]{s.status.value}[/{style}]", str(s.checked), " ".join(s.counterexamples[:5]))
    return table


def print_classification(report: ClassificationReport, console: Console) -> None:
    console.print(
        f"n={report.n}: {report.count} graphs, class size {report.class_size}, verdict [bold]{report.verdict.value}[/bold]"
    )
    table = Table(title=f"multiplicity n-3 = {report.n - 3}")
    table.add_column("graph6")
    for g6 in report.members:
        table.add_row(g6)
    console.print(table)
    if report.missing:
        console.print(f"missing: {' '.join(report.missing)}")
    if report.unexpected:
        console.print(f"unexpected: {' '.join(report.unexpected)}")
    if report.suites:
        console.print(suites_table(report.suites, "class checks"))


def print_cospectral(report: CospectralReport, console: Console) -> None:
    """One paragraph of graph6 lines per cospectral group."""
    console.print(f"n={report.n}: {report.count} graphs, {len(report.groups)} cospectral group(s)")
    for group in report.groups:
        console.print("\n".join(group.members), highlight=False)
        console.print()
    for g6, ds in sorted(report.ds_verdicts.items()):
        console.print(f"{g6}: {'determined by spectrum' if ds else 'has a cospectral mate'}", highlight=False)


def cospectral_csv(report: CospectralReport) -> str:
    frame = pd.DataFrame(
        [
            {"group": index, "graph6": g6, "char_poly": " ".join(str(c) for c in group.char_poly)}
            for index, group in enumerate(report.groups, start=1)
            for g6 in group.members
        ],
        columns=["group", "graph6", "char_poly"],
    )
    return frame.to_csv(index=False, lineterminator="\n")


def cospectral_paragraphs(report: CospectralReport) -> str:
    return "\n\n".join("\n".join(group.members) for group in report.groups)
