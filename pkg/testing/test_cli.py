"""
End-to-end tests for the command-line interface: outputs and exit codes
"""

import json
from fractions import Fraction

import pytest
from typer.testing import CliRunner

from conftest import family_graph
from dlmkit.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, app
from dlmkit.core.graph import empty_graph, relabel
from dlmkit.core.graph6 import to_graph6
from dlmkit.enumerate import canonical_relabel, connected_graphs
from dlmkit.models import FamilyTag


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def run(runner, *args, **kwargs):
    return runner.invoke(app, ["--quiet", *args], **kwargs)


def test_spectrum_from_graph6(runner, k24):
    result = run(runner, "spectrum", "--g6", to_graph6(k24), "--matrix", "dl")
    assert result.exit_code == EXIT_OK
    assert result.stdout == "10×3, 8, 6, 0\n"


def test_spectrum_from_family(runner):
    result = run(runner, "spectrum", "--family", "k2-join-empty", "--n", "6", "--matrix", "dl")
    assert result.exit_code == EXIT_OK
    assert result.stdout.strip() == "10×3, 6×2, 0"
    result = run(runner, "spectrum", "--family", "complete-multipartite", "--parts", "2,2,2")
    assert result.stdout.strip() == "8×3, 6×2, 0"


def test_spectrum_json_carries_intervals(runner, p4):
    result = run(runner, "spectrum", "--g6", to_graph6(p4), "--matrix", "l", "--format", "json")
    assert result.exit_code == EXIT_OK
    payload = json.loads(result.stdout)
    assert payload["matrix"] == "l"
    assert payload["n"] == 4
    assert payload["text"].startswith("≈3.414213562")
    top = payload["entries"][0]["root"]
    assert top["exact"] is None
    assert Fraction(top["lo"]) < Fraction(top["hi"])
    assert [e["root"]["exact"] for e in payload["entries"][1:]] == [2, None, 0]


def test_spectrum_json_is_byte_stable(runner, k24):
    args = ("spectrum", "--g6", to_graph6(k24), "--format", "json")
    assert run(runner, *args).stdout == run(runner, *args).stdout


def test_spectrum_from_stdin_and_csv(runner):
    result = run(runner, "spectrum", input="Bw\nCh\n")
    assert result.exit_code == EXIT_OK
    lines = result.stdout.strip().split("\n")
    assert lines[0] == "Bw\t3×2, 0"
    assert lines[1].startswith("Ch\t≈")
    result = run(runner, "spectrum", "--format", "csv", input="Bw\n")
    assert result.stdout.split("\n")[0] == "graph6,matrix,eigenvalue,multiplicity,lo,hi"
    assert result.stdout.split("\n")[1] == "Bw,dl,3,2,3,3"


def test_spectrum_errors(runner, k24):
    disconnected = to_graph6(empty_graph(3))
    assert run(runner, "spectrum", "--g6", disconnected).exit_code == EXIT_USAGE
    laplacian = run(runner, "spectrum", "--g6", disconnected, "--matrix", "l")
    assert laplacian.exit_code == EXIT_OK
    assert laplacian.stdout.strip() == "0×3"
    assert run(runner, "spectrum", "--g6", "C").exit_code == EXIT_FAILURE
    both = run(runner, "spectrum", "--g6", to_graph6(k24), "--family", "star", "--n", "4")
    assert both.exit_code == EXIT_USAGE
    assert run(runner, "spectrum", "--family", "balanced-tripartite", "--n", "7").exit_code == EXIT_USAGE
    assert run(runner, "spectrum", "--family", "j-graph", "--a", "2").exit_code == EXIT_USAGE


def test_enumerate(runner, tmp_path):
    result = run(runner, "enumerate", "--n", "5")
    assert result.exit_code == EXIT_OK
    assert len(result.stdout.split()) == 21
    assert len(run(runner, "enumerate", "--n", "5", "--all-graphs").stdout.split()) == 34
    assert run(runner, "enumerate", "--n", "12").exit_code == EXIT_USAGE
    assert run(runner, "enumerate").exit_code == EXIT_USAGE


def test_enumerate_canonicalizes_a_corpus(runner, tmp_path, p4):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("\n".join([to_graph6(p4), to_graph6(relabel(p4, [1, 3, 0, 2])), "C?", ""]) + "\n")
    result = run(runner, "enumerate", "--file", str(corpus))
    assert result.stdout.split() == [to_graph6(canonical_relabel(p4))]
    result = run(runner, "enumerate", "--file", str(corpus), "--all-graphs")
    assert len(result.stdout.split()) == 2


def test_family(runner, tmp_path):
    result = run(runner, "family", "--name", "classified", "--n", "7")
    assert result.exit_code == EXIT_OK
    assert len(result.stdout.split()) == 4
    assert run(runner, "family", "--name", "balanced-tripartite", "--n", "7").exit_code == EXIT_USAGE
    assert run(runner, "family", "--name", "petersen", "--n", "10").exit_code == EXIT_USAGE
    assert run(runner, "family", "--name", "classified", "--n", "5").exit_code == EXIT_USAGE
    out = tmp_path / "j.g6"
    result = run(runner, "family", "--name", "j-graph", "--a", "2", "--b", "1", "--out", str(out))
    assert result.exit_code == EXIT_OK
    assert out.read_text().strip() == "DrC"


def test_verify_classification(runner):
    result = run(runner, "verify", "thm33", "--n", "6", "--format", "json")
    assert result.exit_code == EXIT_OK
    payload = json.loads(result.stdout)
    assert payload["class_size"] == 5
    assert payload["verdict"] == "match"
    assert payload["missing"] == [] and payload["unexpected"] == []


def test_verify_reports_mismatch_on_incomplete_corpus(runner, tmp_path):
    dropped = to_graph6(canonical_relabel(family_graph(FamilyTag.K2_JOIN_EMPTY, 6)))
    corpus = tmp_path / "n6.g6"
    corpus.write_text("\n".join(to_graph6(g) for g in connected_graphs(6) if to_graph6(g) != dropped) + "\n")
    result = run(runner, "verify", "thm33", "--file", str(corpus), "--format", "json")
    assert result.exit_code == EXIT_FAILURE
    assert json.loads(result.stdout)["missing"] == [dropped]


def test_verify_other_kinds(runner):
    remark = run(runner, "verify", "remark45", "--format", "json")
    assert remark.exit_code == EXIT_OK
    payload = json.loads(remark.stdout)
    assert payload["verdict"] == "match"
    assert [r["class_size"] for r in payload["reports"]] == [3, 5]
    formulas = run(runner, "verify", "formulas", "--max-n", "9", "--format", "json")
    assert formulas.exit_code == EXIT_OK
    payload = json.loads(formulas.stdout)
    assert (payload["min_n"], payload["max_n"], payload["verdict"]) == (6, 9, "match")
    assert [s["name"] for s in payload["suites"]] == ["closed-form-spectra", "formula-spectra-distinct"]
    assert run(runner, "verify", "extremal", "--n", "5").exit_code == EXIT_OK
    cospectral = run(runner, "verify", "cospectral", "--n", "6", "--format", "csv")
    assert cospectral.exit_code == EXIT_OK
    assert cospectral.stdout.startswith("group,graph6,char_poly")
    properties = run(runner, "verify", "properties", "--n", "5", "--samples", "30", "--seed", "4", "--format", "json")
    assert properties.exit_code == EXIT_OK
    assert json.loads(properties.stdout)["seed"] == 4


def test_verify_text_output(runner):
    result = run(runner, "verify", "thm33", "--n", "5")
    assert result.exit_code == EXIT_OK
    assert "class size 5" in result.stdout


def test_verify_usage_errors(runner):
    assert run(runner, "verify", "thm33").exit_code == EXIT_USAGE
    assert run(runner, "verify", "thm33", "--n", "3").exit_code == EXIT_USAGE
    assert run(runner, "verify", "thm33", "--n", "10").exit_code == EXIT_USAGE
    assert run(runner, "verify", "nonsense", "--n", "6").exit_code == EXIT_USAGE
    assert run(runner, "verify", "thm33", "--n", "6", "--workers", "0").exit_code == EXIT_USAGE


def test_cospectral_command(runner):
    result = run(runner, "cospectral", "--n", "5", "--format", "json")
    assert result.exit_code == EXIT_OK
    payload = json.loads(result.stdout)
    assert payload["n"] == 5 and payload["count"] == 21
    assert run(runner, "cospectral").exit_code == EXIT_USAGE


def test_global_options(runner, tmp_path):
    log_file = tmp_path / "logs" / "run.log"
    result = runner.invoke(app, ["--log-level", "DEBUG", "--log-file", str(log_file), "--no-cache", "enumerate", "--n", "4"])
    assert result.exit_code == EXIT_OK
    assert log_file.exists()
    assert runner.invoke(app, ["--log-level", "LOUD", "enumerate", "--n", "4"]).exit_code == EXIT_USAGE


def test_verify_properties_over_an_order_range(runner):
    result = run(runner, "verify", "properties", "--min-n", "4", "--n", "5", "--samples", "20", "--format", "json")
    assert result.exit_code == EXIT_OK
    payload = json.loads(result.stdout)
    assert (payload["min_n"], payload["n"], payload["verdict"]) == (4, 5, "match")
    assert run(runner, "verify", "properties", "--min-n", "6", "--n", "5").exit_code == EXIT_USAGE


def test_skip_bad_lines(runner, tmp_path):
    assert run(runner, "spectrum", input="Bw\nC!\nCh\n").exit_code == EXIT_FAILURE
    result = run(runner, "spectrum", "--skip-bad-lines", input="Bw\nC!\nCh\n")
    assert result.exit_code == EXIT_OK
    assert [line.split("\t")[0] for line in result.stdout.strip().split("\n")] == ["Bw", "Ch"]

    corpus = tmp_path / "n5.g6"
    corpus.write_text("\n".join([to_graph6(g) for g in connected_graphs(5)] + ["D!!"]) + "\n")
    assert run(runner, "enumerate", "--file", str(corpus)).exit_code == EXIT_USAGE
    assert len(run(runner, "enumerate", "--file", str(corpus), "--skip-bad-lines").stdout.split()) == 21
    assert run(runner, "verify", "thm33", "--file", str(corpus)).exit_code == EXIT_USAGE
    result = run(runner, "verify", "thm33", "--file", str(corpus), "--skip-bad-lines", "--format", "json")
    assert result.exit_code == EXIT_OK
    assert json.loads(result.stdout)["count"] == 21
    assert run(runner, "cospectral", "--file", str(corpus), "--skip-bad-lines").exit_code == EXIT_OK
