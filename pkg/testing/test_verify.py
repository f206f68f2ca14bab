"""
Tests for the classification sweeps, cospectral grouping, property suites and the sweep cache
"""

import json
import logging

import pytest

from conftest import family_graph
from dlmkit.core.graph6 import parse_graph6, to_graph6
from dlmkit.enumerate import canonical_relabel, connected_graphs
from dlmkit.errors import DlmkitError, EnumerationError
from dlmkit.models import FamilyTag, GraphRecord, SuiteStatus, Verdict
from dlmkit.verify import (
    classify_sweep,
    ds_check,
    extremal_check,
    formulas_check,
    interlacing_check,
    property_suite,
    small_case_sweeps,
)
from dlmkit.verify.cache import SweepCache, SweepTracker, corpus_digest
from dlmkit.verify.pool import INLINE_THRESHOLD, WorkerPool
from dlmkit.verify.properties import p5_structure_suite
from dlmkit.verify.reports import records_csv, to_json
from dlmkit.verify.sweep import compute_record, sweep_records, tracker


def _code(tag: FamilyTag, n: int) -> str:
    return to_graph6(canonical_relabel(family_graph(tag, n)))


@pytest.mark.parametrize("n, size", [(4, 3), (5, 5), (6, 5), (7, 4)])
def test_classification_sweep(n, size):
    report = classify_sweep(n)
    assert report.verdict == Verdict.MATCH
    assert report.class_size == size
    assert report.members == report.expected
    assert not report.missing and not report.unexpected
    assert report.count == len(connected_graphs(n))
    assert all(s.status == SuiteStatus.PASS for s in report.suites), [s for s in report.suites if s.details]


@pytest.mark.slow
@pytest.mark.parametrize("n, size", [(8, 4), (9, 5)])
def test_classification_sweep_large(n, size):
    report = classify_sweep(n)
    assert report.verdict == Verdict.MATCH
    assert report.class_size == size
    assert all(s.status == SuiteStatus.PASS for s in report.suites)


def test_multiplicity_distribution():
    report = classify_sweep(6)
    assert report.multiplicity_distribution[5] == 1
    assert report.multiplicity_distribution[4] == 2
    assert report.multiplicity_distribution[3] == 5
    assert sum(report.multiplicity_distribution.values()) == 112


def test_sweep_on_supplied_corpus():
    dropped = _code(FamilyTag.COMPLETE_BIPARTITE_2, 6)
    corpus = [g for g in connected_graphs(6) if to_graph6(g) != dropped]
    report = classify_sweep(6, corpus=corpus)
    assert report.verdict == Verdict.MISMATCH
    assert report.missing == [dropped]
    assert report.unexpected == []
    assert report.count == 111


def test_sweep_ranges():
    with pytest.raises(EnumerationError):
        classify_sweep(3)
    with pytest.raises(EnumerationError):
        classify_sweep(10)
    with pytest.raises(EnumerationError):
        ds_check(10)


def test_report_json_schema():
    payload = json.loads(to_json(classify_sweep(5)))
    for key in ("n", "count", "class_size", "verdict", "missing", "unexpected", "suites"):
        assert key in payload
    assert "records" not in payload
    assert payload["verdict"] == "match"
    assert {"name", "status", "counterexamples"} <= set(payload["suites"][0])


def test_records_csv_has_one_row_per_graph():
    report = classify_sweep(5)
    lines = records_csv(report.records).strip().split("\n")
    assert lines[0].startswith("graph6,largest,multiplicity")
    assert len(lines) == 22


def test_compute_record():
    record = compute_record(to_graph6(family_graph(FamilyTag.COMPLETE_BIPARTITE_2, 6)), 40, 80)
    assert record.largest.exact == 10
    assert record.multiplicity == 3
    assert record.distinct == 4
    assert record.diameter == 2
    assert record.p5_free
    assert record.complement_components == 2
    assert record.max_transmission == 8
    assert record.char_poly[-1] == 1


def test_small_case_sweeps():
    reports = small_case_sweeps()
    assert [r.n for r in reports] == [4, 5]
    assert all(r.verdict == Verdict.MATCH for r in reports)
    assert [r.class_size for r in reports] == [3, 5]


def test_extremal_check():
    for n in (4, 5, 6):
        assert extremal_check(n).status == SuiteStatus.PASS
    with pytest.raises(EnumerationError):
        extremal_check(2)


def test_formulas_check():
    agree, distinct = formulas_check(max_n=11)
    assert agree.status == SuiteStatus.PASS
    assert distinct.status == SuiteStatus.PASS
    assert agree.checked > 0 and distinct.checked > 0


def test_members_are_determined_by_spectrum():
    for n in (5, 6):
        report = ds_check(n)
        assert report.verdict == Verdict.MATCH
        assert all(report.ds_verdicts.values())
        members = {m for group in report.groups for m in group.members}
        assert not members & set(report.ds_verdicts)


def test_cospectral_groups_share_polynomials():
    report = ds_check(7)
    polys = {}
    for record in classify_sweep(7).records:
        polys[to_graph6(canonical_relabel(parse_graph6(record.graph6)))] = record.char_poly
    for group in report.groups:
        assert len(group.members) >= 2
        assert all(polys[m] == group.char_poly for m in group.members)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_property_suite_passes(n):
    report = property_suite(n, samples=60, seed=3)
    failing = [s for s in report.suites if s.status != SuiteStatus.PASS]
    assert report.verdict == Verdict.MATCH, failing
    names = {s.name for s in report.suites}
    assert {"interlacing", "five-vertex-blocks", "laplacian-join-rule", "cograph-equivalences"} <= names


def test_property_suite_is_deterministic():
    first = property_suite(5, samples=40, seed=9)
    second = property_suite(5, samples=40, seed=9)
    assert to_json(first) == to_json(second)


def test_property_suite_range():
    with pytest.raises(EnumerationError):
        property_suite(1)
    with pytest.raises(EnumerationError):
        property_suite(11)
    with pytest.raises(EnumerationError):
        property_suite(5, min_n=6)
    with pytest.raises(EnumerationError):
        property_suite(5, min_n=1)


def test_property_suite_over_an_order_range():
    report = property_suite(5, samples=20, seed=1, min_n=2)
    failing = [s for s in report.suites if s.status != SuiteStatus.PASS]
    assert report.verdict == Verdict.MATCH, failing
    assert (report.min_n, report.n) == (2, 5)
    names = [s.name for s in report.suites]
    assert len(names) == len(set(names))
    single = {s.name: s.checked for s in property_suite(5, samples=20, seed=1).suites}
    pooled = {s.name: s.checked for s in report.suites}
    assert pooled["exact-pipeline"] > single["exact-pipeline"]
    assert property_suite(5, samples=20, seed=1).min_n == 5


def test_p5_structure_skips_four_vertex_graphs(p4):
    result = p5_structure_suite([p4])
    assert result.status == SuiteStatus.PASS
    assert result.checked == 1
    assert not result.counterexamples


def test_interlacing_check():
    g = family_graph(FamilyTag.COMPLETE_BIPARTITE_2, 6)
    assert interlacing_check(g, [0, 1, 2, 3, 4])
    assert interlacing_check(g, [5])
    with pytest.raises(DlmkitError):
        interlacing_check(g, [])
    with pytest.raises(DlmkitError):
        interlacing_check(g, range(6))


def test_sweep_cache_round_trip(isolated_settings, tmp_path):
    graphs = connected_graphs(4)
    records = sweep_records(graphs, 4, isolated_settings)
    before = tracker.get_stats()["cached"]
    again = sweep_records(graphs, 4, isolated_settings)
    assert again == records
    assert tracker.get_stats()["cached"] == before + 1
    assert list((tmp_path / "cache").glob("sweep-n4-*.json"))


def test_sweep_cache_ignores_bad_files(tmp_path):
    cache = SweepCache(tmp_path)
    digest = corpus_digest(["Ch", "Bw"])
    record = compute_record("Ch", 40, 80)
    cache.store(4, digest, [record])
    assert cache.load(4, digest) == [record]
    assert cache.load(4, corpus_digest(["Ch"])) is None
    next(tmp_path.glob("sweep-n4-*.json")).write_text("{not json")
    assert cache.load(4, digest) is None
    disabled = SweepCache(tmp_path / "off", enabled=False)
    disabled.store(4, digest, [record])
    assert disabled.load(4, digest) is None
    assert not (tmp_path / "off").exists()


def test_sweep_cache_is_keyed_on_precision(isolated_settings):
    graphs = connected_graphs(4)
    sweep_records(graphs, 4, isolated_settings)
    for update in ({"interval_bits": isolated_settings.interval_bits + 8},
                   {"compare_cap_bits": isolated_settings.compare_cap_bits + 8}):
        changed = isolated_settings.model_copy(update=update)
        before = tracker.get_stats()["cached"]
        sweep_records(graphs, 4, changed)
        assert tracker.get_stats()["cached"] == before
        sweep_records(graphs, 4, changed)
        assert tracker.get_stats()["cached"] == before + 1
    assert corpus_digest(["Ch"], 40, 80) != corpus_digest(["Ch"], 48, 80)
    assert corpus_digest(["Ch"], 40, 80) != corpus_digest(["Ch"], 40, 88)


def test_sweep_logs_pool_and_tracker_stats(isolated_settings, caplog):
    graphs = connected_graphs(4)
    with caplog.at_level(logging.INFO, logger="dlmkit.verify.sweep"):
        sweep_records(graphs, 4, isolated_settings)
        sweep_records(graphs, 4, isolated_settings)
    computed = [m for m in caplog.messages if m.startswith("Sweep n=4 pool:")]
    assert len(computed) == 1
    assert f"'submitted': {len(graphs)}, 'completed': {len(graphs)}" in computed[0]
    assert "'cached':" in computed[0]
    assert any(m.startswith(f"Loaded {len(graphs)} cached records for n=4; sweeps so far:") for m in caplog.messages)


def test_sweep_report_does_not_depend_on_workers(isolated_settings):
    assert len(connected_graphs(6)) >= INLINE_THRESHOLD
    serial = isolated_settings.model_copy(update={"workers": 1, "use_cache": False})
    parallel = isolated_settings.model_copy(update={"workers": 2, "use_cache": False})
    assert to_json(classify_sweep(6, settings=serial)) == to_json(classify_sweep(6, settings=parallel))


def test_tracker_history():
    t = SweepTracker()
    t.MAX_HISTORY = 10
    for _ in range(11):
        t.create_tracking_id(4, "d")
    assert len(t.sweeps) <= 10
    tid = t.create_tracking_id(5, "e")
    assert t.sweeps[tid]["status"] == "queued"
    assert t.update_status(tid, "completed")
    assert t.sweeps[tid]["finished_at"] is not None
    assert not t.update_status("missing", "failed")
    stats = t.get_stats()
    assert stats["completed"] == 1 and stats["total"] == len(t.sweeps)


def test_worker_pool_preserves_order():
    pool = WorkerPool(workers=1)
    assert pool.map(pow, [2, 3, 4], 2) == [4, 9, 16]
    stats = pool.get_pool_stats()
    assert stats["completed"] == 3 and not stats["is_processing"]


def test_records_are_models():
    assert isinstance(compute_record("Bw", 40, 80), GraphRecord)
