"""
Classification sweeps: exact multiplicity of the largest distance Laplacian eigenvalue over
every connected graph on n vertices, compared with the known classes.
"""

import logging
import time
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from dlmkit.config import Settings, get_settings
from dlmkit.core.graph import (
    Graph,
    complement,
    connected_component_count,
    distance_table,
)
from dlmkit.core.graph6 import parse_graph6, to_graph6
from dlmkit.enumerate import canonical_relabel, enumerate_connected
from dlmkit.errors import DisconnectedGraph, EnumerationError
from dlmkit.families import (
    FOUR_VALUED_TAGS,
    classified_family_members,
    closed_form_dl_spectrum,
    expected_members,
    extremal_members,
)
from dlmkit.linalg.charpoly import char_poly
from dlmkit.linalg.roots import ExactSpectrum, exact_spectrum
from dlmkit.models import (
    ClassificationReport,
    FamilySpec,
    GraphRecord,
    SuiteResult,
    SuiteStatus,
    Verdict,
)
from dlmkit.patterns import is_p5_free
from dlmkit.spectra import distance_laplacian, dl_spectrum
from dlmkit.verify.cache import SweepCache, SweepTracker, corpus_digest
from dlmkit.verify.pool import WorkerPool
from dlmkit.verify.reports import root_model

logger = logging.getLogger(__name__)

MIN_SWEEP_N = 4
FORMULA_MIN_N = 6

tracker = SweepTracker()


class SuiteCheck:
    """Accumulates one named check; failures keep the graph6 and a short reason."""

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.counterexamples: List[str] = []
        self.details: List[str] = []

    def record(self, ok: bool, witness: str = "", reason: str = "") -> bool:
        self.checked += 1
        if not ok:
            if witness and witness not in self.counterexamples:
                self.counterexamples.append(witness)
            if reason:
                self.details.append(f"{witness}: {reason}" if witness else reason)
            logger.warning(f"{self.name} failed on {witness or '-'}: {reason}")
        return ok

    @property
    def passed(self) -> bool:
        return not self.counterexamples and not self.details

    def result(self) -> SuiteResult:
        return SuiteResult(
            name=self.name,
            status=SuiteStatus.PASS if self.passed else SuiteStatus.FAIL,
            checked=self.checked,
            counterexamples=self.counterexamples,
            details=self.details,
        )


def failure_witness(g: Graph) -> str:
    """graph6 plus the exact distance Laplacian characteristic polynomial when defined."""
    code = to_graph6(g)
    try:
        return f"{code} [{char_poly(distance_laplacian(g))}]"
    except DisconnectedGraph:
        return code


def compute_record(graph6: str, bits: int, cap_bits: int) -> GraphRecord:
    """Everything a sweep needs about one connected graph; runs inside pool workers."""
    g = parse_graph6(graph6)
    m = distance_laplacian(g)
    poly = char_poly(m)
    spectrum = exact_spectrum(m, bits, cap_bits)
    head = spectrum.largest()
    return GraphRecord(
        graph6=graph6,
        largest=root_model(head.root),
        multiplicity=head.multiplicity,
        distinct=spectrum.distinct_count(),
        diameter=distance_table(g).diameter,
        p5_free=is_p5_free(g),
        complement_components=connected_component_count(complement(g)),
        max_transmission=max(m[i, i] for i in range(g.n)),
        char_poly=list(poly.coeffs),
    )


def sweep_records(
    graphs: Sequence[Graph],
    n: int,
    settings: Optional[Settings] = None,
    show_progress: bool = False,
) -> List[GraphRecord]:
    """Records for every graph, in input order, using the on-disk cache when enabled."""
    settings = settings or get_settings()
    codes = [to_graph6(g) for g in graphs]
    digest = corpus_digest(codes, settings.interval_bits, settings.compare_cap_bits)
    tracking_id = tracker.create_tracking_id(n, digest)
    cache = SweepCache(settings.cache_dir, settings.use_cache)

    cached = cache.load(n, digest)
    if cached is not None:
        tracker.update_status(tracking_id, "cached")
        logger.info(f"Loaded {len(cached)} cached records for n={n}; sweeps so far: {tracker.get_stats()}")
        return cached

    pool = WorkerPool(settings.workers, show_progress)
    records = pool.map(
        compute_record,
        codes,
        settings.interval_bits,
        settings.compare_cap_bits,
        desc=f"spectra n={n}",
        tracker=tracker,
        tracking_id=tracking_id,
    )
    cache.store(n, digest, records)
    logger.info(f"Sweep n={n} pool: {pool.get_pool_stats()}; sweeps so far: {tracker.get_stats()}")
    return records


def canonical_code(graph6: str) -> str:
    return to_graph6(canonical_relabel(parse_graph6(graph6)))


def _class_diff(records: List[GraphRecord], k: int, expected: List[Tuple[FamilySpec, Graph]]) -> Tuple[List[str], List[str], List[str]]:
    found = sorted(canonical_code(r.graph6) for r in records if r.multiplicity == k)
    wanted = sorted(to_graph6(canonical_relabel(g)) for _, g in expected)
    missing = sorted(set(wanted) - set(found))
    unexpected = sorted(set(found) - set(wanted))
    return found, missing, unexpected


def _class_structure_suite(n: int, members: List[GraphRecord]) -> SuiteResult:
    """Structure shared by every graph whose top eigenvalue has multiplicity n-3."""
    check = SuiteCheck("class-structure")
    for r in members:
        check.record(r.p5_free, r.graph6, "contains an induced P5")
        if n >= 6:
            check.record(r.diameter == 2, r.graph6, f"diameter {r.diameter}")
            check.record(r.largest.exact is not None, r.graph6, "largest eigenvalue not integral")
            if r.largest.exact is not None:
                check.record(r.largest.exact >= r.max_transmission + 2, r.graph6,
                             f"largest {r.largest.exact} < max Tr + 2 = {r.max_transmission + 2}")
                g = parse_graph6(r.graph6)
                tr = [sum(row) for row in distance_table(g).d]
                tight = [v for v in range(g.n) if tr[v] + 2 == r.largest.exact]
                check.record(all(tr[v] == max(tr) for v in tight), r.graph6,
                             "a vertex attains largest = Tr + 2 without maximal transmission")
            check.record(r.complement_components >= 2, r.graph6, "complement connected")
            check.record(r.distinct in (3, 4), r.graph6, f"{r.distinct} distinct eigenvalues")
    return check.result()


def _distinct_split_suite(n: int, members: List[GraphRecord]) -> SuiteResult:
    """Four distinct values exactly for the first three families, three for the rest."""
    check = SuiteCheck("distinct-value-split")
    if n < 6:
        return check.result()
    by_code = {canonical_code(r.graph6): r for r in members}
    for spec, g in classified_family_members(n):
        code = to_graph6(canonical_relabel(g))
        record = by_code.get(code)
        if record is None:
            continue
        want = 4 if spec.tag in FOUR_VALUED_TAGS else 3
        check.record(record.distinct == want, code, f"{spec.label()} has {record.distinct} distinct values, expected {want}")
    return check.result()


def _extremal_suite(n: int, records: List[GraphRecord]) -> SuiteResult:
    check = SuiteCheck("extremal-classes")
    for k in (n - 1, n - 2):
        _, missing, unexpected = _class_diff(records, k, extremal_members(n, k))
        for code in missing:
            check.record(False, code, f"missing from multiplicity {k}")
        for code in unexpected:
            check.record(False, code, f"unexpected with multiplicity {k}")
        if not missing and not unexpected:
            check.record(True)
    return check.result()


def classify_sweep(
    n: int,
    corpus: Optional[Sequence[Graph]] = None,
    settings: Optional[Settings] = None,
    show_progress: bool = False,
) -> ClassificationReport:
    """
    Exact multiplicity of the largest eigenvalue for every connected graph on n vertices,
    with the multiplicity n-3 class compared against the expected family list.

    Raises:
        EnumerationError: for n below 4, or above the built-in range without a corpus
    """
    settings = settings or get_settings()
    if n < MIN_SWEEP_N:
        raise EnumerationError(f"Classification sweeps start at n = {MIN_SWEEP_N}, got {n}")
    if corpus is None:
        if n > settings.max_enumeration_n:
            raise EnumerationError(f"n={n} is above the built-in enumeration limit; supply a graph6 corpus")
        graphs = list(enumerate_connected(n, show_progress))
    else:
        graphs = [g for g in corpus if g.n == n]

    start = time.monotonic()
    logger.info(f"Classification sweep over {len(graphs)} graphs, n={n}")
    records = sorted(sweep_records(graphs, n, settings, show_progress), key=lambda r: r.graph6)

    k = n - 3
    members, missing, unexpected = _class_diff(records, k, expected_members(n))
    expected = sorted(to_graph6(canonical_relabel(g)) for _, g in expected_members(n))
    class_records = [r for r in records if r.multiplicity == k]
    distribution = dict(sorted(Counter(r.multiplicity for r in records).items()))

    suites = [
        _class_structure_suite(n, class_records),
        _distinct_split_suite(n, class_records),
        _extremal_suite(n, records),
    ]
    verdict = Verdict.MATCH if not missing and not unexpected else Verdict.MISMATCH
    if verdict == Verdict.MISMATCH:
        logger.warning(f"n={n}: {len(missing)} missing, {len(unexpected)} unexpected")
    logger.info(f"Sweep n={n} finished in {time.monotonic() - start:.2f}s: class size {len(members)}, {verdict.value}")

    return ClassificationReport(
        n=n,
        count=len(records),
        class_size=len(members),
        verdict=verdict,
        members=members,
        expected=expected,
        missing=missing,
        unexpected=unexpected,
        multiplicity_distribution=distribution,
        suites=suites,
        records=records,
    )


def small_case_sweeps(settings: Optional[Settings] = None, show_progress: bool = False) -> List[ClassificationReport]:
    """Sweeps for n = 4 and n = 5 against the small-case lists."""
    return [classify_sweep(n, settings=settings, show_progress=show_progress) for n in (4, 5)]


def extremal_check(n: int, settings: Optional[Settings] = None, show_progress: bool = False) -> SuiteResult:
    """The multiplicity n-1 and n-2 classes over all connected graphs on n vertices."""
    settings = settings or get_settings()
    if n < 3 or n > settings.max_enumeration_n:
        raise EnumerationError(f"Extremal check needs 3 <= n <= {settings.max_enumeration_n}, got {n}")
    records = sweep_records(list(enumerate_connected(n, show_progress)), n, settings, show_progress)
    return _extremal_suite(n, records)


def formulas_check(max_n: int = 14, min_n: int = FORMULA_MIN_N) -> List[SuiteResult]:
    """
    Closed-form spectra against direct computation for every classified family and n,
    plus pairwise distinctness of the formula spectra at each n.
    """
    agree = SuiteCheck("closed-form-spectra")
    distinct = SuiteCheck("formula-spectra-distinct")
    for n in range(min_n, max_n + 1):
        formula_spectra: Dict[str, ExactSpectrum] = {}
        for spec, g in classified_family_members(n):
            formula = closed_form_dl_spectrum(spec, n)
            computed = dl_spectrum(g)
            agree.record(
                computed.same_as(formula),
                to_graph6(g),
                f"{spec.label()}: computed {computed.render_text()} vs formula {formula.render_text()}",
            )
            agree.record(
                computed.largest().multiplicity == n - 3,
                to_graph6(g),
                f"{spec.label()}: top multiplicity {computed.largest().multiplicity}",
            )
            formula_spectra[spec.label()] = formula
        labels = sorted(formula_spectra)
        for i, a in enumerate(labels):
            for b in labels[i + 1:]:
                distinct.record(not formula_spectra[a].same_as(formula_spectra[b]), f"n={n}", f"{a} and {b} share a spectrum")
    return [agree.result(), distinct.result()]
