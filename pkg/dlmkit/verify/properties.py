"""
Property suites: each suite checks one structural or spectral statement over enumerated
graphs (exhaustively) or over seeded samples, and reports counterexamples as graph6.
"""

import itertools
import logging
import random
import time
from functools import lru_cache
from typing import Callable, List, Optional, Sequence

import numpy as np

from dlmkit.config import Settings, get_settings
from dlmkit.core.graph import (
    Graph,
    complement,
    complete_graph,
    components,
    connected_component_count,
    distance_table,
    induced_subgraph,
    is_connected,
    join,
    remove_edge,
)
from dlmkit.core.graph6 import to_graph6
from dlmkit.enumerate import all_graphs, connected_graphs
from dlmkit.errors import DiameterTooLarge, DlmkitError, EnumerationError
from dlmkit.families import expected_members
from dlmkit.linalg.charpoly import char_poly
from dlmkit.linalg.jacobi import agreement_tolerance, numeric_eigenpairs, numeric_eigenvalues
from dlmkit.linalg.roots import ExactSpectrum, RealRoot, compare_roots, exact_spectrum, squarefree_decompose
from dlmkit.models import SuiteReport, SuiteResult, SuiteStatus, Verdict
from dlmkit.patterns import (
    contained_patterns,
    is_cograph,
    is_p4_free,
    is_p5_free,
    j_graph_recognize,
)
from dlmkit.spectra import (
    complement_laplacian_spectrum,
    distance_laplacian,
    dl_spectrum_from_laplacian,
    join_laplacian_spectrum,
    laplacian,
)
from dlmkit.verify.sweep import SuiteCheck, failure_witness

logger = logging.getLogger(__name__)

EIGENSPACE_TOLERANCE = 1e-6
LAPLACIAN_IDENTITY_MAX_N = 6
COGRAPH_MAX_N = 7
COGRAPH_SUBGRAPH_MAX_N = 6
P5_STRUCTURE_MAX_N = 8


@lru_cache(maxsize=8192)
def _dl(g: Graph) -> ExactSpectrum:
    return exact_spectrum(distance_laplacian(g))


@lru_cache(maxsize=8192)
def _lap(g: Graph) -> ExactSpectrum:
    return exact_spectrum(laplacian(g))


def interlacing_check(g: Graph, subset: Sequence[int], tolerance: float = 1e-7) -> bool:
    """
    Eigenvalues of the principal submatrix of the distance Laplacian on ``subset`` interlace
    those of the whole matrix: ``lam_i >= theta_i >= lam_{n-m+i}``.
    """
    keep = sorted(set(subset))
    if not keep or len(keep) >= g.n:
        raise DlmkitError(f"Interlacing needs a nonempty proper vertex subset, got {list(subset)}")
    a = distance_laplacian(g)
    lam = numeric_eigenvalues(a)
    theta = numeric_eigenvalues(a.principal_submatrix(keep))
    n, m = g.n, len(keep)
    return all(lam[i] >= theta[i] - tolerance and theta[i] >= lam[n - m + i] - tolerance for i in range(m))


def exact_pipeline_suite(graphs: Sequence[Graph]) -> SuiteResult:
    check = SuiteCheck("exact-pipeline")
    for g in graphs:
        code = to_graph6(g)
        poly = char_poly(distance_laplacian(g))
        s = _dl(g)
        check.record(s.order == g.n, code, f"multiplicities sum to {s.order}")
        check.record(s.multiplicity_of(0) == 1, code, f"eigenvalue 0 has multiplicity {s.multiplicity_of(0)}")
        check.record(squarefree_decompose(poly).expand() == poly, failure_witness(g), "square-free factors do not multiply back")
    return check.result()


def numeric_agreement_suite(graphs: Sequence[Graph]) -> SuiteResult:
    check = SuiteCheck("numeric-agreement")
    for g in graphs:
        m = distance_laplacian(g)
        numeric = numeric_eigenvalues(m)
        exact = _dl(g).as_multiset()
        tol = agreement_tolerance(m)
        worst = max(abs(x - float(r.midpoint)) - float(r.width) for x, r in zip(numeric, exact))
        check.record(worst <= tol, failure_witness(g), f"numeric gap {worst:.3g} above {tol:.3g}")
    return check.result()


def transfer_rule_suite(graphs: Sequence[Graph]) -> SuiteResult:
    """Diameter-2 graphs: distance Laplacian spectrum from the Laplacian one, and shared eigenvectors."""
    check = SuiteCheck("diameter-two-transfer")
    for g in graphs:
        code = to_graph6(g)
        if distance_table(g).diameter > 2:
            try:
                dl_spectrum_from_laplacian(g)
                check.record(False, code, "transfer rule accepted a graph of diameter > 2")
            except DiameterTooLarge:
                check.record(True)
            continue
        check.record(dl_spectrum_from_laplacian(g).same_as(_dl(g)), failure_witness(g), "spectra differ")
        values, vectors = numeric_eigenpairs(laplacian(g))
        dl = distance_laplacian(g).to_numpy()
        n = g.n
        for i in range(n - 1):
            v = vectors[:, i]
            residual = float(np.linalg.norm(dl @ v - (2 * n - values[i]) * v))
            check.record(residual <= EIGENSPACE_TOLERANCE, code, f"eigenvector {i} residual {residual:.3g}")
    return check.result()


def complement_bound_suite(graphs: Sequence[Graph]) -> SuiteResult:
    """Second-smallest eigenvalue is at least n; equality and multiplicity track the complement's components."""
    check = SuiteCheck("second-smallest-bound")
    for g in graphs:
        if g.n < 2:
            continue
        code = to_graph6(g)
        s = _dl(g)
        n = g.n
        w = connected_component_count(complement(g))
        order = compare_roots(s.eigenvalue_at(n - 1), RealRoot.exact(n))
        check.record(order >= 0, code, "second-smallest eigenvalue below n")
        check.record((order == 0) == (w >= 2), code, f"equality with n does not match {w} complement component(s)")
        check.record(s.multiplicity_of(n) == w - 1, code, f"eigenvalue n has multiplicity {s.multiplicity_of(n)}, complement has {w} components")
    return check.result()


def transmission_bound_suite(graphs: Sequence[Graph]) -> SuiteResult:
    """Largest eigenvalue is at least max Tr + 1, with equality only on complete graphs."""
    check = SuiteCheck("transmission-bound")
    for g in graphs:
        code = to_graph6(g)
        max_tr = max(sum(row) for row in distance_table(g).d)
        order = compare_roots(_dl(g).largest().root, RealRoot.exact(max_tr + 1))
        check.record(order >= 0, code, f"largest eigenvalue below max Tr + 1 = {max_tr + 1}")
        check.record((order == 0) == (g == complete_graph(g.n)), code, "equality case is not a complete graph")
    return check.result()


def edge_deletion_suite(graphs: Sequence[Graph], samples: int, rng: random.Random) -> SuiteResult:
    """Deleting a non-bridge edge never decreases any sorted eigenvalue."""
    check = SuiteCheck("edge-deletion-monotone")
    candidates = [g for g in graphs if g.edge_count() >= g.n]
    if not candidates:
        return check.result()
    for _ in range(samples):
        g = rng.choice(candidates)
        edges = g.edges()
        rng.shuffle(edges)
        for u, v in edges:
            h = remove_edge(g, u, v)
            if is_connected(h):
                break
        else:
            continue
        before = _dl(g).as_multiset()
        after = _dl(h).as_multiset()
        ok = all(compare_roots(a, b) >= 0 for a, b in zip(after, before))
        check.record(ok, f"{to_graph6(g)} -{u}{v}", "an eigenvalue decreased after deleting the edge")
    return check.result()


def _equal_cliques_plus_isolated(g: Graph) -> bool:
    sizes = set()
    for part in components(g):
        if len(part) == 1:
            continue
        sub = induced_subgraph(g, part)
        if sub.edge_count() != len(part) * (len(part) - 1) // 2:
            return False
        sizes.add(len(part))
    return len(sizes) == 1


def laplacian_identities_suite(n: int) -> List[SuiteResult]:
    """Zero multiplicity, two-valued spectra, complement rule and join rule over all graphs on n vertices."""
    zero = SuiteCheck("laplacian-zero-multiplicity")
    two = SuiteCheck("laplacian-two-distinct")
    comp = SuiteCheck("laplacian-complement-rule")
    joined = SuiteCheck("laplacian-join-rule")
    for g in all_graphs(n):
        code = to_graph6(g)
        s = _lap(g)
        zero.record(s.multiplicity_of(0) == connected_component_count(g), code, "0 multiplicity differs from component count")
        two.record((s.distinct_count() == 2) == _equal_cliques_plus_isolated(g), code, f"{s.distinct_count()} distinct values")
        comp.record(complement_laplacian_spectrum(s, n).same_as(_lap(complement(g))), code, "complement rule disagrees")
    for k in range(1, n):
        for g in all_graphs(k):
            for h in all_graphs(n - k):
                direct = _lap(join(g, h))
                rule = join_laplacian_spectrum(_lap(g), k, _lap(h), n - k)
                joined.record(rule.same_as(direct), f"{to_graph6(g)} + {to_graph6(h)}",
                              f"rule {rule.render_text()} vs direct {direct.render_text()}")
    return [zero.result(), two.result(), comp.result(), joined.result()]


def _every_connected_induced(g: Graph, predicate: Callable[[Graph], bool], min_size: int = 1) -> bool:
    for size in range(min_size, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            sub = induced_subgraph(g, subset)
            if is_connected(sub) and not predicate(sub):
                return False
    return True


def cograph_suite(n: int) -> SuiteResult:
    check = SuiteCheck("cograph-equivalences")
    for g in all_graphs(n):
        code = to_graph6(g)
        cograph = is_cograph(g)
        check.record(cograph == is_p4_free(g), code, "recursive cograph test disagrees with P4-freeness")
        if n <= COGRAPH_SUBGRAPH_MAX_N:
            small_diameter = _every_connected_induced(g, lambda s: distance_table(s).diameter <= 2)
            check.record(cograph == small_diameter, code, "diameter characterization disagrees")
            split = _every_connected_induced(g, lambda s: not is_connected(complement(s)), min_size=2)
            check.record(cograph == split, code, "complement characterization disagrees")
    return check.result()


def p5_structure_suite(graphs: Sequence[Graph]) -> SuiteResult:
    """P5-free graphs have diameter at most 3; at diameter 3 they contain a characterizing pattern or are J-graphs."""
    check = SuiteCheck("p5-free-structure")
    for g in graphs:
        if not is_p5_free(g):
            continue
        code = to_graph6(g)
        d = distance_table(g).diameter
        check.record(d <= 3, code, f"P5-free with diameter {d}")
        # the pattern statements need five vertices
        if d != 3 or g.n < 5:
            continue
        found = contained_patterns(g, ["I1", "I2", "I3", "I4", "I5"])
        check.record(bool(found), code, "none of I1..I5 induced")
        if not set(found) & {"I1", "I2", "I4", "I5"}:
            check.record(j_graph_recognize(g) is not None, code, "not recognized as J(a,b)")
    return check.result()


def class_member_suite(n: int) -> List[SuiteResult]:
    """Statements about the members of the multiplicity n-3 class."""
    blocks = SuiteCheck("five-vertex-blocks")
    forbidden = SuiteCheck("forbidden-j-patterns")
    cographs = SuiteCheck("members-are-cographs")
    if n < 5:
        return [blocks.result(), forbidden.result(), cographs.result()]
    for spec, g in expected_members(n):
        code = to_graph6(g)
        m = distance_laplacian(g)
        top = _dl(g).largest().root
        numeric_top = float(top.midpoint)
        for subset in itertools.combinations(range(n), 5):
            sub = m.principal_submatrix(subset)
            poly = char_poly(sub)
            exact_mult = squarefree_decompose(poly).exponent_of(top)
            blocks.record(exact_mult >= 2, code, f"{spec.label()} block {subset}: exact multiplicity {exact_mult}")
            close = sum(1 for x in numeric_eigenvalues(sub) if abs(x - numeric_top) <= 1e-7 * max(1.0, numeric_top))
            blocks.record(close >= 2, code, f"{spec.label()} block {subset}: {close} numeric copies")
        if n >= 6:
            hits = contained_patterns(g, ["J1", "J2", "J3"])
            forbidden.record(not hits, code, f"{spec.label()} contains {', '.join(hits)}")
            cographs.record(is_p4_free(g), code, f"{spec.label()} contains an induced P4")
    return [blocks.result(), forbidden.result(), cographs.result()]


def interlacing_suite(graphs: Sequence[Graph], samples: int, rng: random.Random, tolerance: float) -> SuiteResult:
    check = SuiteCheck("interlacing")
    candidates = [g for g in graphs if g.n >= 2]
    for _ in range(samples if candidates else 0):
        g = rng.choice(candidates)
        size = rng.randint(1, g.n - 1)
        subset = sorted(rng.sample(range(g.n), size))
        check.record(interlacing_check(g, subset, tolerance), f"{to_graph6(g)} {subset}", "interlacing violated")
    return check.result()


def _merge_by_name(results: Sequence[SuiteResult]) -> List[SuiteResult]:
    """One result per suite name, in first-seen order; a suite fails if any part failed."""
    merged: dict[str, SuiteResult] = {}
    for r in results:
        if r.name not in merged:
            merged[r.name] = r.model_copy(deep=True)
            continue
        into = merged[r.name]
        into.checked += r.checked
        into.counterexamples.extend(c for c in r.counterexamples if c not in into.counterexamples)
        into.details.extend(r.details)
        if r.status == SuiteStatus.FAIL:
            into.status = SuiteStatus.FAIL
    return list(merged.values())


def property_suite(
    n: int,
    samples: int = 1000,
    seed: int = 0,
    settings: Optional[Settings] = None,
    show_progress: bool = False,
    min_n: Optional[int] = None,
) -> SuiteReport:
    """
    Run every property suite for graphs on ``min_n..n`` vertices (just ``n`` by default).

    Sampled suites draw from the pooled graphs and are deterministic given ``seed``. Suites with
    their own order caps skip the orders above the cap.
    """
    settings = settings or get_settings()
    low = n if min_n is None else min_n
    if not 2 <= low <= n <= settings.max_enumeration_n:
        raise EnumerationError(f"Property suites need 2 <= min_n <= n <= {settings.max_enumeration_n}, got {low}..{n}")
    rng = random.Random(seed)
    orders = range(low, n + 1)
    graphs = [g for k in orders for g in connected_graphs(k, show_progress)]
    start = time.monotonic()
    logger.info(f"Property suites for n={low}..{n} over {len(graphs)} connected graphs, seed={seed}, samples={samples}")

    results = [
        exact_pipeline_suite(graphs),
        numeric_agreement_suite(graphs),
        transfer_rule_suite(graphs),
        complement_bound_suite(graphs),
        transmission_bound_suite(graphs),
        edge_deletion_suite(graphs, samples, rng),
        interlacing_suite(graphs, samples, rng, settings.numeric_tolerance),
    ]
    for k in sorted({min(k, LAPLACIAN_IDENTITY_MAX_N) for k in orders}):
        results.extend(laplacian_identities_suite(k))
    for k in sorted({min(k, COGRAPH_MAX_N) for k in orders}):
        results.append(cograph_suite(k))
    if low <= P5_STRUCTURE_MAX_N:
        results.append(p5_structure_suite([g for g in graphs if g.n <= P5_STRUCTURE_MAX_N]))
    for k in orders:
        results.extend(class_member_suite(k))
    suites = _merge_by_name(results)

    verdict = Verdict.MATCH if all(s.status == SuiteStatus.PASS for s in suites) else Verdict.MISMATCH
    logger.info(f"Property suites for n={low}..{n} finished in {time.monotonic() - start:.2f}s: {verdict.value}")
    return SuiteReport(n=n, min_n=low, seed=seed, samples=samples, verdict=verdict, suites=suites)
