"""
Generation of all connected graphs on n vertices up to isomorphism, and a pure-Python
canonical form for small graphs.

Generation augments every connected (n-1)-vertex class by a new vertex with a nonempty
neighbourhood; every connected graph arises this way because it has a non-cut vertex.
Duplicates are removed through nauty certificates.
"""

import logging
import time
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

import pynauty
from tqdm import tqdm

from dlmkit.core.graph import Graph, complete_graph, iter_bits, relabel
from dlmkit.core.graph6 import ingest_graph6_stream, to_graph6
from dlmkit.errors import CanonicalFormError, EnumerationError

logger = logging.getLogger(__name__)

CANONICAL_FORM_MAX_N = 10
MAX_BUILTIN_N = 9
# levels above this are regenerated on demand instead of being kept in memory
_CACHED_LEVEL_MAX_N = 8

_levels: Dict[int, Tuple[Graph, ...]] = {}

__all__ = [
    "CanonicalForm",
    "canonical_form",
    "enumerate_connected",
    "connected_graphs",
    "all_graphs",
    "nauty_certificate",
    "canonical_relabel",
    "ingest_graph6_stream",
]


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    """Permutation-maximal upper-triangle bit string (graph6 bit order)."""

    n: int
    bits: str


def canonical_form(g: Graph) -> CanonicalForm:
    """
    Lexicographically largest adjacency bit string over all vertex orders that list
    vertices by non-increasing degree.

    Raises:
        CanonicalFormError: above CANONICAL_FORM_MAX_N vertices
    """
    n = g.n
    if n > CANONICAL_FORM_MAX_N:
        raise CanonicalFormError(f"Canonical form is limited to n <= {CANONICAL_FORM_MAX_N}, got {n}")
    degrees = g.degrees()
    slot_degree = sorted(degrees, reverse=True)
    best: Optional[List[int]] = None
    placed: List[int] = []
    columns: List[int] = []

    def search(pos: int, used: int) -> None:
        nonlocal best
        if pos == n:
            if best is None or columns > best:
                best = columns.copy()
            return
        for v in range(n):
            if used >> v & 1 or degrees[v] != slot_degree[pos]:
                continue
            column = 0
            for u in placed:
                column = column << 1 | (g.adj[u] >> v & 1)
            columns.append(column)
            if best is None or columns >= best[:pos + 1]:
                placed.append(v)
                search(pos + 1, used | 1 << v)
                placed.pop()
            columns.pop()

    search(0, 0)
    bits = "".join(format(col, f"0{j}b") for j, col in enumerate(best or []) if j > 0)
    return CanonicalForm(n, bits)


def nauty_certificate(n: int, rows: Tuple[int, ...]) -> bytes:
    adjacency = {v: list(iter_bits(row)) for v, row in enumerate(rows) if row}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adjacency))


def canonical_relabel(g: Graph) -> Graph:
    """``g`` relabeled by nauty's canonical labeling."""
    if g.n <= 1:
        return g
    adjacency = {v: g.neighbours(v) for v in range(g.n) if g.adj[v]}
    lab = pynauty.canon_label(pynauty.Graph(g.n, adjacency_dict=adjacency))
    perm = [0] * g.n
    for new, old in enumerate(lab):
        perm[old] = new
    return relabel(g, perm)


def _augment(parents: Tuple[Graph, ...], n: int, show_progress: bool, include_isolated: bool = False) -> Tuple[Graph, ...]:
    seen = set()
    children: List[Graph] = []
    new_bit = 1 << (n - 1)
    for parent in tqdm(parents, desc=f"n={n}", unit="graph", disable=not show_progress, leave=False):
        for neighbourhood in range(0 if include_isolated else 1, 1 << (n - 1)):
            rows = tuple(row | new_bit if neighbourhood >> i & 1 else row for i, row in enumerate(parent.adj))
            rows += (neighbourhood,)
            cert = nauty_certificate(n, rows)
            if cert in seen:
                continue
            seen.add(cert)
            children.append(canonical_relabel(Graph(n, rows)))
    children.sort(key=to_graph6)
    return tuple(children)


def connected_graphs(n: int, show_progress: bool = False) -> Tuple[Graph, ...]:
    """
    One representative per isomorphism class of connected graphs on ``n`` vertices,
    canonically labeled and sorted by graph6.

    Raises:
        EnumerationError: for n outside 1..MAX_BUILTIN_N
    """
    if not 1 <= n <= MAX_BUILTIN_N:
        raise EnumerationError(f"Built-in enumeration covers n = 2..{MAX_BUILTIN_N}, got {n}; supply a graph6 corpus")
    if n in _levels:
        return _levels[n]
    if n == 1:
        level: Tuple[Graph, ...] = (complete_graph(1),)
    else:
        parents = connected_graphs(n - 1, show_progress)
        start = time.monotonic()
        level = _augment(parents, n, show_progress)
        logger.info(f"Enumerated {len(level)} connected graphs on {n} vertices in {time.monotonic() - start:.2f}s")
    if n <= _CACHED_LEVEL_MAX_N:
        _levels[n] = level
    return level


def enumerate_connected(n: int, show_progress: bool = False) -> Iterator[Graph]:
    """
    Stream of non-isomorphic connected graphs on ``n`` vertices, 2 <= n <= 9.

    Raises:
        EnumerationError: for n out of range
    """
    if n < 2:
        raise EnumerationError(f"Enumeration needs n >= 2, got {n}")
    return iter(connected_graphs(n, show_progress))


_all_levels: Dict[int, Tuple[Graph, ...]] = {}
ALL_GRAPHS_MAX_N = 7


def all_graphs(n: int) -> Tuple[Graph, ...]:
    """
    One representative per isomorphism class of all graphs (connected or not) on ``n`` vertices.

    Raises:
        EnumerationError: for n outside 1..ALL_GRAPHS_MAX_N
    """
    if not 1 <= n <= ALL_GRAPHS_MAX_N:
        raise EnumerationError(f"All-graph enumeration covers n = 1..{ALL_GRAPHS_MAX_N}, got {n}")
    if n not in _all_levels:
        if n == 1:
            _all_levels[n] = (complete_graph(1),)
        else:
            _all_levels[n] = _augment(all_graphs(n - 1), n, False, include_isolated=True)
    return _all_levels[n]
