"""
Induced-subgraph detection for the small forbidden and characterizing patterns, plus the
structural predicates built on it (P5-free, cograph, J(a,b) recognition).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Dict, List, NamedTuple, Optional, Tuple

from dlmkit.core.graph import (
    Graph,
    bfs_distances,
    complement,
    components,
    induced_subgraph,
    is_connected,
    iter_bits,
)
from dlmkit.core.graph6 import parse_graph6
from dlmkit.errors import DlmkitError

logger = logging.getLogger(__name__)

PATTERN_FILE = "patterns.g6"


@dataclass(frozen=True, slots=True)
class PatternGraph:
    name: str
    graph: Graph


@lru_cache(maxsize=1)
def load_patterns() -> Dict[str, PatternGraph]:
    """Read the pattern fixture shipped with the package."""
    text = resources.files("dlmkit.data").joinpath(PATTERN_FILE).read_text(encoding="ascii")
    patterns = {}
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, code = line.split()
        patterns[name] = PatternGraph(name, parse_graph6(code, line_number))
    return patterns


def pattern(name: str) -> PatternGraph:
    try:
        return load_patterns()[name]
    except KeyError:
        raise DlmkitError(f"Unknown pattern {name!r}") from None


def _search_order(p: Graph) -> List[int]:
    """Pattern vertices ordered so each one (after the first) touches an earlier one when possible."""
    order = [max(range(p.n), key=p.degree)]
    placed = 1 << order[0]
    while len(order) < p.n:
        frontier = [v for v in range(p.n) if not placed >> v & 1]
        linked = [v for v in frontier if p.adj[v] & placed]
        pool = linked or frontier
        v = max(pool, key=lambda w: ((p.adj[w] & placed).bit_count(), p.degree(w)))
        order.append(v)
        placed |= 1 << v
    return order


def find_induced(g: Graph, p: Graph) -> Optional[Tuple[int, ...]]:
    """
    An injection ``phi`` from pattern vertices to host vertices with ``u ~ v`` iff
    ``phi(u) ~ phi(v)``, or ``None``. Backtracking with degree pruning.
    """
    if p.n > g.n:
        return None
    if p.n == 0:
        return ()
    order = _search_order(p)
    host_degree = g.degrees()
    mapping = [-1] * p.n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == p.n:
            return True
        pv = order[depth]
        need = p.degree(pv)
        for hv in range(g.n):
            if used >> hv & 1 or host_degree[hv] < need:
                continue
            ok = True
            for earlier in order[:depth]:
                if p.has_edge(pv, earlier) != g.has_edge(hv, mapping[earlier]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[pv] = hv
            used |= 1 << hv
            if extend(depth + 1):
                return True
            used &= ~(1 << hv)
            mapping[pv] = -1
        return False

    return tuple(mapping) if extend(0) else None


def contains_induced(g: Graph, p: PatternGraph) -> bool:
    return find_induced(g, p.graph) is not None


def is_p5_free(g: Graph) -> bool:
    return not contains_induced(g, pattern("P5"))


def is_p4_free(g: Graph) -> bool:
    return not contains_induced(g, pattern("P4"))


def is_cograph(g: Graph) -> bool:
    """
    Recursive test: a single vertex, or a disconnected graph whose components are cographs,
    or a graph whose complement is disconnected with cograph components.
    """
    if g.n <= 1:
        return True
    parts = components(g)
    if len(parts) == 1:
        parts = components(complement(g))
        if len(parts) == 1:
            return False
    return all(is_cograph(induced_subgraph(g, part)) for part in parts)


def contained_patterns(g: Graph, names: List[str]) -> List[str]:
    return [name for name in names if contains_induced(g, pattern(name))]


class JGraphMatch(NamedTuple):
    a: int
    b: int
    roots: Tuple[int, int]


def j_graph_recognize(g: Graph) -> Optional[JGraphMatch]:
    """
    Parameters and a root pair if ``g`` is some J(a, b); ``a`` counts the first root's pendants.
    """
    if g.n < 4 or not is_connected(g):
        return None
    full = (1 << g.n) - 1
    for r1 in range(g.n):
        dist = bfs_distances(g, r1)
        for r2 in range(r1 + 1, g.n):
            if dist[r2] != 3:
                continue
            left, right = g.adj[r1], g.adj[r2]
            if left & right or (left | right | 1 << r1 | 1 << r2) != full:
                continue
            if _is_j_shape(g, r1, r2, left, right):
                return JGraphMatch(left.bit_count(), right.bit_count(), (r1, r2))
    return None


def _is_j_shape(g: Graph, r1: int, r2: int, left: int, right: int) -> bool:
    for x in iter_bits(left):
        if g.adj[x] != right | 1 << r1:
            return False
    for y in iter_bits(right):
        if g.adj[y] != left | 1 << r2:
            return False
    return True


def pattern_distance_block(p: PatternGraph) -> Tuple[Tuple[int, ...], ...]:
    """
    Off-diagonal part of the distance Laplacian block an induced copy of ``p`` occupies in a
    host of diameter 2: -1 on edges, -2 on non-edges, 0 on the diagonal.
    """
    g = p.graph
    return tuple(
        tuple(0 if i == j else (-1 if g.has_edge(i, j) else -2) for j in range(g.n))
        for i in range(g.n)
    )
