"""
Simple undirected graphs on dense vertex ids with one adjacency bitset per row.

Everything here is a pure function over immutable values.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from dlmkit.errors import DisconnectedGraph, GraphError

logger = logging.getLogger(__name__)

MAX_VERTICES = 64


@dataclass(frozen=True, slots=True)
class Graph:
    """
    Immutable simple graph on vertices ``0..n-1``.

    ``adj[i]`` is an integer whose bit ``j`` is set iff ``i ~ j``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"Vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError(f"Expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"Row {i} references a vertex >= {self.n}")
            if row >> i & 1:
                raise GraphError(f"Loop at vertex {i}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"Asymmetric adjacency between {i} and {j}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i]) if i < j]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def iter_bits(row: int) -> Iterator[int]:
    """Yield the positions of set bits in increasing order."""
    while row:
        low = row & -row
        yield low.bit_length() - 1
        row ^= low


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """
    Build a graph from an edge list; repeated pairs collapse to one edge.

    Raises:
        GraphError: on a vertex outside ``0..n-1`` or a loop pair
    """
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"Vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"Edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"Loop pair ({u}, {v}) is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def _component_mask(g: Graph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.adj[v]
        frontier = reach & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, ordered by smallest vertex."""
    remaining = (1 << g.n) - 1
    result = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        mask = _component_mask(g, start, remaining)
        result.append(list(iter_bits(mask)))
        remaining &= ~mask
    return result


def connected_component_count(g: Graph) -> int:
    """Number of connected components; the empty graph on 0 vertices has none."""
    return len(components(g))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    return _component_mask(g, 0, full) == full


@dataclass(frozen=True, slots=True)
class DistanceTable:
    """All-pairs hop distances of a connected graph."""

    n: int
    d: tuple[tuple[int, ...], ...]

    @property
    def diameter(self) -> int:
        return max((max(row) for row in self.d), default=0)

    def row(self, v: int) -> tuple[int, ...]:
        return self.d[v]


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in iter_bits(g.adj[v]):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def distance_table(g: Graph) -> DistanceTable:
    """
    BFS from every vertex.

    Raises:
        DisconnectedGraph: if some pair is unreachable
    """
    rows = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if -1 in dist:
            raise DisconnectedGraph(
                f"Vertex {dist.index(-1)} is unreachable from {v}; distances need a connected graph"
            )
        rows.append(tuple(dist))
    return DistanceTable(g.n, tuple(rows))


def diameter(g: Graph) -> int:
    return distance_table(g).diameter


def transmissions(g: Graph) -> list[int]:
    """``Tr(v)``: sum of distances from ``v`` to every other vertex."""
    return [sum(row) for row in distance_table(g).d]


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1`` keeps ids ``0..n1-1``; ``g2`` is shifted to ``n1..n1+n2-1``."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphError(f"Union has {n} vertices, above the cap of {MAX_VERTICES}")
    return Graph(n, g1.adj + tuple(row << g1.n for row in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphError(f"Join has {n} vertices, above the cap of {MAX_VERTICES}")
    left = (1 << g1.n) - 1
    right = ((1 << g2.n) - 1) << g1.n
    rows = tuple(row | right for row in g1.adj) + tuple((row << g1.n) | left for row in g2.adj)
    return Graph(n, rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """
    Subgraph induced by ``vertices``, relabeled ``0..k-1`` in increasing original order.

    Raises:
        GraphError: on an empty selection or an id outside the graph
    """
    keep = sorted(set(vertices))
    if not keep:
        raise GraphError("Induced subgraph needs a nonempty vertex set")
    if keep[0] < 0 or keep[-1] >= g.n:
        raise GraphError(f"Vertex set {keep} not inside 0..{g.n - 1}")
    position = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in iter_bits(g.adj[v]):
            if w in position:
                row |= 1 << position[w]
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError(f"{list(perm)} is not a permutation of 0..{g.n - 1}")
    rows = [0] * g.n
    for u, v in g.edges():
        rows[perm[u]] |= 1 << perm[v]
        rows[perm[v]] |= 1 << perm[u]
    return Graph(g.n, tuple(rows))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"Loop pair ({u}, {v}) is not allowed")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))
