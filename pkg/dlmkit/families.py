"""
Constructors for the named graph families and their closed-form distance Laplacian spectra.

Labelings are fixed so emitted graph6 lines are stable: multipartite parts take consecutive
ids in declaration order, and "+e" edges join the lexicographically first non-adjacent pair.
"""

import logging
from typing import Callable, Dict, List, Tuple

from dlmkit.core.graph import (
    Graph,
    add_edge,
    complete_graph,
    empty_graph,
    from_edges,
    join,
)
from dlmkit.errors import FamilyError
from dlmkit.linalg.roots import ExactSpectrum
from dlmkit.models import FamilySpec, FamilyTag

logger = logging.getLogger(__name__)

CLASSIFIED_TAGS = (
    FamilyTag.COMPLETE_BIPARTITE_2,
    FamilyTag.STAR_PLUS_EDGE,
    FamilyTag.BALANCED_BIPARTITE_PLUS_EDGE,
    FamilyTag.K2_JOIN_EMPTY,
    FamilyTag.K1_JOIN_BALANCED_BIPARTITE,
    FamilyTag.BALANCED_TRIPARTITE,
)

# members whose spectrum has four distinct values, the rest have three
FOUR_VALUED_TAGS = (
    FamilyTag.COMPLETE_BIPARTITE_2,
    FamilyTag.STAR_PLUS_EDGE,
    FamilyTag.BALANCED_BIPARTITE_PLUS_EDGE,
)


def complete_multipartite(parts: List[int]) -> Graph:
    n = sum(parts)
    edges = []
    start = 0
    bounds = []
    for size in parts:
        bounds.append((start, start + size))
        start += size
    for i, (lo_i, hi_i) in enumerate(bounds):
        for lo_j, hi_j in bounds[i + 1:]:
            edges.extend((u, v) for u in range(lo_i, hi_i) for v in range(lo_j, hi_j))
    return from_edges(n, edges)


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise FamilyError(f"A cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    if n < 2:
        raise FamilyError(f"A star needs at least 2 vertices, got {n}")
    return complete_multipartite([1, n - 1])


def j_graph(a: int, b: int) -> Graph:
    """
    Roots 0 and a+b+1; vertex 0 sees pendants 1..a, the other root sees a+1..a+b, and the
    two pendant sets are joined completely.
    """
    if a < 1 or b < 1:
        raise FamilyError(f"J(a,b) needs a, b >= 1, got a={a}, b={b}")
    n = a + b + 2
    left = range(1, a + 1)
    right = range(a + 1, a + b + 1)
    edges = [(0, x) for x in left] + [(n - 1, y) for y in right]
    edges.extend((x, y) for x in left for y in right)
    return from_edges(n, edges)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FamilyError(message)


def _half(n: int, tag: FamilyTag) -> int:
    _require(n % 2 == 0 and n >= 4, f"{tag.value} needs an even n >= 4, got {n}")
    return n // 2


def _build_classified(tag: FamilyTag, n: int) -> Graph:
    if tag == FamilyTag.COMPLETE_BIPARTITE_2:
        _require(n >= 4, f"{tag.value} needs n >= 4, got {n}")
        return complete_multipartite([2, n - 2])
    if tag == FamilyTag.STAR_PLUS_EDGE:
        _require(n >= 3, f"{tag.value} needs n >= 3, got {n}")
        return add_edge(star_graph(n), 1, 2)
    if tag == FamilyTag.BALANCED_BIPARTITE_PLUS_EDGE:
        k = _half(n, tag)
        return add_edge(complete_multipartite([k, k]), 0, 1)
    if tag == FamilyTag.K2_JOIN_EMPTY:
        _require(n >= 3, f"{tag.value} needs n >= 3, got {n}")
        return join(complete_graph(2), empty_graph(n - 2))
    if tag == FamilyTag.K1_JOIN_BALANCED_BIPARTITE:
        _require(n % 2 == 1 and n >= 3, f"{tag.value} needs an odd n >= 3, got {n}")
        k = (n - 1) // 2
        return join(complete_graph(1), complete_multipartite([k, k]))
    if tag == FamilyTag.BALANCED_TRIPARTITE:
        _require(n % 3 == 0 and n >= 3, f"{tag.value} needs n divisible by 3, got {n}")
        return complete_multipartite([n // 3] * 3)
    raise FamilyError(f"{tag.value} is not one of the classified families")


def build(spec: FamilySpec) -> Graph:
    """
    The labeled construction for ``spec``.

    Raises:
        FamilyError: on parameters violating the family's existence conditions
    """
    tag = spec.tag
    if tag == FamilyTag.J_GRAPH:
        return j_graph(spec.a, spec.b)
    if tag == FamilyTag.COMPLETE_MULTIPARTITE:
        return complete_multipartite(spec.parts)
    n = spec.n
    if tag == FamilyTag.COMPLETE:
        return complete_graph(n)
    if tag == FamilyTag.PATH:
        return path_graph(n)
    if tag == FamilyTag.CYCLE:
        return cycle_graph(n)
    if tag == FamilyTag.STAR:
        return star_graph(n)
    return _build_classified(tag, n)


def family_applies(tag: FamilyTag, n: int) -> bool:
    """Whether a classified family has a member on ``n`` vertices (n >= 6)."""
    if tag == FamilyTag.BALANCED_BIPARTITE_PLUS_EDGE:
        return n % 2 == 0
    if tag == FamilyTag.K1_JOIN_BALANCED_BIPARTITE:
        return n % 2 == 1
    if tag == FamilyTag.BALANCED_TRIPARTITE:
        return n % 3 == 0
    return tag in CLASSIFIED_TAGS


def classified_family_members(n: int) -> List[Tuple[FamilySpec, Graph]]:
    """
    Every graph on ``n`` vertices whose largest distance Laplacian eigenvalue has
    multiplicity ``n - 3``, with parity and divisibility filtering.

    Raises:
        FamilyError: if n < 6
    """
    if n < 6:
        raise FamilyError(f"The six-family classification holds for n >= 6, got {n}")
    members = []
    for tag in CLASSIFIED_TAGS:
        if family_applies(tag, n):
            spec = FamilySpec(tag=tag, n=n)
            members.append((spec, build(spec)))
    logger.debug(f"{len(members)} classified members for n={n}")
    return members


_CLOSED_FORMS: Dict[FamilyTag, Callable[[int], List[Tuple[int, int]]]] = {
    FamilyTag.COMPLETE_BIPARTITE_2: lambda n: [(2 * n - 2, n - 3), (n + 2, 1), (n, 1), (0, 1)],
    FamilyTag.BALANCED_BIPARTITE_PLUS_EDGE: lambda n: [(3 * n // 2, n - 3), (3 * n // 2 - 2, 1), (n, 1), (0, 1)],
    FamilyTag.STAR_PLUS_EDGE: lambda n: [(2 * n - 1, n - 3), (2 * n - 3, 1), (n, 1), (0, 1)],
    FamilyTag.K2_JOIN_EMPTY: lambda n: [(2 * n - 2, n - 3), (n, 2), (0, 1)],
    FamilyTag.K1_JOIN_BALANCED_BIPARTITE: lambda n: [((3 * n - 1) // 2, n - 3), (n, 2), (0, 1)],
    FamilyTag.BALANCED_TRIPARTITE: lambda n: [(4 * n // 3, n - 3), (n, 2), (0, 1)],
}


def closed_form_dl_spectrum(spec: FamilySpec, n: int) -> ExactSpectrum:
    """
    The integer spectrum given by the closed formulas for the six classified families.

    Raises:
        FamilyError: for tags outside the six, or an ``n`` the family does not exist on
    """
    if spec.tag not in _CLOSED_FORMS:
        raise FamilyError(f"No closed-form spectrum for {spec.tag.value}")
    # existence check only
    _build_classified(spec.tag, n)
    values = []
    for value, mult in _CLOSED_FORMS[spec.tag](n):
        values.extend([value] * mult)
    return ExactSpectrum.from_integers(values)


def small_n_members(n: int) -> List[Tuple[FamilySpec, Graph]]:
    """
    The class for n = 4 (multiplicity 1) and n = 5 (multiplicity 2), found by exhaustive search.

    Raises:
        FamilyError: for any other n
    """
    if n == 4:
        specs = [
            FamilySpec(tag=FamilyTag.PATH, n=4),
            FamilySpec(tag=FamilyTag.STAR_PLUS_EDGE, n=4),
            FamilySpec(tag=FamilyTag.K2_JOIN_EMPTY, n=4),
        ]
    elif n == 5:
        specs = [
            FamilySpec(tag=FamilyTag.COMPLETE_BIPARTITE_2, n=5),
            FamilySpec(tag=FamilyTag.STAR_PLUS_EDGE, n=5),
            FamilySpec(tag=FamilyTag.K2_JOIN_EMPTY, n=5),
            FamilySpec(tag=FamilyTag.K1_JOIN_BALANCED_BIPARTITE, n=5),
            FamilySpec(tag=FamilyTag.CYCLE, n=5),
        ]
    else:
        raise FamilyError(f"Small-case lists exist for n = 4 and 5 only, got {n}")
    return [(spec, build(spec)) for spec in specs]


def expected_members(n: int) -> List[Tuple[FamilySpec, Graph]]:
    """The class with multiplicity ``n - 3`` for any n >= 4."""
    return small_n_members(n) if n < 6 else classified_family_members(n)


def extremal_members(n: int, k: int) -> List[Tuple[FamilySpec, Graph]]:
    """
    The classes with multiplicity ``n - 1`` (complete graphs) and ``n - 2``
    (the star and, for even n, the balanced complete bipartite graph).

    Raises:
        FamilyError: for k outside {n-1, n-2} or n too small
    """
    if k == n - 1:
        _require(n >= 2, f"Multiplicity n-1 needs n >= 2, got {n}")
        spec = FamilySpec(tag=FamilyTag.COMPLETE, n=n)
        return [(spec, build(spec))]
    if k == n - 2:
        _require(n >= 3, f"Multiplicity n-2 needs n >= 3, got {n}")
        specs = [FamilySpec(tag=FamilyTag.STAR, n=n)]
        if n % 2 == 0:
            specs.append(FamilySpec(tag=FamilyTag.COMPLETE_MULTIPARTITE, n=n, parts=[n // 2, n // 2]))
        return [(spec, build(spec)) for spec in specs]
    raise FamilyError(f"Only multiplicities n-1 and n-2 have extremal lists, got k={k} for n={n}")
