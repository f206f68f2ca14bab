"""
Tests for induced pattern detection, cograph and P5-free predicates, and J(a,b) recognition
"""

import itertools

import networkx as nx
import pytest

from conftest import to_networkx
from dlmkit.core.graph import complete_graph, induced_subgraph, relabel
from dlmkit.enumerate import all_graphs, connected_graphs
from dlmkit.errors import DlmkitError
from dlmkit.families import complete_multipartite, cycle_graph, j_graph, path_graph
from dlmkit.patterns import (
    contains_induced,
    find_induced,
    is_cograph,
    is_p4_free,
    is_p5_free,
    j_graph_recognize,
    load_patterns,
    pattern,
    pattern_distance_block,
)

BLOCK_J1 = (
    (0, -1, -2, -2, -1),
    (-1, 0, -1, -2, -2),
    (-2, -1, 0, -1, -2),
    (-2, -2, -1, 0, -1),
    (-1, -2, -2, -1, 0),
)
BLOCK_J2 = (
    (0, -1, -2, -2, -1),
    (-1, 0, -1, -2, -1),
    (-2, -1, 0, -1, -2),
    (-2, -2, -1, 0, -1),
    (-1, -1, -2, -1, 0),
)
BLOCK_J3 = (
    (0, -1, -2, -2, -1),
    (-1, 0, -1, -2, -1),
    (-2, -1, 0, -1, -1),
    (-2, -2, -1, 0, -1),
    (-1, -1, -1, -1, 0),
)


def _brute_force_contains(g, p):
    target = to_networkx(p)
    for subset in itertools.combinations(range(g.n), p.n):
        if nx.is_isomorphic(to_networkx(induced_subgraph(g, subset)), target):
            return True
    return False


def test_pattern_fixture():
    patterns = load_patterns()
    assert sorted(patterns) == ["I1", "I2", "I3", "I4", "I5", "J1", "J2", "J3", "P4", "P5"]
    for name, p in patterns.items():
        if name.startswith(("I", "J")):
            # v1 v2 v3 v4 is an induced path
            assert induced_subgraph(p.graph, [0, 1, 2, 3]) == path_graph(4), name
    assert nx.is_isomorphic(to_networkx(pattern("J1").graph), to_networkx(cycle_graph(5)))
    with pytest.raises(DlmkitError):
        pattern("K9")


def test_find_induced_returns_a_valid_embedding():
    g = cycle_graph(6)
    mapping = find_induced(g, pattern("P5").graph)
    assert mapping is not None
    assert induced_subgraph(g, mapping).edge_count() == 4
    p5 = pattern("P5").graph
    for u in range(5):
        for v in range(5):
            if u != v:
                assert p5.has_edge(u, v) == g.has_edge(mapping[u], mapping[v])


def test_detection_matches_brute_force():
    p4 = pattern("P4").graph
    for g in all_graphs(6):
        assert contains_induced(g, pattern("P4")) == _brute_force_contains(g, p4)
    p5 = pattern("P5").graph
    for g in connected_graphs(6):
        assert is_p5_free(g) == (not _brute_force_contains(g, p5))


def test_predicates():
    assert not is_p5_free(path_graph(5))
    assert is_p5_free(path_graph(4))
    assert is_p5_free(cycle_graph(5))
    assert not is_p5_free(cycle_graph(6))
    assert not is_p4_free(path_graph(4))
    assert is_cograph(complete_multipartite([2, 3]))
    assert is_cograph(complete_graph(4))
    assert not is_cograph(cycle_graph(5))


def test_cograph_is_p4_free():
    for n in range(1, 7):
        for g in all_graphs(n):
            assert is_cograph(g) == is_p4_free(g)


@pytest.mark.parametrize("a, b", [(1, 1), (2, 1), (2, 3), (3, 3)])
def test_j_graph_recognition(a, b):
    match = j_graph_recognize(j_graph(a, b))
    assert match is not None
    assert (match.a, match.b) == (a, b)
    shuffled = relabel(j_graph(a, b), list(reversed(range(a + b + 2))))
    match = j_graph_recognize(shuffled)
    assert match is not None
    assert sorted((match.a, match.b)) == sorted((a, b))


def test_j_graph_recognition_rejects_others():
    assert j_graph_recognize(path_graph(5)) is None
    assert j_graph_recognize(cycle_graph(6)) is None
    assert j_graph_recognize(complete_graph(4)) is None


@pytest.mark.parametrize("name, block", [("J1", BLOCK_J1), ("J2", BLOCK_J2), ("J3", BLOCK_J3)])
def test_pattern_distance_blocks(name, block):
    assert pattern_distance_block(pattern(name)) == block
