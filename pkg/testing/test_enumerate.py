"""
Tests for connected-graph enumeration and canonical forms
"""

import random

import networkx as nx
import pytest

from conftest import to_networkx
from dlmkit.core.graph import Graph, complement, from_edges, is_connected, relabel
from dlmkit.core.graph6 import to_graph6
from dlmkit.enumerate import (
    all_graphs,
    canonical_form,
    canonical_relabel,
    connected_graphs,
    enumerate_connected,
)
from dlmkit.errors import CanonicalFormError, EnumerationError
from dlmkit.families import cycle_graph, path_graph

CONNECTED_COUNTS = [(2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)]
ALL_COUNTS = [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)]


def _from_networkx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(h.nodes())}
    return from_edges(h.number_of_nodes(), [(index[u], index[v]) for u, v in h.edges()])


@pytest.mark.parametrize("n, count", CONNECTED_COUNTS)
def test_connected_counts(n, count):
    graphs = list(enumerate_connected(n))
    assert len(graphs) == count
    assert all(is_connected(g) and g.n == n for g in graphs)
    codes = [to_graph6(g) for g in graphs]
    assert codes == sorted(codes)
    assert len(set(codes)) == count


@pytest.mark.slow
@pytest.mark.parametrize("n, count", [(8, 11117), (9, 261080)])
def test_connected_counts_large(n, count):
    assert len(connected_graphs(n)) == count


@pytest.mark.parametrize("n, count", ALL_COUNTS)
def test_all_graph_counts(n, count):
    assert len(all_graphs(n)) == count


def test_matches_graph_atlas():
    atlas = {}
    for h in nx.graph_atlas_g():
        if 2 <= h.number_of_nodes() <= 6 and nx.is_connected(h):
            g = canonical_relabel(_from_networkx(h))
            atlas.setdefault(g.n, set()).add(to_graph6(g))
    for n in range(2, 7):
        assert {to_graph6(g) for g in connected_graphs(n)} == atlas[n]


def test_members_are_canonical():
    for g in connected_graphs(6):
        assert canonical_relabel(g) == g


def test_canonical_relabel_identifies_isomorphic_graphs():
    rng = random.Random(7)
    for g in connected_graphs(6)[::7]:
        perm = list(range(6))
        rng.shuffle(perm)
        assert canonical_relabel(relabel(g, perm)) == canonical_relabel(g)


def test_canonical_form():
    rng = random.Random(11)
    graphs = list(connected_graphs(5))
    forms = set()
    for g in graphs:
        perm = list(range(5))
        rng.shuffle(perm)
        form = canonical_form(g)
        assert canonical_form(relabel(g, perm)) == form
        assert len(form.bits) == 10
        forms.add(form)
    assert len(forms) == len(graphs)
    # C5 and P4 are self-complementary
    assert canonical_form(complement(cycle_graph(5))) == canonical_form(cycle_graph(5))
    assert canonical_form(complement(path_graph(4))) == canonical_form(path_graph(4))
    assert canonical_form(path_graph(5)) != canonical_form(cycle_graph(5))
    with pytest.raises(CanonicalFormError):
        canonical_form(path_graph(11))


def test_enumeration_range():
    with pytest.raises(EnumerationError):
        enumerate_connected(1)
    with pytest.raises(EnumerationError):
        enumerate_connected(10)
    with pytest.raises(EnumerationError):
        all_graphs(8)


def test_every_labeled_graph_is_covered_once():
    for n in (4, 5, 6):
        emitted = {to_graph6(g) for g in connected_graphs(n)}
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        seen = set()
        for mask in range(1 << len(pairs)):
            g = from_edges(n, [pair for k, pair in enumerate(pairs) if mask >> k & 1])
            if is_connected(g):
                seen.add(to_graph6(canonical_relabel(g)))
        assert seen == emitted
