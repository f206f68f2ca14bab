"""
Tests for distance Laplacian and Laplacian spectra and the spectral transfer rules
"""

import numpy as np
import pytest

from conftest import family_graph
from dlmkit.core.graph import (
    complement,
    complete_graph,
    diameter,
    disjoint_union,
    empty_graph,
    join,
    relabel,
)
from dlmkit.enumerate import all_graphs, connected_graphs
from dlmkit.errors import DiameterTooLarge, DisconnectedGraph, SpectrumError
from dlmkit.linalg.roots import ExactSpectrum
from dlmkit.models import FamilyTag
from dlmkit.spectra import (
    complement_laplacian_spectrum,
    distance_laplacian,
    dl_spectrum,
    dl_spectrum_from_laplacian,
    join_laplacian_spectrum,
    laplacian,
    laplacian_spectrum,
    spectrum_key,
)


def test_distance_laplacian_entries(p4):
    m = distance_laplacian(p4)
    assert m.entries[0] == (6, -1, -2, -3)
    assert m.entries[1] == (-1, 4, -1, -2)
    assert m.row_sums() == [0, 0, 0, 0]


def test_laplacian_entries_on_disconnected_graph():
    g = disjoint_union(complete_graph(2), empty_graph(1))
    assert laplacian(g).entries == ((1, -1, 0), (-1, 1, 0), (0, 0, 0))
    assert laplacian_spectrum(g).render_text() == "2, 0×2"


def test_known_distance_laplacian_spectra(k24):
    assert dl_spectrum(k24).render_text() == "10×3, 8, 6, 0"
    assert dl_spectrum(family_graph(FamilyTag.K2_JOIN_EMPTY, 6)).render_text() == "10×3, 6×2, 0"
    assert dl_spectrum(complete_graph(5)).render_text() == "5×4, 0"
    assert dl_spectrum(family_graph(FamilyTag.BALANCED_TRIPARTITE, 6)).render_text() == "8×3, 6×2, 0"


def test_path_spectrum_is_irrational(p4):
    s = dl_spectrum(p4)
    assert s.order == 4
    assert s.multiplicity_of(0) == 1
    assert not s.is_integral()
    numeric = np.sort(np.linalg.eigvalsh(distance_laplacian(p4).to_numpy()))[::-1]
    assert np.allclose([float(r) for r in s.as_multiset()], numeric, atol=1e-9)


def test_dl_spectrum_needs_connected_graph():
    with pytest.raises(DisconnectedGraph):
        dl_spectrum(empty_graph(3))


def test_diameter_two_transfer_rule():
    checked = 0
    for n in range(2, 7):
        for g in connected_graphs(n):
            if diameter(g) > 2:
                continue
            assert dl_spectrum_from_laplacian(g).same_as(dl_spectrum(g))
            checked += 1
    assert checked > 50


def test_transfer_rule_rejects_larger_diameter(p4):
    with pytest.raises(DiameterTooLarge):
        dl_spectrum_from_laplacian(p4)
    with pytest.raises(DisconnectedGraph):
        dl_spectrum_from_laplacian(empty_graph(2))


def test_complement_rule_on_all_small_graphs():
    for n in range(1, 6):
        for g in all_graphs(n):
            rule = complement_laplacian_spectrum(laplacian_spectrum(g), n)
            assert rule.same_as(laplacian_spectrum(complement(g)))


def test_join_rule():
    pairs = [
        (complete_graph(2), empty_graph(4)),
        (complete_graph(1), family_graph(FamilyTag.COMPLETE_BIPARTITE_2, 4)),
        (disjoint_union(complete_graph(2), empty_graph(1)), empty_graph(2)),
    ]
    for g, h in pairs:
        rule = join_laplacian_spectrum(laplacian_spectrum(g), g.n, laplacian_spectrum(h), h.n)
        assert rule.same_as(laplacian_spectrum(join(g, h)))


def test_transfer_rules_reject_bad_spectra():
    with pytest.raises(SpectrumError):
        complement_laplacian_spectrum(ExactSpectrum.from_integers([3, 1, 0]), 4)
    with pytest.raises(SpectrumError):
        complement_laplacian_spectrum(ExactSpectrum.from_integers([3, 1, 1]), 3)
    with pytest.raises(SpectrumError):
        complement_laplacian_spectrum(ExactSpectrum.from_integers([5, 0, 0]), 3)
    with pytest.raises(SpectrumError):
        join_laplacian_spectrum(ExactSpectrum.from_integers([2, 0]), 2, ExactSpectrum.from_integers([]), 1)


def test_spectrum_key():
    g = family_graph(FamilyTag.STAR_PLUS_EDGE, 6)
    shuffled = relabel(g, [5, 3, 1, 0, 2, 4])
    assert spectrum_key(g) == spectrum_key(shuffled)
    assert spectrum_key(g) != spectrum_key(family_graph(FamilyTag.COMPLETE_BIPARTITE_2, 6))
