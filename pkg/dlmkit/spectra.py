"""
Distance Laplacian and Laplacian matrices of graphs, their exact spectra, and the
closed-form transfer rules between them.
"""

import logging
from typing import NewType

from dlmkit.core.graph import Graph, distance_table
from dlmkit.errors import DiameterTooLarge, SpectrumError
from dlmkit.linalg.charpoly import char_poly
from dlmkit.linalg.matrix import IntSymMatrix
from dlmkit.linalg.roots import (
    DEFAULT_COMPARE_CAP_BITS,
    DEFAULT_INTERVAL_BITS,
    ExactSpectrum,
    RealRoot,
    compare_roots,
    exact_spectrum,
)

logger = logging.getLogger(__name__)

SpectrumKey = NewType("SpectrumKey", bytes)


def distance_laplacian(g: Graph) -> IntSymMatrix:
    """
    ``Tr(G) - D(G)``: transmissions on the diagonal, negated distances elsewhere.

    Raises:
        DisconnectedGraph: if ``g`` is not connected
    """
    table = distance_table(g)
    rows = []
    for i, row in enumerate(table.d):
        tr = sum(row)
        rows.append(tuple(tr if i == j else -d for j, d in enumerate(row)))
    return IntSymMatrix(g.n, tuple(rows))


def laplacian(g: Graph) -> IntSymMatrix:
    """Degree diagonal minus adjacency; defined for disconnected graphs too."""
    rows = []
    for i in range(g.n):
        deg = g.degree(i)
        rows.append(tuple(deg if i == j else -(g.adj[i] >> j & 1) for j in range(g.n)))
    return IntSymMatrix(g.n, tuple(rows))


def dl_spectrum(g: Graph, bits: int = DEFAULT_INTERVAL_BITS, cap_bits: int = DEFAULT_COMPARE_CAP_BITS) -> ExactSpectrum:
    return exact_spectrum(distance_laplacian(g), bits, cap_bits)


def laplacian_spectrum(g: Graph, bits: int = DEFAULT_INTERVAL_BITS, cap_bits: int = DEFAULT_COMPARE_CAP_BITS) -> ExactSpectrum:
    return exact_spectrum(laplacian(g), bits, cap_bits)


def _without_one_zero(s: ExactSpectrum, n: int) -> list[tuple[RealRoot, int]]:
    """Entries of a Laplacian spectrum of order ``n`` with a single copy of the eigenvalue 0 removed."""
    if s.order != n:
        raise SpectrumError(f"Spectrum has {s.order} eigenvalues, expected {n}")
    if not s.entries:
        raise SpectrumError("Empty Laplacian spectrum")
    tail = s.entries[-1]
    if not (tail.root.is_integer and tail.root.value == 0):
        raise SpectrumError("A Laplacian spectrum must have 0 as its smallest eigenvalue")
    kept = [(e.root, e.multiplicity) for e in s.entries[:-1]]
    if tail.multiplicity > 1:
        kept.append((tail.root, tail.multiplicity - 1))
    return kept


def _check_bounded(s: ExactSpectrum, n: int, cap_bits: int) -> None:
    if s.entries and compare_roots(s.entries[0].root, RealRoot.exact(n), cap_bits) > 0:
        raise SpectrumError(f"Laplacian eigenvalue above the vertex count {n}")


def dl_spectrum_from_laplacian(
    g: Graph,
    bits: int = DEFAULT_INTERVAL_BITS,
    cap_bits: int = DEFAULT_COMPARE_CAP_BITS,
) -> ExactSpectrum:
    """
    Distance Laplacian spectrum of a diameter-2 graph read off its Laplacian spectrum:
    every nonzero-index ``mu`` becomes ``2n - mu`` and a single 0 is kept.

    Raises:
        DisconnectedGraph: if ``g`` is not connected
        DiameterTooLarge: if the diameter exceeds 2
    """
    d = distance_table(g).diameter
    if d > 2:
        raise DiameterTooLarge(f"Diameter {d} > 2; the Laplacian transfer rule does not apply")
    s = laplacian_spectrum(g, bits, cap_bits)
    roots = [(root.affine(-1, 2 * g.n), mult) for root, mult in _without_one_zero(s, g.n)]
    roots.append((RealRoot.exact(0), 1))
    return ExactSpectrum.from_roots(roots, cap_bits)


def complement_laplacian_spectrum(
    s: ExactSpectrum,
    n: int,
    cap_bits: int = DEFAULT_COMPARE_CAP_BITS,
) -> ExactSpectrum:
    """
    Laplacian spectrum of the complement: ``n - mu`` for all but one zero, plus 0.

    Raises:
        SpectrumError: if ``s`` is not a Laplacian spectrum of order ``n``
    """
    _check_bounded(s, n, cap_bits)
    roots = [(root.affine(-1, n), mult) for root, mult in _without_one_zero(s, n)]
    roots.append((RealRoot.exact(0), 1))
    return ExactSpectrum.from_roots(roots, cap_bits)


def join_laplacian_spectrum(
    s_g: ExactSpectrum,
    n: int,
    s_h: ExactSpectrum,
    m: int,
    cap_bits: int = DEFAULT_COMPARE_CAP_BITS,
) -> ExactSpectrum:
    """
    Laplacian spectrum of ``G join H`` from those of ``G`` (order n) and ``H`` (order m).

    One zero of each side is dropped; the rest shift by the other side's order. The two
    dropped zeros come back as ``0`` and ``n + m``.

    Raises:
        SpectrumError: if either input is not a Laplacian spectrum of the stated order
    """
    _check_bounded(s_g, n, cap_bits)
    _check_bounded(s_h, m, cap_bits)
    roots = [(root.affine(1, m), mult) for root, mult in _without_one_zero(s_g, n)]
    roots.extend((root.affine(1, n), mult) for root, mult in _without_one_zero(s_h, m))
    roots.append((RealRoot.exact(n + m), 1))
    roots.append((RealRoot.exact(0), 1))
    return ExactSpectrum.from_roots(roots, cap_bits)


def spectrum_key(g: Graph) -> SpectrumKey:
    """
    Byte key of the distance Laplacian characteristic polynomial; equal keys mean cospectral.

    Raises:
        DisconnectedGraph: if ``g`` is not connected
    """
    return SpectrumKey(char_poly(distance_laplacian(g)).key())
