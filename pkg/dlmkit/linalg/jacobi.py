"""
Cyclic Jacobi eigensolver for real symmetric matrices.

Floating point only: used to cross-check the exact pipeline and for the numeric
interlacing and eigenspace checks, never as a source of multiplicities.
"""

import logging
import math

import numpy as np

from dlmkit.errors import ConvergenceError
from dlmkit.linalg.matrix import IntSymMatrix

logger = logging.getLogger(__name__)

MAX_SWEEPS = 100
# relative to the largest entry of the input
OFF_DIAGONAL_TOLERANCE = 1e-12


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Annihilate ``a[p, q]`` in place and accumulate the rotation into ``v``."""
    apq = a[p, q]
    if apq == 0.0:
        return
    diff = a[q, q] - a[p, p]
    if abs(apq) < abs(diff) * 1e-36:
        t = apq / diff
    else:
        theta = diff / (2.0 * apq)
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vp = v[:, p].copy()
    vq = v[:, q].copy()
    v[:, p] = c * vp - s * vq
    v[:, q] = s * vp + c * vq


def _max_off_diagonal(a: np.ndarray) -> float:
    return float(np.max(np.abs(a - np.diag(np.diag(a)))))


def jacobi_eigh(a: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """
    Eigenvalues and eigenvectors (columns) of a symmetric array, in descending eigenvalue order.

    Raises:
        ConvergenceError: if some off-diagonal entry is still above tolerance after ``max_sweeps``
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    if n <= 1:
        return np.diag(a).copy(), v

    threshold = OFF_DIAGONAL_TOLERANCE * max(float(np.max(np.abs(a))), 1.0)
    for sweep in range(1, max_sweeps + 1):
        if _max_off_diagonal(a) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q)
    else:
        if _max_off_diagonal(a) > threshold:
            logger.error(f"Jacobi did not converge on a {n}x{n} matrix after {max_sweeps} sweeps")
            raise ConvergenceError(f"Jacobi did not converge after {max_sweeps} sweeps (n={n})")

    values = np.diag(a).copy()
    order = np.argsort(values)[::-1]
    return values[order], v[:, order]


def numeric_eigenvalues(m: IntSymMatrix) -> list[float]:
    """Floating approximations of the eigenvalues, descending."""
    values, _ = jacobi_eigh(m.to_numpy())
    return [float(x) for x in values]


def numeric_eigenpairs(m: IntSymMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Descending eigenvalues and matching unit eigenvectors as columns."""
    return jacobi_eigh(m.to_numpy())


def agreement_tolerance(m: IntSymMatrix) -> float:
    """Allowed gap between a numeric eigenvalue and the exact root it approximates."""
    return 1e-8 * (1 + m.n * m.max_abs_entry())
