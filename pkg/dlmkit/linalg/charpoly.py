"""Exact characteristic polynomials over the integers."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from dlmkit.linalg.matrix import IntSymMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CharPolynomial:
    """Integer polynomial with coefficients ``coeffs[k]`` of ``x**k`` (lowest degree first)."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x: Union[int, Fraction]) -> Union[int, Fraction]:
        value: Union[int, Fraction] = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def to_dense(self) -> list:
        """Highest-degree-first list of ZZ elements, the layout sympy's dense routines expect."""
        return [ZZ(c) for c in reversed(self.coeffs)]

    @classmethod
    def from_dense(cls, f: list) -> "CharPolynomial":
        return cls(tuple(int(c) for c in reversed(f)) or (0,))

    def key(self) -> bytes:
        """Canonical byte encoding of the coefficient vector."""
        return ",".join(str(c) for c in self.coeffs).encode("ascii")

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def char_poly(m: IntSymMatrix) -> CharPolynomial:
    """
    ``det(xI - M)`` computed division-free over ZZ (Berkowitz, via sympy's DomainMatrix).
    """
    if m.n == 0:
        return CharPolynomial((1,))
    dm = DomainMatrix([[ZZ(x) for x in row] for row in m.entries], (m.n, m.n), ZZ)
    return CharPolynomial.from_dense(dm.charpoly())
