"""
Exact eigenvalue bookkeeping: square-free decomposition, real-root isolation and ordering.

Roots are carried as rational isolating intervals together with the square-free integer
factor that vanishes on them, so any two roots can be ordered by refinement and, when
refinement stalls, identified exactly through a gcd.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Optional, Sequence

from sympy.polys.densebasic import dup_degree
from sympy.polys.densetools import dup_mirror, dup_shift
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_gcd
from sympy.polys.rootisolation import (
    dup_count_real_roots,
    dup_isolate_real_roots_sqf,
    dup_refine_real_root,
)
from sympy.polys.sqfreetools import dup_sqf_list

from dlmkit.linalg.charpoly import CharPolynomial, char_poly
from dlmkit.linalg.matrix import IntSymMatrix

logger = logging.getLogger(__name__)

DEFAULT_INTERVAL_BITS = 40
DEFAULT_COMPARE_CAP_BITS = 80


def _to_fraction(q) -> Fraction:
    return Fraction(int(QQ.numer(q)), int(QQ.denom(q)))


def _to_qq(x: Fraction):
    return QQ(x.numerator, x.denominator)


def _normalize(f: list) -> list:
    """Make the leading coefficient positive; roots are unchanged."""
    if f and f[0] < 0:
        return [-c for c in f]
    return f


@dataclass(frozen=True, slots=True)
class SquarefreeFactorization:
    """``p = prod(factor ** exponent)`` with pairwise coprime square-free factors, exponents ascending."""

    factors: tuple[tuple[CharPolynomial, int], ...]

    def expand(self) -> CharPolynomial:
        result = [1]
        for factor, exponent in self.factors:
            for _ in range(exponent):
                result = _poly_mul(result, list(factor.coeffs))
        return CharPolynomial(tuple(result))

    def exponent_of(self, root: "RealRoot") -> int:
        """Multiplicity of ``root`` in the decomposed polynomial (0 if it is not a root)."""
        for factor, exponent in self.factors:
            if root.is_root_of(factor):
                return exponent
        return 0


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def squarefree_decompose(p: CharPolynomial) -> SquarefreeFactorization:
    """
    Yun-style square-free decomposition (sympy's ``dup_sqf_list`` over ZZ).

    A root has multiplicity k iff it is a root of the exponent-k factor.
    """
    if not any(p.coeffs):
        raise ValueError("Cannot decompose the zero polynomial")
    _, factors = dup_sqf_list(p.to_dense(), ZZ)
    ordered = sorted(((CharPolynomial.from_dense(_normalize(f)), k) for f, k in factors), key=lambda fk: fk[1])
    return SquarefreeFactorization(tuple(ordered))


@dataclass(frozen=True, slots=True)
class RealRoot:
    """
    A real algebraic number: the unique root of ``factor`` inside ``[lo, hi]``.

    ``lo == hi`` marks an exactly known (rational, in practice integer) root.
    """

    lo: Fraction
    hi: Fraction
    factor: tuple[int, ...] = field(compare=False)

    @classmethod
    def exact(cls, value: int) -> "RealRoot":
        return cls(Fraction(value), Fraction(value), (-value, 1))

    @classmethod
    def rational(cls, value: Fraction) -> "RealRoot":
        if value.denominator == 1:
            return cls.exact(int(value))
        return cls(value, value, (-value.numerator, value.denominator))

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def is_integer(self) -> bool:
        return self.is_exact and self.lo.denominator == 1

    @property
    def value(self) -> Optional[int]:
        """The integer value when the root is an exact integer, else ``None``."""
        return int(self.lo) if self.is_integer else None

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self) -> float:
        return float(self.midpoint)

    def _dense(self) -> list:
        return [ZZ(c) for c in reversed(self.factor)]

    def is_root_of(self, poly: CharPolynomial) -> bool:
        """True iff this root is a root of ``poly``."""
        if self.is_exact:
            return poly(self.lo) == 0
        g = dup_gcd(self._dense(), poly.to_dense(), ZZ)
        if dup_degree(g) <= 0:
            return False
        return dup_count_real_roots(g, ZZ, _to_qq(self.lo), _to_qq(self.hi)) > 0

    def refined(self, bits: int) -> "RealRoot":
        """Shrink the interval below width ``2**-bits``."""
        if self.is_exact or self.width < Fraction(1, 2 ** bits):
            return self
        lo, hi = self.lo, self.hi
        f = self._dense()
        if lo < 0 < hi:
            lo, hi = _split_at_zero(self.factor, lo, hi)
            if lo == hi:
                return RealRoot.exact(0)
        s, t = dup_refine_real_root(f, _to_qq(lo), _to_qq(hi), ZZ, eps=QQ(1, 2 ** bits))
        return _snap(self.factor, _to_fraction(s), _to_fraction(t))

    def affine(self, sign: int, shift: int) -> "RealRoot":
        """The root ``sign * r + shift`` for ``sign`` in {1, -1}, with its transformed factor."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.is_exact:
            return RealRoot.rational(sign * self.lo + shift)
        f = self._dense()
        if sign < 0:
            f = _normalize(dup_mirror(f, ZZ))
        # g(x) = f(sign * (x - shift))
        g = dup_shift(f, ZZ(-shift), ZZ) if shift else f
        lo, hi = sorted((sign * self.lo + shift, sign * self.hi + shift))
        return RealRoot(lo, hi, tuple(int(c) for c in reversed(g)))

    def describe(self, digits: int = 10) -> str:
        if self.is_integer:
            return str(self.value)
        return f"≈{float(self.midpoint):.{digits}g}"


def _horner(coeffs: Sequence[int], x: Fraction) -> Fraction:
    value = Fraction(0)
    for c in reversed(coeffs):
        value = value * x + c
    return value


def _split_at_zero(factor: tuple[int, ...], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    at_zero = _horner(factor, Fraction(0))
    if at_zero == 0:
        return Fraction(0), Fraction(0)
    if _horner(factor, lo) * at_zero < 0:
        return lo, Fraction(0)
    return Fraction(0), hi


def _snap(factor: tuple[int, ...], lo: Fraction, hi: Fraction) -> RealRoot:
    """Turn an isolating interval into an exact root when it holds an integer (or rational endpoint) root."""
    if lo == hi:
        return RealRoot.rational(lo)
    k = math.ceil(lo)
    if k <= hi and _horner(factor, Fraction(k)) == 0:
        return RealRoot.exact(k)
    for endpoint in (lo, hi):
        if _horner(factor, endpoint) == 0:
            return RealRoot.rational(endpoint)
    return RealRoot(lo, hi, factor)


def isolate_real_roots(p: CharPolynomial, bits: int = DEFAULT_INTERVAL_BITS) -> list[RealRoot]:
    """
    Isolating intervals for the real roots of a square-free integer polynomial, ascending.

    Intervals are refined below width ``2**-bits``; integer roots are snapped to exact values
    and confirmed by exact evaluation.
    """
    if p.degree <= 0:
        return []
    f = _normalize(p.to_dense())
    factor = tuple(int(c) for c in reversed(f))
    intervals = dup_isolate_real_roots_sqf(f, ZZ, eps=QQ(1, 2 ** bits))
    return [_snap(factor, _to_fraction(s), _to_fraction(t)) for s, t in intervals]


def compare_roots(a: RealRoot, b: RealRoot, cap_bits: int = DEFAULT_COMPARE_CAP_BITS) -> int:
    """
    Exact three-way comparison of two real roots.

    Intervals are refined until disjoint; below width ``2**-cap_bits`` the gcd of the two
    owning factors decides equality.
    """
    if a.is_exact and b.is_exact:
        return (a.lo > b.lo) - (a.lo < b.lo)
    if a.factor == b.factor and not (a.hi < b.lo or b.hi < a.lo):
        # overlapping isolating intervals of one square-free polynomial hold the same root
        return 0

    cap = Fraction(1, 2 ** cap_bits)
    checked_gcd = False
    while True:
        if a.hi < b.lo:
            return -1
        if b.hi < a.lo:
            return 1
        if not checked_gcd and a.width < cap and b.width < cap:
            checked_gcd = True
            if _share_root(a, b):
                return 0
        if a.is_exact and b.is_exact:
            return (a.lo > b.lo) - (a.lo < b.lo)
        if a.width >= b.width and not a.is_exact:
            a = a.refined(_bits_for(a.width) + 8)
        else:
            b = b.refined(_bits_for(b.width) + 8)
        if a.is_exact and b.is_exact:
            return (a.lo > b.lo) - (a.lo < b.lo)
        if a.is_exact and not b.is_exact and b.lo <= a.lo <= b.hi and _horner(b.factor, a.lo) == 0:
            return 0
        if b.is_exact and not a.is_exact and a.lo <= b.lo <= a.hi and _horner(a.factor, b.lo) == 0:
            return 0


def _bits_for(width: Fraction) -> int:
    if width <= 0:
        return 0
    return max(0, -math.floor(math.log2(width)))


def _share_root(a: RealRoot, b: RealRoot) -> bool:
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if lo > hi:
        return False
    g = dup_gcd(a._dense(), b._dense(), ZZ)
    if dup_degree(g) <= 0:
        return False
    return dup_count_real_roots(g, ZZ, _to_qq(lo), _to_qq(hi)) > 0


@dataclass(frozen=True, slots=True)
class SpectrumEntry:
    root: RealRoot
    multiplicity: int


@dataclass(frozen=True, slots=True)
class ExactSpectrum:
    """Distinct eigenvalues in descending order with exact multiplicities."""

    entries: tuple[SpectrumEntry, ...]

    @classmethod
    def from_roots(cls, roots: Iterable[tuple[RealRoot, int]], cap_bits: int = DEFAULT_COMPARE_CAP_BITS) -> "ExactSpectrum":
        """Sort descending and merge equal roots, adding their multiplicities."""
        items = sorted(roots, key=cmp_to_key(lambda x, y: compare_roots(y[0], x[0], cap_bits)))
        merged: list[list] = []
        for root, mult in items:
            if mult <= 0:
                continue
            if merged and compare_roots(merged[-1][0], root, cap_bits) == 0:
                merged[-1][1] += mult
            else:
                merged.append([root, mult])
        return cls(tuple(SpectrumEntry(r, m) for r, m in merged))

    @classmethod
    def from_integers(cls, values: Iterable[int]) -> "ExactSpectrum":
        counts = Counter(values)
        return cls(tuple(SpectrumEntry(RealRoot.exact(v), m) for v, m in sorted(counts.items(), reverse=True)))

    @property
    def order(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def distinct_count(self) -> int:
        return len(self.entries)

    def largest(self) -> SpectrumEntry:
        if not self.entries:
            raise ValueError("Empty spectrum")
        return self.entries[0]

    def as_multiset(self) -> list[RealRoot]:
        """Eigenvalues with repetition, descending."""
        return [e.root for e in self.entries for _ in range(e.multiplicity)]

    def eigenvalue_at(self, i: int) -> RealRoot:
        """The i-th largest eigenvalue, 1-based."""
        values = self.as_multiset()
        if not 1 <= i <= len(values):
            raise IndexError(f"Eigenvalue index {i} outside 1..{len(values)}")
        return values[i - 1]

    def multiplicity_of(self, value: int) -> int:
        for e in self.entries:
            if e.root.is_integer and e.root.value == value:
                return e.multiplicity
        return 0

    def is_integral(self) -> bool:
        return all(e.root.is_integer for e in self.entries)

    def integer_counts(self) -> Optional[dict[int, int]]:
        """``{eigenvalue: multiplicity}`` when every eigenvalue is an integer, else ``None``."""
        if not self.is_integral():
            return None
        return {e.root.value: e.multiplicity for e in self.entries}

    def same_as(self, other: "ExactSpectrum", cap_bits: int = DEFAULT_COMPARE_CAP_BITS) -> bool:
        """Exact multiset equality."""
        if len(self.entries) != len(other.entries):
            return False
        return all(
            a.multiplicity == b.multiplicity and compare_roots(a.root, b.root, cap_bits) == 0
            for a, b in zip(self.entries, other.entries)
        )

    def render_text(self, digits: int = 10) -> str:
        """``10×3, 8, 6, 0`` style listing."""
        parts = []
        for e in self.entries:
            text = e.root.describe(digits)
            parts.append(text if e.multiplicity == 1 else f"{text}×{e.multiplicity}")
        return ", ".join(parts)


def spectrum_of_polynomial(
    p: CharPolynomial,
    bits: int = DEFAULT_INTERVAL_BITS,
    cap_bits: int = DEFAULT_COMPARE_CAP_BITS,
) -> ExactSpectrum:
    """Real roots of ``p`` with exact multiplicities, descending."""
    roots = []
    for factor, exponent in squarefree_decompose(p).factors:
        roots.extend((r, exponent) for r in isolate_real_roots(factor, bits))
    return ExactSpectrum.from_roots(roots, cap_bits)


def exact_spectrum(
    m: IntSymMatrix,
    bits: int = DEFAULT_INTERVAL_BITS,
    cap_bits: int = DEFAULT_COMPARE_CAP_BITS,
) -> ExactSpectrum:
    """char_poly, then square-free decomposition, then root isolation; all roots are real."""
    spectrum = spectrum_of_polynomial(char_poly(m), bits, cap_bits)
    if spectrum.order != m.n:
        logger.error(f"Spectrum of a symmetric {m.n}x{m.n} matrix has only {spectrum.order} real roots")
    return spectrum


def largest_multiplicity(s: ExactSpectrum) -> tuple[RealRoot, int]:
    """Descriptor and multiplicity of the largest eigenvalue."""
    head = s.largest()
    return head.root, head.multiplicity
