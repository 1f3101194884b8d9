"""Exact aperiodic correlation of sparse sequences over q-th roots of unity.

Correlation values are integer combinations of roots of unity.  Sums of
roots of unity can vanish nontrivially (1 + xi^2 = 0 over q = 4), so a
floating-point comparison cannot certify a zero.  Values are therefore
kept as integer coefficient vectors (:class:`CyclotomicInt`) and the zero
test reduces the coefficient polynomial modulo the q-th cyclotomic
polynomial: the value is zero exactly when the remainder vanishes.  For q
a power of two the cyclotomic polynomial is x^(q/2) + 1 and the reduction
collapses to a single fold, which is the fast path.

Coefficients stay below the sequence length, so plain Python integers are
never close to overflowing anything; no big-number care is needed.
"""

from __future__ import annotations

import cmath
import csv
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import IO, Mapping

from .rgbf import SparseSequence


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Quotient of num / den for monic den; remainder must vanish."""
    num = list(num)
    shift = len(den) - 1
    quot = [0] * (len(num) - shift)
    for i in range(len(num) - 1, shift - 1, -1):
        c = num[i]
        if c:
            quot[i - shift] = c
            for k, dc in enumerate(den):
                num[i - shift + k] -= c * dc
    if any(num):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quot


def _poly_mod(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Remainder of num modulo monic den."""
    num = list(num)
    shift = len(den) - 1
    for i in range(len(num) - 1, shift - 1, -1):
        c = num[i]
        if c:
            num[i] = 0
            for k in range(shift):
                num[i - shift + k] -= c * den[k]
    return num[:shift]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant first.

    Computed by dividing x^n - 1 by the cyclotomic polynomials of all
    proper divisors of n; every division is exact over the integers.
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomials are indexed from 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@dataclass(frozen=True)
class CyclotomicInt:
    """An integer combination sum_e counts[e] * xi^e of q-th roots of unity.

    The representation is not unique (1 + xi^(q/2) = 0), so ``==`` compares
    coefficient vectors only; value equality is ``(a - b).is_zero()``.
    """

    q: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.q < 2 or self.q % 2:
            raise ValueError(f"alphabet size must be even and >= 2, got q={self.q}")
        counts = tuple(self.counts)
        if len(counts) != self.q:
            raise ValueError(f"need {self.q} coefficients, got {len(counts)}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def zero(cls, q: int) -> CyclotomicInt:
        return cls(q, (0,) * q)

    @classmethod
    def from_exponent(cls, q: int, e: int) -> CyclotomicInt:
        counts = [0] * q
        counts[e % q] = 1
        return cls(q, tuple(counts))

    @classmethod
    def from_integer(cls, q: int, n: int) -> CyclotomicInt:
        counts = [0] * q
        counts[0] = n
        return cls(q, tuple(counts))

    def _require_same_q(self, other: CyclotomicInt) -> None:
        if self.q != other.q:
            raise ValueError(f"mixed alphabets q={self.q} and q={other.q}")

    def __add__(self, other: CyclotomicInt) -> CyclotomicInt:
        self._require_same_q(other)
        return CyclotomicInt(
            self.q, tuple(a + b for a, b in zip(self.counts, other.counts))
        )

    def __sub__(self, other: CyclotomicInt) -> CyclotomicInt:
        self._require_same_q(other)
        return CyclotomicInt(
            self.q, tuple(a - b for a, b in zip(self.counts, other.counts))
        )

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self.q, tuple(-a for a in self.counts))

    def conjugate(self) -> CyclotomicInt:
        """Complex conjugate: xi^e maps to xi^(q-e)."""
        return CyclotomicInt(
            self.q, tuple(self.counts[(self.q - e) % self.q] for e in range(self.q))
        )

    def is_zero(self) -> bool:
        """Exact zero test via reduction modulo the q-th cyclotomic polynomial."""
        q = self.q
        if q & (q - 1) == 0:
            # power of two: xi^(q/2) = -1, so fold the upper half down
            half = q // 2
            return all(self.counts[e] == self.counts[e + half] for e in range(half))
        rem = _poly_mod(list(self.counts), cyclotomic_polynomial(q))
        return not any(rem)

    def to_complex(self) -> complex:
        """Floating embedding, for display and cross-checks only."""
        return sum(
            (c * cmath.exp(2j * math.pi * e / self.q) for e, c in enumerate(self.counts) if c),
            0j,
        )


# A correlation profile maps every shift u in -(L-1)..L-1 to its exact value.
CorrelationProfile = dict[int, CyclotomicInt]


def _require_compatible(a: SparseSequence, b: SparseSequence) -> None:
    if a.q != b.q:
        raise ValueError(f"sequences use different alphabets q={a.q} and q={b.q}")
    if len(a) != len(b):
        raise ValueError(f"sequences differ in length: {len(a)} vs {len(b)}")


def cross_correlation(a: SparseSequence, b: SparseSequence, u: int) -> CyclotomicInt:
    """Aperiodic cross-correlation of a against b at shift u, exactly.

    For u >= 0 this is sum_i a[i+u] * conj(b[i]) over the overlap; zero
    entries contribute nothing.  Negative shifts use the conjugate
    symmetry rho(a, b; u) = conj(rho(b, a; -u)) so there is a single
    summation code path (the identity itself is checked by
    :func:`conj_symmetry_check`).
    """
    _require_compatible(a, b)
    L = len(a)
    if abs(u) >= L:
        raise ValueError(f"shift {u} out of range for length {L}")
    if u < 0:
        return cross_correlation(b, a, -u).conjugate()
    q = a.q
    counts = [0] * q
    for i in range(L - u):
        ea = a.entries[i + u]
        eb = b.entries[i]
        if ea is not None and eb is not None:
            counts[(ea - eb) % q] += 1
    return CyclotomicInt(q, tuple(counts))


def autocorrelation(a: SparseSequence, u: int) -> CyclotomicInt:
    """Aperiodic autocorrelation of a at shift u."""
    return cross_correlation(a, a, u)


def _cross_correlation_direct(a: SparseSequence, b: SparseSequence, u: int) -> CyclotomicInt:
    # Both branches of the defining sum, written out without the symmetry
    # shortcut; kept as the reference the public path is checked against.
    _require_compatible(a, b)
    L = len(a)
    if abs(u) >= L:
        raise ValueError(f"shift {u} out of range for length {L}")
    q = a.q
    counts = [0] * q
    if u >= 0:
        pairs = ((a.entries[i + u], b.entries[i]) for i in range(L - u))
    else:
        pairs = ((a.entries[i], b.entries[i - u]) for i in range(L + u))
    for ea, eb in pairs:
        if ea is not None and eb is not None:
            counts[(ea - eb) % q] += 1
    return CyclotomicInt(q, tuple(counts))


def conj_symmetry_check(a: SparseSequence, b: SparseSequence) -> bool:
    """Exact check of rho(a, b; u) == conj(rho(b, a; -u)) at every shift.

    Both sides are evaluated directly from the two-branch definition, so
    this really exercises the identity instead of the shortcut built on it.
    """
    _require_compatible(a, b)
    L = len(a)
    for u in range(-(L - 1), L):
        lhs = _cross_correlation_direct(a, b, u)
        rhs = _cross_correlation_direct(b, a, -u).conjugate()
        if not (lhs - rhs).is_zero():
            return False
    return True


def correlation_profile(a: SparseSequence, b: SparseSequence) -> CorrelationProfile:
    """All shifts at once, in one pass over the non-zero support pairs.

    A support pair (j in a, i in b) contributes xi^(e_a - e_b) to shift
    u = j - i, which reproduces both branches of the definition.  Cost is
    O(|support(a)| * |support(b)|) for the entire profile.
    """
    _require_compatible(a, b)
    q = a.q
    L = len(a)
    table = [[0] * q for _ in range(2 * L - 1)]
    support_b = b.support()
    for j, ea in a.support():
        base = j + L - 1
        for i, eb in support_b:
            table[base - i][(ea - eb) % q] += 1
    return {
        u: CyclotomicInt(q, tuple(table[u + L - 1])) for u in range(-(L - 1), L)
    }


def write_profile_csv(out: IO[str], profiles: Mapping[str, CorrelationProfile]) -> None:
    """CSV export: one row per (profile, shift) with the float embedding.

    Columns: profile, u, re, im, magnitude, is_exact_zero.  The exact-zero
    flag comes from the cyclotomic test, never from the float columns.
    """
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["profile", "u", "re", "im", "magnitude", "is_exact_zero"])
    for name, profile in profiles.items():
        for u in sorted(profile):
            value = profile[u]
            z = value.to_complex()
            writer.writerow(
                [
                    name,
                    u,
                    f"{z.real:.12g}",
                    f"{z.imag:.12g}",
                    f"{abs(z):.12g}",
                    int(value.is_zero()),
                ]
            )
