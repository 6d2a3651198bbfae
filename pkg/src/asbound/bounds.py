"""Exact-integer evaluators for the point-count bounds and related formulas."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .ascurve import genus


def hasse_weil(q: int, g: int) -> int:
    """q + 1 + floor(2 g sqrt(q))."""
    return q + 1 + math.isqrt(4 * g * g * q)


def serre(q: int, g: int) -> int:
    """q + 1 + g * floor(2 sqrt(q))."""
    return q + 1 + g * math.isqrt(4 * q)


def new_bound(p: int, m: int, r: int, d: int) -> int:
    q = p**m
    if not 0 < d <= q - 1:
        raise ValueError(f"minimum distance d={d} outside 1..{q - 1}")
    return 1 + p * (q - d)


def d_lower_bound(p: int, m: int, r: int) -> int:
    """ceil(q - p^(m-1) - (r-1)(p-1)/(2p) * floor(2 sqrt(q)))."""
    if r >= p:
        raise ValueError("needs r < p")
    q = p**m
    value = q - p ** (m - 1) - Fraction((r - 1) * (p - 1), 2 * p) * math.isqrt(4 * q)
    return math.ceil(value)


def singleton(n: int, k: int) -> int:
    return n - k + 1


@dataclass(frozen=True)
class WeilZfBound:
    """||Z_f| - p^(m-1)| <= (r-1)(p-1) sqrt(q) / p."""

    p: int
    m: int
    r: int

    @property
    def value(self) -> float:
        return (self.r - 1) * (self.p - 1) * math.sqrt(self.p**self.m) / self.p

    def admits(self, zero_count: int) -> bool:
        p, q = self.p, self.p**self.m
        dev = p * zero_count - q
        return dev * dev <= (self.r - 1) ** 2 * (p - 1) ** 2 * q

    def interval(self) -> tuple[int, int]:
        q = self.p**self.m
        allowed = [z for z in range(q + 1) if self.admits(z)]
        return allowed[0], allowed[-1]


def weil_zf_bound(p: int, m: int, r: int) -> WeilZfBound:
    if r >= p:
        raise ValueError("needs r < p")
    return WeilZfBound(p, m, r)


def cyclotomic_genus(q: int, d: int, n: int) -> int:
    """Genus of the cyclotomic function field K(Lambda_{P^n}), deg P = d."""
    if q < 2 or d < 1 or n < 1:
        raise ValueError("need q >= 2, d >= 1, n >= 1")
    inner = Fraction((q * d * n - d * n - q) * (q**d - 1), q - 1) - d
    two_g_minus_2 = q ** (d * (n - 1)) * inner
    if two_g_minus_2.denominator != 1 or two_g_minus_2.numerator % 2:
        raise ValueError(f"2g - 2 = {two_g_minus_2} is not an even integer")
    return (two_g_minus_2.numerator + 2) // 2


def ray_class_degree(q: int, t: int, phi_d: int, h: int = 1) -> int:
    """[F_S^D : F] = h * t * phi(D) / (q - 1)."""
    if q < 2 or t < 1 or phi_d < 1 or h < 1:
        raise ValueError("inputs must be positive (q > 1)")
    num = h * t * phi_d
    if num % (q - 1):
        raise ValueError(f"h*t*phi(D) = {num} is not divisible by q-1 = {q - 1}")
    return num // (q - 1)


def is_square(q: int) -> bool:
    return math.isqrt(q) ** 2 == q


@dataclass
class BoundRow:
    p: int
    m: int
    r: int
    k: int
    d: int
    n_max: int | None = None
    witness: tuple[int, ...] | None = None

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def n(self) -> int:
        return self.q - 1

    @property
    def genus(self) -> int:
        return genus(self.p, self.r)

    @property
    def hasse_weil(self) -> int:
        return hasse_weil(self.q, self.genus)

    @property
    def serre(self) -> int:
        return serre(self.q, self.genus)

    @property
    def classical(self) -> int:
        """Hasse-Weil for square q, Serre otherwise (as in the published tables)."""
        return self.hasse_weil if is_square(self.q) else self.serre

    @property
    def our_bound(self) -> int:
        return new_bound(self.p, self.m, self.r, self.d)

    @property
    def tight(self) -> bool | None:
        return None if self.n_max is None else self.n_max == self.our_bound

    def violations(self) -> list[str]:
        """Invariant failures of this row; empty when everything holds."""
        out = []
        if self.our_bound > self.serre:
            out.append(f"our bound {self.our_bound} exceeds Serre {self.serre}")
        lower = d_lower_bound(self.p, self.m, self.r)
        if self.d < lower:
            out.append(f"d={self.d} below lower bound {lower}")
        if self.d > singleton(self.n, self.k):
            out.append(f"d={self.d} above Singleton {singleton(self.n, self.k)}")
        if self.n_max is not None and self.n_max > self.our_bound:
            out.append(f"N_max={self.n_max} exceeds our bound {self.our_bound}")
        return out
