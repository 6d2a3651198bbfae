"""Rational points of Artin-Schreier curves y^p - y = f(x) over F_q.

Places are counted the way the function field sees them: the single place
at infinity plus p affine points above every alpha with Tr(f(alpha)) = 0,
so N_f = 1 + p |Z_f|.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import search
from .gf import FieldCtx
from .kernels import table_dtype
from .powcode import check_degree, check_poly


@dataclass(frozen=True, eq=False)
class CurveSpec:
    """y^p - y = f(x) with ``coeffs`` = (a_0, a_1, ..., a_r), constant first."""

    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = check_poly(self.ctx, self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)
        r = self.degree
        if r < 1:
            raise ValueError("f must be nonconstant")
        if r % self.ctx.p == 0:
            raise ValueError(f"deg f = {r} is divisible by p = {self.ctx.p}")

    @classmethod
    def from_code_poly(cls, ctx: FieldCtx, f, constant: int = 0) -> "CurveSpec":
        return cls(ctx, (constant,) + tuple(f))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def genus(self) -> int:
        return genus(self.ctx.p, self.degree)

    @property
    def conductor_exponent(self) -> int:
        return conductor_exponent(self.degree)

    @cached_property
    def zero_count(self) -> int:
        return _zero_count(self.ctx, self.coeffs)

    @property
    def n_points(self) -> int:
        return 1 + self.ctx.p * self.zero_count


def _zero_count(ctx: FieldCtx, coeffs) -> int:
    values = ctx.eval_arr(coeffs, np.arange(ctx.q, dtype=np.int64))
    return int(np.count_nonzero(ctx.trace_table[values] == 0))


def zero_set_size(ctx: FieldCtx, f) -> int:
    """|{alpha in F_q : Tr(f(alpha)) = 0}| for f = (a_0, a_1, ..., a_r)."""
    return _zero_count(ctx, check_poly(ctx, f))


def count_points(spec: CurveSpec) -> int:
    n_points = spec.n_points
    if not hasse_weil_holds(spec.ctx, spec.degree, spec.zero_count):
        raise AssertionError(f"Hasse-Weil violated by {spec}: N={n_points}")
    return n_points


def genus(p: int, r: int) -> int:
    if r < 1:
        raise ValueError("degree must be positive")
    if r % p == 0:
        raise ValueError(f"p={p} divides r={r}")
    return (p - 1) * (r - 1) // 2


def conductor_exponent(r: int) -> int:
    if r < 1:
        raise ValueError("degree must be positive")
    return r + 1


def hasse_weil_holds(ctx: FieldCtx, r: int, zero_count: int) -> bool:
    """|N - 1 - q| <= (r-1)(p-1) sqrt(q), compared after squaring."""
    p, q = ctx.p, ctx.q
    dev = p * zero_count - q  # N - 1 - q
    return dev * dev <= (r - 1) ** 2 * (p - 1) ** 2 * q


def evaluation_table(ctx: FieldCtx, r: int) -> np.ndarray:
    """E[k-1, a, x] = Tr(a * x^k) over every x in F_q (x = 0 included).

    Built from field powers and products rather than the discrete-log shifts
    the code layer uses, so the two searches share no table code.
    """
    xs = np.arange(ctx.q, dtype=np.int64)
    dtype = table_dtype(ctx.p)
    search.check_table_size(r * ctx.q * ctx.q * np.dtype(dtype).itemsize,
                            f"evaluation table p={ctx.p} m={ctx.m} r={r}")
    table = np.empty((r, ctx.q, ctx.q), dtype=dtype)
    block = max(1, 2**21 // ctx.q)
    for k in range(1, r + 1):
        xk = ctx.pow_arr(xs, k)
        for lo in range(0, ctx.q, block):
            a = xs[lo:lo + block, None]
            table[k - 1, lo:lo + block] = ctx.trace_table[ctx.mul_arr(a, xk[None, :])]
    return table


@dataclass(frozen=True)
class MaxPoints:
    n_max: int
    witness: tuple[int, ...]  # (a_1, ..., a_r)
    zero_count: int
    counts_seen: tuple[int, ...]  # every |Z_f| value met during the search


def max_points(ctx: FieldCtx, r: int, threads: int | None = None,
               budget: int | None = search.DEFAULT_WORK_BUDGET,
               backend: str | None = None) -> MaxPoints:
    """Largest N_f over nonzero f with zero constant term and deg f <= r.

    Every zero count met is checked against the Hasse-Weil bound for its
    degree bound r.
    """
    check_degree(ctx, r)
    label = f"max points p={ctx.p} m={ctx.m} r={r}"
    tasks = search.plan_orbit(ctx, r, ctx.q, budget, label)
    table = evaluation_table(ctx, r)
    res = search.orbit_scan(ctx, table, r, 0, threads, budget, backend, label, tasks)
    seen = tuple(int(z) for z in np.nonzero(res.hist)[0])
    bad = [z for z in seen if not hasse_weil_holds(ctx, r, z)]
    if bad:
        raise AssertionError(f"zero counts {bad} violate the Hasse-Weil bound")
    witness, _, _ = search.resolve_witness(ctx, r, res.keys)
    return MaxPoints(1 + ctx.p * res.best, witness, res.best, seen)


def max_points_any_constant(ctx: FieldCtx, r: int, threads: int | None = None,
                            budget: int | None = search.DEFAULT_WORK_BUDGET,
                            backend: str | None = None) -> int:
    """Largest N_f when the constant term of f is unrestricted.

    A constant a_0 shifts Tr(f) by Tr(a_0); nonzero shifts turn zero counts
    into level-set counts #{Tr f = s}, and scaling by s^-1 (part of the
    symmetry group) reduces every s to 1.
    """
    check_degree(ctx, r)
    label = f"max points (any constant) p={ctx.p} m={ctx.m} r={r}"
    tasks = search.plan_orbit(ctx, r, ctx.q, budget, label)
    table = evaluation_table(ctx, r)
    zero = search.orbit_scan(ctx, table, r, 0, threads, budget, backend, label, tasks)
    level = search.orbit_scan(ctx, table, r, 1, threads, budget, backend, label, tasks)
    return 1 + ctx.p * max(zero.best, level.best)

