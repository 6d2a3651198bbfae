"""The group (F_q[T]/(T^{r+1}))^* / F_q^* and its truncated logarithm.

A class is stored through its representative with constant term 1,
1 + a_1 T + ... + a_r T^r.  For r < p every non-identity class has order p
and the truncated log is an isomorphism onto (F_q^r, +).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import FieldCtx, rank_mod_p


def _check(ctx: FieldCtx, r: int) -> None:
    if r < 1:
        raise ValueError("truncation degree r must be positive")
    if r >= ctx.p:
        raise ValueError(f"truncated log/exp need r < p (r={r}, p={ctx.p})")


@dataclass(frozen=True)
class TruncatedUnit:
    ctx: FieldCtx
    r: int
    a: tuple[int, ...]  # (a_1, ..., a_r)

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if len(a) != self.r:
            raise ValueError(f"expected {self.r} coefficients, got {len(a)}")
        if any(not 0 <= x < self.ctx.q for x in a):
            raise ValueError("coefficients must be element indices of F_q")
        object.__setattr__(self, "a", a)

    def __eq__(self, other):
        return (isinstance(other, TruncatedUnit) and other.ctx is self.ctx
                and other.r == self.r and other.a == self.a)

    def __hash__(self):
        return hash((id(self.ctx), self.r, self.a))

    def __mul__(self, other: "TruncatedUnit") -> "TruncatedUnit":
        return mul(self, other)

    def __pow__(self, e: int) -> "TruncatedUnit":
        result = identity(self.ctx, self.r)
        for _ in range(e):
            result = mul(result, self)
        return result

    @property
    def is_identity(self) -> bool:
        return not any(self.a)


def identity(ctx: FieldCtx, r: int) -> TruncatedUnit:
    return TruncatedUnit(ctx, r, (0,) * r)


def from_series(ctx: FieldCtx, r: int, coeffs) -> TruncatedUnit:
    """Class of a_0 + a_1 T + ... (a_0 != 0), rescaled to constant term 1."""
    coeffs = list(coeffs) + [0] * (r + 1 - len(coeffs))
    if coeffs[0] == 0:
        raise ValueError("constant term must be nonzero for a unit")
    inv = ctx.inv(coeffs[0])
    return TruncatedUnit(ctx, r, tuple(ctx.mul(inv, c) for c in coeffs[1:r + 1]))


def linear_unit(ctx: FieldCtx, r: int, alpha: int) -> TruncatedUnit:
    """1 + alpha T."""
    return TruncatedUnit(ctx, r, (alpha,) + (0,) * (r - 1))


def _series_mul(ctx: FieldCtx, x, y, r: int) -> list[int]:
    out = [0] * (r + 1)
    for i, xi in enumerate(x[:r + 1]):
        if xi == 0:
            continue
        for j, yj in enumerate(y[:r + 1 - i]):
            if yj:
                out[i + j] = ctx.add(out[i + j], ctx.mul(xi, yj))
    return out


def mul(u: TruncatedUnit, w: TruncatedUnit) -> TruncatedUnit:
    if u.ctx is not w.ctx or u.r != w.r:
        raise ValueError("units live in different groups")
    prod = _series_mul(u.ctx, (1,) + u.a, (1,) + w.a, u.r)
    return from_series(u.ctx, u.r, prod)


def log(u: TruncatedUnit) -> tuple[int, ...]:
    """Coefficients c_1..c_r of log(1 + z) = sum_j (-1)^(j-1) z^j / j mod T^(r+1)."""
    ctx, r = u.ctx, u.r
    _check(ctx, r)
    z = [0] + list(u.a)
    power = [1] + [0] * r
    acc = [0] * (r + 1)
    for j in range(1, r + 1):
        power = _series_mul(ctx, power, z, r)
        scale = ctx.scalar((-1) ** (j - 1) * pow(j, -1, ctx.p))
        for i in range(r + 1):
            acc[i] = ctx.add(acc[i], ctx.mul(scale, power[i]))
    return tuple(acc[1:])


def exp(ctx: FieldCtx, r: int, c) -> TruncatedUnit:
    """Inverse of ``log``: sum_j z^j / j! truncated at T^r."""
    _check(ctx, r)
    c = tuple(int(x) for x in c)
    if len(c) != r:
        raise ValueError(f"expected {r} log coordinates")
    z = [0] + list(c)
    power = [1] + [0] * r
    acc = [1] + [0] * r
    fact = 1
    for j in range(1, r + 1):
        power = _series_mul(ctx, power, z, r)
        fact = fact * j % ctx.p
        scale = pow(fact, -1, ctx.p)
        for i in range(r + 1):
            acc[i] = ctx.add(acc[i], ctx.mul(scale, power[i]))
    return TruncatedUnit(ctx, r, tuple(acc[1:]))


def power_sum_targets(ctx: FieldCtx, b) -> tuple[int, ...]:
    """Right-hand sides sum_i u_i alpha_i^j for a target class 1 + sum b_k T^k.

    Component j is (-1)^(j-1) * j times the j-th log coefficient, which
    gives b_1, b_1^2 - 2 b_2, b_1^3 - 3 b_1 b_2 + 3 b_3, ...
    """
    r = len(b)
    c = log(TruncatedUnit(ctx, r, tuple(b)))
    return tuple(ctx.mul(ctx.scalar((-1) ** (j - 1) * j), cj) for j, cj in enumerate(c, start=1))


def log_vector(u: TruncatedUnit) -> np.ndarray:
    """log(u) flattened to F_p^{rm} block by block."""
    return np.concatenate([u.ctx.digits_arr(c) for c in log(u)]).astype(np.int64)


def span_rank(units) -> int:
    """F_p-rank of the subgroup generated by ``units`` (its size is p^rank)."""
    units = list(units)
    if not units:
        return 0
    return rank_mod_p(np.vstack([log_vector(u) for u in units]), units[0].ctx.p)


def generated_subgroup(units, limit: int = 10**6) -> set[TruncatedUnit]:
    """Closure of ``units`` under multiplication, by breadth-first products."""
    units = list(units)
    if not units:
        return set()
    seen = {identity(units[0].ctx, units[0].r)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for u in units:
                y = mul(x, u)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > limit:
                        raise ValueError(f"subgroup larger than {limit} elements")
        frontier = nxt
    return seen
