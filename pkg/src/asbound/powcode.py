"""The power-trace code C(p, m, r) and its exact minimum distance.

The generator matrix stacks, for every alpha_j in F_q^*, the coordinate
vectors of alpha_j, alpha_j^2, ..., alpha_j^r.  Its row space is the set
of words (Tr(f(alpha_j)))_j with f = a_1 x + ... + a_r x^r, so the
minimum distance is q - max_f |Z_f| where Z_f is the zero set of Tr(f(x))
on F_q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import search
from .gf import FieldCtx, rank_mod_p
from .kernels import table_dtype

FqPoly = tuple  # (a_1, ..., a_r), element indices; zero constant term implied


def check_degree(ctx: FieldCtx, r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"degree bound r={r!r} must be a positive integer")
    if r >= ctx.p:
        raise ValueError(f"r={r} must be smaller than the characteristic p={ctx.p} (r < p)")


def check_poly(ctx: FieldCtx, f, r: int | None = None) -> tuple[int, ...]:
    f = tuple(int(a) for a in f)
    if r is not None and len(f) > r:
        raise ValueError(f"polynomial has {len(f)} coefficients, more than r={r}")
    if any(not 0 <= a < ctx.q for a in f):
        raise ValueError(f"coefficients must be element indices in [0, {ctx.q})")
    if r is not None:
        f = f + (0,) * (r - len(f))
    return f


def format_poly(ctx: FieldCtx, f) -> str:
    return "[" + ",".join(ctx.format_elem(a) for a in f) + "]"


def trace_rows(ctx: FieldCtx, r: int) -> np.ndarray:
    """Table T[k-1, a, j] = Tr(a * alpha_j^k) for alpha_j = j = 1..q-1."""
    n, q = ctx.n, ctx.q
    dtype = table_dtype(ctx.p)
    search.check_table_size(r * q * n * np.dtype(dtype).itemsize, f"trace table p={ctx.p} m={ctx.m} r={r}")
    trexp = ctx.trace_table[ctx.exp].astype(dtype)
    logs = ctx.log[1:]
    table = np.zeros((r, q, n), dtype=dtype)
    block = max(1, 2**22 // max(n, 1))
    la = ctx.log[1:]
    for k in range(1, r + 1):
        shift = (k * logs) % n if n > 1 else logs * 0
        for lo in range(1, q, block):
            hi = min(q, lo + block)
            e = (la[lo - 1:hi - 1, None] + shift[None, :]) % max(n, 1)
            table[k - 1, lo:hi] = trexp[e]
    return table


@dataclass(eq=False)
class PowerTraceCode:
    ctx: FieldCtx
    r: int
    matrix: np.ndarray = field(repr=False)
    d: int | None = None
    witness: FqPoly | None = None

    @property
    def n(self) -> int:
        return self.ctx.n

    @cached_property
    def k(self) -> int:
        return dimension(self)

    @cached_property
    def table(self) -> np.ndarray:
        return trace_rows(self.ctx, self.r)

    def __repr__(self) -> str:
        ctx = self.ctx
        return f"PowerTraceCode(p={ctx.p}, m={ctx.m}, r={self.r}, n={self.n}, d={self.d})"


def generator_matrix(ctx: FieldCtx, r: int) -> PowerTraceCode:
    """rm x (q-1) matrix over F_p; column j stacks to_vector(alpha_j^i), i = 1..r."""
    check_degree(ctx, r)
    alphas = ctx.elem_order
    rows = []
    for i in range(1, r + 1):
        powers = ctx.pow_arr(alphas, i)
        rows.append(ctx.digits_arr(powers).T)
    matrix = np.vstack(rows).astype(table_dtype(ctx.p))
    return PowerTraceCode(ctx, r, matrix)


def codeword(code: PowerTraceCode, f) -> np.ndarray:
    """(Tr(f(alpha_j)))_j as an int64 vector of length q-1."""
    ctx = code.ctx
    f = check_poly(ctx, f, code.r)
    values = ctx.eval_arr((0,) + f, ctx.elem_order)
    return ctx.trace_table[values]


def weight(code: PowerTraceCode, f) -> int:
    f = check_poly(code.ctx, f, code.r)
    if not any(f):
        raise ValueError("weight is only defined here for nonzero f")
    return int(np.count_nonzero(codeword(code, f)))


def message_vector(code: PowerTraceCode, f) -> np.ndarray:
    """Coefficients x with x @ matrix == codeword(f) (mod p).

    The matrix rows are polynomial-basis coordinates, so a_k contributes
    through its dual-basis coordinates Tr(a_k t^i).
    """
    ctx = code.ctx
    f = check_poly(ctx, f, code.r)
    out = []
    for a in f:
        out.extend(ctx.trace(ctx.mul(a, ctx.p**i)) for i in range(ctx.m))
    return np.asarray(out, dtype=np.int64)


def dimension(code: PowerTraceCode) -> int:
    return rank_mod_p(code.matrix, code.ctx.p)


def columns_rank(code: PowerTraceCode, cols) -> int:
    """F_p-rank of the columns indexed by ``cols`` (1-based, i.e. alpha_i = i)."""
    cols = np.asarray(sorted(set(int(i) for i in cols)), dtype=np.int64)
    if cols.size == 0:
        return 0
    if cols[0] < 1 or cols[-1] > code.n:
        raise ValueError(f"column indices must lie in 1..{code.n}")
    return rank_mod_p(code.matrix[:, cols - 1], code.ctx.p)


@dataclass(frozen=True)
class MinDistance:
    d: int
    witness: FqPoly
    n_min: int  # number of nonzero f attaining d
    strategy: str


def generator_rows(code: PowerTraceCode) -> np.ndarray:
    """Rows Tr(t^i alpha_j^k), ordered by (k, i); the Gray walk's generators."""
    ctx = code.ctx
    n = ctx.n
    trexp = ctx.trace_table[ctx.exp].astype(table_dtype(ctx.p))
    logs = ctx.log[1:]
    rows = []
    for k in range(1, code.r + 1):
        for i in range(ctx.m):
            e = (int(ctx.log[ctx.p**i]) + k * logs) % max(n, 1)
            rows.append(trexp[e])
    return np.vstack(rows)


def min_distance(code: PowerTraceCode, strategy: str = "orbit", threads: int | None = None,
                 budget: int | None = search.DEFAULT_WORK_BUDGET,
                 backend: str | None = None) -> MinDistance:
    """Exact d(p, m, r) with the lex-min minimum-weight polynomial.

    ``budget`` caps the estimated number of elementary F_p operations
    (None disables the guard); exceeding it raises InfeasibleError.
    """
    ctx, r = code.ctx, code.r
    label = f"min distance p={ctx.p} m={ctx.m} r={r} ({strategy})"
    if strategy == "gray":
        search.check_gray_budget(ctx.q, r, code.n, budget, label)
        best, count, key = search.gray_search(generator_rows(code), ctx.p, ctx.m, r, ctx.q,
                                              threads, budget, backend, what=label)
        result = MinDistance(best, search.key_to_poly(key, ctx.q, r), count, "gray")
    elif strategy == "orbit":
        tasks = search.plan_orbit(ctx, r, code.n, budget, label)
        res = search.orbit_scan(ctx, code.table, r, 0, threads, budget, backend, label, tasks)
        witness, total, _ = search.resolve_witness(ctx, r, res.keys)
        result = MinDistance(code.n - res.best, witness, total, "orbit")
    else:
        raise ValueError(f"unknown strategy {strategy!r} (expected 'gray' or 'orbit')")
    code.d, code.witness = result.d, result.witness
    return result
