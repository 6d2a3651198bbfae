"""Exhaustive searches over polynomials f = a_1 x + ... + a_r x^r.

Two enumeration strategies live here, shared by the code and curve layers:

* ``gray``: every nonzero coefficient tuple in reflected base-p Gray order,
  one generator row added per step.
* ``orbit``: one or more representatives per class of the symmetry
  f(x) ~ c * sigma^j(f)(lambda x) with c in F_p^*, lambda in F_q^* and sigma
  the coefficient Frobenius.  All members of a class have the same number of
  zeros of Tr(f(x)).

Work is cut into chunks whose boundaries depend only on the problem, never
on the thread count, and chunk results are merged with order-independent
reductions, so answers do not depend on how many workers ran.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .gf import FieldCtx
from .kernels import get_backend, table_dtype

DEFAULT_WORK_BUDGET = 10**11
CHUNK_WORK = 2 * 10**7
TABLE_BYTES_LIMIT = 2**31
_INT64_MAX = 2**63 - 1


class InfeasibleError(RuntimeError):
    """The requested exhaustive search exceeds the work budget."""

    def __init__(self, what: str, work: int, budget: int, unit: str = "elementary F_p operations",
                 hint: str = "raise it with a larger budget / --force"):
        self.what = what
        self.work = work
        self.budget = budget
        self.unit = unit
        super().__init__(f"{what}: estimated {work:.3e} {unit} exceeds the limit {budget:.3e} ({hint})")

    @property
    def reason(self) -> str:
        short = "bytes" if "bytes" in self.unit else "ops"
        return f"{self.work:.2e} {short} > limit {self.budget:.2e}"


def check_table_size(nbytes: int, what: str) -> None:
    """Refuse lookup tables larger than TABLE_BYTES_LIMIT before allocating them."""
    if nbytes > TABLE_BYTES_LIMIT:
        raise InfeasibleError(what, nbytes, TABLE_BYTES_LIMIT, unit="bytes of lookup table",
                              hint="a hard memory limit, not affected by --force")


def default_threads() -> int:
    env = os.environ.get("ASBOUND_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"ASBOUND_THREADS={env!r} is not an integer") from None
    return os.cpu_count() or 1


def run_chunks(fn, chunks, threads: int | None):
    """Apply ``fn`` to each chunk, returning results in chunk order."""
    threads = default_threads() if threads is None else threads
    if threads < 1:
        raise ValueError("thread budget must be at least 1")
    if threads == 1 or len(chunks) <= 1:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, chunks))


# ---------------------------------------------------------------------------
# Coefficient encoding: f = (a_1, ..., a_r) with each a_k an element index.
# Polynomials are ordered lexicographically on that tuple, a_1 first; the
# integer key sum_k a_k q^(r-k) realizes the same order.


def poly_key(f, q: int) -> int:
    r = len(f)
    return sum(int(a) * q ** (r - k) for k, a in enumerate(f, start=1))


def key_to_poly(key: int, q: int, r: int) -> tuple[int, ...]:
    out = []
    for k in range(r, 0, -1):
        out.append(key % q)
        key //= q
    return tuple(reversed(out))


def check_key_range(q: int, r: int) -> None:
    if q**r > _INT64_MAX:
        raise InfeasibleError(f"keys for q={q}, r={r}", q**r, _INT64_MAX)


# ---------------------------------------------------------------------------
# The symmetry group G = F_p^* x F_q^* x <sigma>, in discrete-log form.


@dataclass(frozen=True)
class GroupElement:
    c_log: int  # log of c in F_p^*, a multiple of (q-1)/(p-1)
    lam_log: int
    frob: int  # sigma^frob, 0 <= frob < m


def act(ctx: FieldCtx, g: GroupElement, f) -> tuple[int, ...]:
    """Image of f under (c, lambda, sigma^j): a_k -> c * lambda^k * a_k^(p^j)."""
    n, out = ctx.n, []
    for k, a in enumerate(f, start=1):
        if a == 0:
            out.append(0)
            continue
        e = (g.c_log + k * g.lam_log + ctx.p**g.frob * int(ctx.log[a])) % n
        out.append(int(ctx.exp[e]))
    return tuple(out)


def group_size(ctx: FieldCtx) -> int:
    return (ctx.p - 1) * ctx.n * ctx.m


def _group_arrays(ctx: FieldCtx):
    n, p, m = ctx.n, ctx.p, ctx.m
    c_logs = np.arange(p - 1, dtype=np.int64) * (n // (p - 1))
    lam = np.arange(n, dtype=np.int64)
    frob = p ** np.arange(m, dtype=np.int64) % n if n > 1 else np.zeros(m, dtype=np.int64)
    return c_logs, lam, frob


def orbit_keys(ctx: FieldCtx, f) -> np.ndarray:
    """Sorted distinct keys of the orbit of f under G."""
    q, n, r = ctx.q, ctx.n, len(f)
    c_logs, lam, frob = _group_arrays(ctx)
    keys = np.zeros((c_logs.size, lam.size, frob.size), dtype=np.int64)
    for k, a in enumerate(f, start=1):
        if a == 0:
            continue
        la = int(ctx.log[a])
        e = (c_logs[:, None, None] + k * lam[None, :, None] + (frob * la)[None, None, :]) % n
        keys += ctx.exp[e] * q ** (r - k)
    return np.unique(keys)


def canonical(ctx: FieldCtx, f) -> tuple[int, ...]:
    """Lexicographically smallest member of the orbit of f."""
    if not any(f):
        return tuple(f)
    return key_to_poly(int(orbit_keys(ctx, f)[0]), ctx.q, len(f))


def resolve_witness(ctx: FieldCtx, r: int, keys) -> tuple[tuple[int, ...], int, int]:
    """Collapse candidate keys into orbits.

    Returns (lex-min polynomial over the union of the orbits, total number of
    polynomials in those orbits, number of distinct orbits).
    """
    cand = np.unique(np.asarray(keys, dtype=np.int64))
    best, total, norbits = None, 0, 0
    while cand.size:
        orb = orbit_keys(ctx, key_to_poly(int(cand[0]), ctx.q, r))
        total += int(orb.size)
        norbits += 1
        best = int(orb[0]) if best is None else min(best, int(orb[0]))
        cand = cand[~np.isin(cand, orb, assume_unique=True)]
    return key_to_poly(best, ctx.q, r), total, norbits


# ---------------------------------------------------------------------------
# Orbit representatives.


def leading_reps(ctx: FieldCtx, k: int) -> list[int]:
    """One element per orbit of F_q^* under a -> c * lambda^k * a^(p^j).

    In log form this is L -> L + h (h in the subgroup generated by k and
    (q-1)/(p-1)) followed by L -> p L, so orbits are residue classes modulo
    g = gcd(k, (q-1)/(p-1)) glued by multiplication with p.  The smallest
    element index of each orbit is returned.
    """
    n = ctx.n
    g = math.gcd(k, n // (ctx.p - 1))
    res = ctx.log[1:] % g
    classes: dict[int, int] = {}
    for rho in range(g):
        x, members = rho, []
        while x not in members:
            members.append(x)
            x = x * ctx.p % g
        classes[rho] = min(members)
    canon = np.array([classes[int(x)] for x in range(g)], dtype=np.int64)[res]
    reps = []
    elems = np.arange(1, ctx.q, dtype=np.int64)
    for c in np.unique(canon):
        reps.append(int(elems[canon == c].min()))
    return sorted(reps)


def stabilizer(ctx: FieldCtx, k: int, a: int) -> list[GroupElement]:
    """All group elements fixing the degree-k coefficient value a != 0."""
    n, p = ctx.n, ctx.p
    la = int(ctx.log[a])
    g = math.gcd(k, n)
    step = n // g
    kinv = pow(k // g, -1, step) if step > 1 else 0
    out = []
    for j in range(ctx.m):
        for e in range(p - 1):
            c_log = e * (n // (p - 1))
            rhs = (-(c_log + (p**j - 1) * la)) % n
            if rhs % g:
                continue
            l0 = (rhs // g) * kinv % step if step > 1 else 0
            out.extend(GroupElement(c_log, l0 + t * step, j) for t in range(g))
    return out


def stabilizer_reps(ctx: FieldCtx, stab: list[GroupElement], deg: int) -> list[int]:
    """Minimal elements of the orbits of F_q under ``stab`` acting on degree ``deg``."""
    n = ctx.n
    logs = ctx.log[1:]
    rep = np.arange(1, ctx.q, dtype=np.int64)
    for s in stab:
        e = (s.c_log + deg * s.lam_log + ctx.p**s.frob % n * logs) % n if n > 1 else logs * 0
        np.minimum(rep, ctx.exp[e], out=rep)
    nonzero = np.nonzero(rep == np.arange(1, ctx.q))[0] + 1
    return [0] + [int(x) for x in nonzero]


@dataclass
class Task:
    fixed: tuple[tuple[int, int], ...]  # (degree, value) pairs
    mid_degrees: tuple[int, ...]
    inner_vals: np.ndarray
    mid_lo: int
    mid_hi: int


def orbit_tasks(ctx: FieldCtx, r: int) -> list[Task]:
    """Candidate families covering every class of nonzero f with deg <= r.

    For degree k the leading coefficient is an orbit representative, the
    next coefficient a representative under that coefficient's stabilizer,
    and everything below runs free (a_1 innermost).
    """
    q = ctx.q
    everything = np.arange(q, dtype=np.int64)
    tasks = []
    for k in range(1, r + 1):
        lead = leading_reps(ctx, k)
        if k == 1:
            tasks.append(Task((), (), np.asarray(lead, dtype=np.int64), 0, 1))
            continue
        for a in lead:
            second = stabilizer_reps(ctx, stabilizer(ctx, k, a), k - 1)
            if k == 2:
                tasks.append(Task(((2, a),), (), np.asarray(second, dtype=np.int64), 0, 1))
                continue
            mids = tuple(range(k - 2, 1, -1))
            for b in second:
                tasks.append(Task(((k, a), (k - 1, b)), mids, everything, 0, q ** len(mids)))
    return tasks


def split_tasks(tasks: list[Task], ncols: int, chunk_work: int | None = None) -> list[Task]:
    chunk_work = CHUNK_WORK if chunk_work is None else chunk_work
    out = []
    for t in tasks:
        per = max(1, len(t.inner_vals) * ncols)
        step = max(1, chunk_work // per)
        for lo in range(t.mid_lo, t.mid_hi, step):
            out.append(Task(t.fixed, t.mid_degrees, t.inner_vals, lo, min(t.mid_hi, lo + step)))
    return out


def orbit_work(tasks: list[Task], ncols: int) -> int:
    return sum((t.mid_hi - t.mid_lo) * len(t.inner_vals) * ncols for t in tasks)


def setup_work(ctx: FieldCtx, r: int) -> int:
    """Upper bound on the cost of building the tasks (stabilizer passes over F_q)."""
    n, total = ctx.n, 0
    for k in range(2, r + 1):
        nlead = math.gcd(k, n // (ctx.p - 1))
        total += nlead * ctx.m * (ctx.p - 1) * math.gcd(k, n) * ctx.q
    return total


def plan_orbit(ctx: FieldCtx, r: int, ncols: int, budget: int | None = DEFAULT_WORK_BUDGET,
               what: str = "orbit search") -> list[Task]:
    """Orbit tasks for degree <= r, refusing plans whose work exceeds ``budget``."""
    check_key_range(ctx.q, r)
    if budget is not None and setup_work(ctx, r) > budget:
        raise InfeasibleError(what + " (setup)", setup_work(ctx, r), budget)
    tasks = orbit_tasks(ctx, r)
    work = orbit_work(tasks, ncols)
    if budget is not None and work > budget:
        raise InfeasibleError(what, work, budget)
    return tasks


@dataclass
class ScanResult:
    best: int  # largest number of target hits over all candidates
    hist: np.ndarray  # hist[c] = number of candidates with c hits
    keys: np.ndarray  # keys of candidates attaining ``best``
    candidates: int


def orbit_scan(ctx: FieldCtx, table: np.ndarray, r: int, target: int = 0,
               threads: int | None = None, budget: int | None = DEFAULT_WORK_BUDGET,
               backend: str | None = None, what: str = "orbit search",
               tasks: list[Task] | None = None) -> ScanResult:
    """Run the scan kernel over all orbit candidates of degree <= r.

    ``table[k-1, a]`` must hold Tr(a * x^k) over the evaluation points (the
    columns).  Counts of columns equal to ``target`` are maximized.
    ``tasks`` may come from an earlier ``plan_orbit`` call.
    """
    q, p = ctx.q, ctx.p
    ncols = table.shape[2]
    if tasks is None:
        tasks = plan_orbit(ctx, r, ncols, budget, what)
    chunks = split_tasks(tasks, ncols)
    kern = get_backend(backend)
    weights = {k: q ** (r - k) for k in range(1, r + 1)}

    def prepare(task: Task):
        base = np.zeros(ncols, dtype=np.int64)
        key = 0
        for d, v in task.fixed:
            base += table[d - 1, v]
            key += v * weights[d]
        return (np.ascontiguousarray(base % p, dtype=table.dtype), key,
                np.asarray(task.mid_degrees, dtype=np.int64),
                np.asarray([weights[d] for d in task.mid_degrees], dtype=np.int64))

    def run(task: Task, cap: int = 256):
        base, key, mids, mid_w = prepare(task)
        hist = np.zeros(ncols + 1, dtype=np.int64)
        keys = np.empty(cap, dtype=np.int64)
        best, nbest = kern.scan(table, p, base, key, mids, mid_w, task.mid_lo, task.mid_hi,
                                task.inner_vals, weights[1], target, hist, keys)
        return best, nbest, hist, keys[:min(nbest, cap)]

    results = run_chunks(run, chunks, threads)
    best = max(res[0] for res in results)
    hist = np.sum([res[2] for res in results], axis=0)
    found = []
    for task, (b, nbest, _, keys) in zip(chunks, results):
        if b != best:
            continue
        if nbest > keys.size:
            keys = run(task, cap=nbest)[3]
        found.append(keys)
    cands = sum((t.mid_hi - t.mid_lo) * len(t.inner_vals) for t in chunks)
    return ScanResult(best, hist, np.concatenate(found), cands)


# ---------------------------------------------------------------------------


def check_gray_budget(q: int, r: int, ncols: int, budget: int | None, what: str) -> None:
    check_key_range(q, r)
    work = (q**r - 1) * ncols
    if budget is not None and work > budget:
        raise InfeasibleError(what, work, budget)


def gray_search(gen: np.ndarray, p: int, m: int, r: int, q: int,
                threads: int | None = None, budget: int | None = DEFAULT_WORK_BUDGET,
                backend: str | None = None, what: str = "gray search"):
    """Minimum weight over all nonzero messages via the Gray-code kernel.

    ``gen`` has r*m rows ordered by (degree, coordinate).  Returns
    (min_weight, number of messages at the minimum, lex-min key among them).
    """
    total = q**r
    ncols = gen.shape[1]
    check_gray_budget(q, r, ncols, budget, what)
    weights = np.array([p**i * q ** (r - k) for k in range(1, r + 1) for i in range(m)],
                       dtype=np.int64)
    gen = np.ascontiguousarray(gen, dtype=table_dtype(p))
    step = max(1, CHUNK_WORK // max(1, ncols))
    chunks = [(lo, min(total, lo + step)) for lo in range(1, total, step)]
    kern = get_backend(backend)
    results = run_chunks(lambda c: kern.gray_scan(gen, p, m, weights, c[0], c[1]), chunks, threads)
    best = min(res[0] for res in results)
    count = sum(res[1] for res in results if res[0] == best)
    key = min(res[2] for res in results if res[0] == best)
    return int(best), int(count), int(key)
