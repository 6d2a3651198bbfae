"""Randomized invariant suites shared by ``asbound selftest`` and the tests.

Every suite returns a SuiteResult; a failing check records its first
counterexample instead of raising, so a run always reports every suite.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

import numpy as np

from . import ascurve, powcode, quadform, unitgroup
from .gf import build_field

TIERS = {
    # (configs for code-level suites, random samples per config, quadform primes)
    "quick": ([(3, 1, 2), (3, 2, 2), (5, 2, 3), (7, 2, 3), (5, 3, 2)], 1000, (3, 5, 7, 11)),
    "full": ([(3, 1, 2), (3, 2, 2), (3, 3, 2), (5, 2, 3), (5, 2, 4), (7, 2, 3), (5, 3, 3),
              (7, 2, 5), (11, 2, 3), (3, 4, 2)], 2000, (3, 5, 7, 11)),
}


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, cond: bool, msg) -> None:
        self.checks += 1
        if not cond and len(self.failures) < 5:
            self.failures.append(msg() if callable(msg) else msg)

    def summary(self) -> str:
        status = "ok" if self.ok else "FAIL"
        line = f"{self.name:<12} {status:<4} checks={self.checks} seconds={self.seconds:.2f}"
        return line + "".join(f"\n    {f}" for f in self.failures)


def _random_poly(rng, q: int, r: int) -> tuple[int, ...]:
    while True:
        f = tuple(int(a) for a in rng.integers(0, q, size=r))
        if any(f):
            return f


def suite_field(configs, samples, rng) -> SuiteResult:
    res = SuiteResult("field")
    for p, m in sorted({(p, m) for p, m, _ in configs}):
        ctx = build_field(p, m)
        xs = np.arange(ctx.q)
        tr = ctx.trace_table
        res.expect(int(np.count_nonzero(tr == 0)) == p ** (m - 1), f"kernel size wrong for ({p},{m})")
        res.expect(np.array_equal(tr[ctx.pow_arr(xs, p)], tr), f"Tr(x^p) != Tr(x) for ({p},{m})")
        for x in rng.integers(1, ctx.q, size=min(samples, 200)):
            x = int(x)
            res.expect(ctx.mul(x, ctx.inv(x)) == 1, f"x*inv(x) != 1 at x={x} in F_{ctx.q}")
            res.expect(ctx.pow(x, ctx.q - 1) == 1, f"x^(q-1) != 1 at x={x} in F_{ctx.q}")
    return res


def suite_weight(configs, samples, rng) -> SuiteResult:
    """weight(codeword(f)) = q - |Z_f|, and x @ A reproduces the codeword."""
    res = SuiteResult("weight")
    for p, m, r in configs:
        ctx = build_field(p, m)
        code = powcode.generator_matrix(ctx, r)
        mat = code.matrix.astype(np.int64)
        for _ in range(samples):
            f = _random_poly(rng, ctx.q, r)
            w = powcode.weight(code, f)
            z = ascurve.zero_set_size(ctx, (0,) + f)
            res.expect(w == ctx.q - z, lambda: f"({p},{m},{r}) f={f}: weight {w} != q-|Z_f| {ctx.q - z}")
            word = powcode.message_vector(code, f) @ mat % p
            res.expect(np.array_equal(word, powcode.codeword(code, f)),
                       f"({p},{m},{r}) f={f}: x @ A differs from the codeword")
    return res


def _deficient_subset(rng, code, p: int) -> np.ndarray:
    """Columns inside the kernel of a random nonzero functional on F_p^{rm}."""
    mat = code.matrix.astype(np.int64)
    while True:
        phi = rng.integers(0, p, size=mat.shape[0])
        if phi.any():
            break
    inside = np.nonzero(phi @ mat % p == 0)[0] + 1
    if inside.size == 0:
        return inside
    return rng.choice(inside, size=int(rng.integers(1, inside.size + 1)), replace=False)


def suite_rank_equiv(configs, samples, rng) -> SuiteResult:
    """Group-theoretic span of {1 + alpha_i T} versus the rank of G_I."""
    res = SuiteResult("rank-equiv")
    for p, m, r in configs:
        ctx = build_field(p, m)
        code = powcode.generator_matrix(ctx, r)
        full = r * m
        units = [unitgroup.linear_unit(ctx, r, i) for i in range(ctx.q)]
        for trial in range(samples):
            if trial % 3 == 2:
                cols = _deficient_subset(rng, code, p)
            else:
                size = int(rng.integers(0, ctx.n + 1))
                cols = rng.choice(np.arange(1, ctx.q), size=size, replace=False)
            span = unitgroup.span_rank([units[int(i)] for i in cols])
            rank = powcode.columns_rank(code, cols)
            res.expect((span == full) == (rank == full) and span == rank,
                       lambda: f"({p},{m},{r}) I={sorted(int(i) for i in cols)}: span {span} vs rank {rank}")
        # Subgroup sizes by explicit closure on the smallest configuration.
        if ctx.q**r <= 5000:
            for _ in range(20):
                cols = rng.choice(np.arange(1, ctx.q), size=int(rng.integers(1, min(4, ctx.q))), replace=False)
                gens = [units[int(i)] for i in cols]
                size = len(unitgroup.generated_subgroup(gens))
                res.expect(size == p ** unitgroup.span_rank(gens),
                           f"({p},{m},{r}) subgroup size {size} != p^rank")
    return res


def suite_quadform(primes, samples, rng) -> SuiteResult:
    """Diagonal-form solution counts against brute force, n <= 4."""
    res = SuiteResult("quadform")
    for p in primes:
        for n in range(1, 5):
            grid = np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64)
            sq = grid**2
            for _ in range(max(3, samples // 100)):
                coeffs = tuple(int(a) for a in rng.integers(1, p, size=n))
                form = quadform.DiagonalForm(p, coeffs)
                counts = np.bincount(sq @ np.array(coeffs) % p, minlength=p)
                for c in range(p):
                    got = quadform.count_solutions(form, c)
                    res.expect(got == counts[c],
                               f"p={p} coeffs={coeffs} c={c}: formula {got} != brute {counts[c]}")
    return res


def suite_unitgroup(configs, samples, rng) -> SuiteResult:
    res = SuiteResult("unitgroup")
    for p, m, r in configs:
        ctx = build_field(p, m)

        def rand_unit():
            return unitgroup.TruncatedUnit(ctx, r, tuple(int(a) for a in rng.integers(0, ctx.q, size=r)))

        for _ in range(max(1, samples // 5)):
            u, w = rand_unit(), rand_unit()
            lu, lw = unitgroup.log(u), unitgroup.log(w)
            res.expect(unitgroup.exp(ctx, r, lu) == u, f"exp(log(u)) != u for {u.a}")
            res.expect(unitgroup.log(unitgroup.exp(ctx, r, lu)) == lu, f"log(exp(c)) != c for {lu}")
            summed = tuple(ctx.add(a, b) for a, b in zip(lu, lw))
            res.expect(unitgroup.log(u * w) == summed, f"log(uw) != log u + log w for {u.a}, {w.a}")
            res.expect((u**p).is_identity, f"u^p != 1 for {u.a}")
    return res


def suite_hasse_weil(configs, samples, rng) -> SuiteResult:
    """Exact Hasse-Weil check on every curve enumerated, all constant terms."""
    res = SuiteResult("hasse-weil")
    for p, m, r in configs:
        ctx = build_field(p, m)
        exhaustive = ctx.q**r <= 20000
        polys = (itertools.product(range(ctx.q), repeat=r) if exhaustive
                 else (_random_poly(rng, ctx.q, r) for _ in range(samples)))
        for f in polys:
            if not any(f):
                continue
            a0 = int(rng.integers(0, ctx.q))
            deg = max(k for k, a in enumerate(f, start=1) if a)
            z = ascurve.zero_set_size(ctx, (a0,) + tuple(f))
            res.expect(ascurve.hasse_weil_holds(ctx, deg, z),
                       f"({p},{m}) f={(a0,) + tuple(f)}: |Z_f|={z} breaks Hasse-Weil")
    return res


def suite_mindist(configs, samples, rng) -> SuiteResult:
    """Gray and orbit strategies agree; max points attains 1 + p(q - d)."""
    res = SuiteResult("mindist")
    for p, m, r in configs:
        ctx = build_field(p, m)
        if ctx.q**r > 10**6:
            continue
        code = powcode.generator_matrix(ctx, r)
        a = powcode.min_distance(code, "gray", threads=1)
        b = powcode.min_distance(code, "orbit", threads=1)
        res.expect((a.d, a.witness, a.n_min) == (b.d, b.witness, b.n_min),
                   f"({p},{m},{r}): gray {a} != orbit {b}")
        mp = ascurve.max_points(ctx, r, threads=1)
        res.expect(mp.n_max == 1 + p * (ctx.q - b.d), f"({p},{m},{r}): N_max {mp.n_max} not tight")
    return res


SUITES = {
    "field": lambda cfg, n, primes, rng: suite_field(cfg, n, rng),
    "weight": lambda cfg, n, primes, rng: suite_weight(cfg, n, rng),
    "rank-equiv": lambda cfg, n, primes, rng: suite_rank_equiv(cfg, n, rng),
    "quadform": lambda cfg, n, primes, rng: suite_quadform(primes, n, rng),
    "unitgroup": lambda cfg, n, primes, rng: suite_unitgroup(cfg, n, rng),
    "hasse-weil": lambda cfg, n, primes, rng: suite_hasse_weil(cfg, n, rng),
    "mindist": lambda cfg, n, primes, rng: suite_mindist(cfg, n, rng),
}


def run(tier: str = "quick", names=None, seed: int = 20240611) -> list[SuiteResult]:
    if tier not in TIERS:
        raise ValueError(f"unknown tier {tier!r} (expected one of {sorted(TIERS)})")
    configs, samples, primes = TIERS[tier]
    out = []
    for name in names or SUITES:
        rng = np.random.default_rng([seed, len(name)])
        t0 = time.perf_counter()
        res = SUITES[name](configs, samples, primes, rng)
        res.seconds = time.perf_counter() - t0
        out.append(res)
    return out
