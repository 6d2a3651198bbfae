"""Compiled kernels versus the numpy fallback.

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --configs 7,2,3 11,2,3 --repeat 3

Each row times one exhaustive minimum-distance search per backend (best of
--repeat runs, single thread) and checks that both return the same answer.
"""

import argparse
import time

from asbound import kernels, powcode
from asbound.gf import build_field

DEFAULT = ["5,2,3", "7,2,3", "11,2,3", "7,2,4", "7,2,5", "17,2,4", "11,2,5"]


def best_time(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--configs", nargs="+", default=DEFAULT, help="p,m,r triples")
    ap.add_argument("--strategy", nargs="+", default=["orbit", "gray"], choices=["orbit", "gray"])
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args(argv)

    if kernels.BACKEND != "compiled":
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    print(f"{'config':<10} {'strategy':<8} {'compiled s':>11} {'python s':>10} {'speedup':>8}  d")
    for cfg in args.configs:
        p, m, r = (int(x) for x in cfg.split(","))
        code = powcode.generator_matrix(build_field(p, m), r)
        for strategy in args.strategy:
            if strategy == "gray" and code.ctx.q ** r > 2 * 10**7:
                continue
            times = {}
            for backend in ("compiled", "python"):
                times[backend] = best_time(
                    lambda: powcode.min_distance(code, strategy, threads=1, budget=None,
                                                 backend=backend), args.repeat)
            (tc, a), (tp, b) = times["compiled"], times["python"]
            if (a.d, a.witness, a.n_min) != (b.d, b.witness, b.n_min):
                raise SystemExit(f"{cfg} {strategy}: backends disagree: {a} vs {b}")
            print(f"{cfg:<10} {strategy:<8} {tc:>11.4f} {tp:>10.4f} {tp / tc:>7.1f}x  {a.d}")


if __name__ == "__main__":
    main()
