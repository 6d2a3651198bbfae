"""Command-line front end.

Usage:
    asbound mindist -p 7 -m 2 -r 3           # n=48 k=6 d=34 witness=[1,0,1] ...
    asbound table --r 3 --fields 5^2,7^2      # CSV rows for the r = 3 table
    asbound table --r 4 --fields 5^2,7^2 --format md --check-tight
    asbound curve -p 3 -m 2 --poly 1          # y^3 - y = x over F_9
    asbound maxpoints 3 1 2
    asbound verify-r2 7 2
    asbound selftest quick

Polynomials are written a_1,a_2,...,a_r (no constant term; use --constant
for a_0).  Each coefficient is the base-p digit string of its coordinate
vector, most significant first: over F_49 (modulus t^2 + 1) the element
3t + 2 is "32".  Digits are separated by '.' when p > 10, e.g. "12.3".

Exit codes: 0 ok, 1 invalid input, 2 infeasible, 3 internal invariant
violation.  ASBOUND_THREADS sets the default thread budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from dataclasses import dataclass

from . import ascurve, bounds, powcode, quadform, search, selftest
from .gf import build_field, prime_power

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_INVARIANT = 0, 1, 2, 3

CSV_COLUMNS = ["p", "m", "q", "n", "k", "d", "hasse_weil", "serre", "our_bound", "tight", "seconds"]


class InvariantError(RuntimeError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_fields(text: str) -> list[tuple[int, int]]:
    """'5^2,7^2,125' -> [(5, 2), (7, 2), (5, 3)]."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "^" in item:
            p, _, m = item.partition("^")
            pm = (int(p), int(m))
        else:
            pm = prime_power(int(item))
            if pm is None:
                raise ValueError(f"{item} is not a prime power")
        out.append(pm)
    if not out:
        raise ValueError("no fields given")
    return out


def parse_poly(ctx, text: str) -> tuple[int, ...]:
    return tuple(ctx.parse_elem(part) for part in text.split(","))


def _budget(args):
    return None if args.force else int(args.budget)


def _tick():
    return time.perf_counter()


def _yn(flag) -> str:
    return "-" if flag is None else ("yes" if flag else "no")


def _check_row(row: bounds.BoundRow) -> None:
    bad = row.violations()
    if bad:
        raise InvariantError(f"p={row.p} m={row.m} r={row.r}: " + "; ".join(bad))


# ---------------------------------------------------------------------------
# Subcommands.


def cmd_mindist(args) -> int:
    t0 = _tick()
    ctx = build_field(args.p, args.m)
    code = powcode.generator_matrix(ctx, args.r)
    res = powcode.min_distance(code, args.strategy, args.threads, _budget(args))
    _check_row(bounds.BoundRow(ctx.p, ctx.m, args.r, code.k, res.d))
    print(f"n={code.n} k={code.k} d={res.d} witness={powcode.format_poly(ctx, res.witness)} "
          f"n_min={res.n_min} seconds={_tick() - t0:.3f}")
    return EXIT_OK


@dataclass
class TableSpec:
    r: int
    fields: list[tuple[int, int]]
    strategy: str = "orbit"
    threads: int | None = None
    budget: int | None = search.DEFAULT_WORK_BUDGET
    fmt: str = "csv"
    check_tight: bool = False

    def __post_init__(self):
        for p, m in self.fields:
            ctx = build_field(p, m)
            powcode.check_degree(ctx, self.r)


def table_rows(spec: TableSpec, warn=None) -> list[dict]:
    rows = []
    for p, m in spec.fields:
        t0 = _tick()
        ctx = build_field(p, m)
        code = powcode.generator_matrix(ctx, spec.r)
        g = ascurve.genus(p, spec.r)
        row = {"p": p, "m": m, "q": ctx.q, "n": code.n, "k": code.k,
               "hasse_weil": bounds.hasse_weil(ctx.q, g), "serre": bounds.serre(ctx.q, g),
               "square": bounds.is_square(ctx.q), "d": None, "our_bound": None, "tight": None}
        try:
            res = powcode.min_distance(code, spec.strategy, spec.threads, spec.budget)
            n_max = None
            if spec.check_tight:
                n_max = ascurve.max_points(ctx, spec.r, spec.threads, spec.budget).n_max
            brow = bounds.BoundRow(p, m, spec.r, code.k, res.d, n_max, res.witness)
            _check_row(brow)
            row.update(d=res.d, our_bound=brow.our_bound, tight=brow.tight)
        except search.InfeasibleError as exc:
            row["d"] = f"skipped({exc.reason})"
            if warn:
                warn(f"warning: {ctx.q} r={spec.r} skipped: {exc}")
        row["seconds"] = _tick() - t0
        rows.append(row)
    return rows


def format_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([
            row["p"], row["m"], row["q"], row["n"], row["k"], row["d"],
            row["hasse_weil"], row["serre"],
            "" if row["our_bound"] is None else row["our_bound"],
            "" if row["tight"] is None else ("y" if row["tight"] else "n"),
            f"{row['seconds']:.3f}",
        ])
    return buf.getvalue()


def format_markdown(rows, r: int) -> str:
    squares = {row["square"] for row in rows}
    label = {frozenset([True]): "Hasse-Weil bound", frozenset([False]): "Serre bound"}.get(
        frozenset(squares), "Classical bound")
    tight = any(row["tight"] is not None for row in rows)
    head = ["", "q", f"Parameters [n,k,d] (r={r})", label, "Our bound"] + (["Tight"] if tight else [])
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for i, row in enumerate(rows, start=1):
        classical = row["hasse_weil"] if row["square"] else row["serre"]
        cells = [str(i), f"{row['p']}^{row['m']}", f"[{row['n']},{row['k']},{row['d']}]",
                 str(classical), "-" if row["our_bound"] is None else str(row["our_bound"])]
        if tight:
            cells.append(_yn(row["tight"]))
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    spec = TableSpec(args.r, parse_fields(args.fields), args.strategy, args.threads,
                     _budget(args), args.format, args.check_tight)
    rows = table_rows(spec, warn=lambda msg: print(msg, file=sys.stderr))
    out = format_csv(rows) if spec.fmt == "csv" else format_markdown(rows, spec.r)
    sys.stdout.write(out)
    return EXIT_OK


def cmd_curve(args) -> int:
    ctx = build_field(args.p, args.m)
    f = parse_poly(ctx, args.poly)
    constant = ctx.parse_elem(args.constant)
    spec = ascurve.CurveSpec.from_code_poly(ctx, f, constant)
    n_points = ascurve.count_points(spec)
    r = spec.degree
    hw = bounds.hasse_weil(ctx.q, spec.genus)
    se = bounds.serre(ctx.q, spec.genus)
    parts = [f"N={n_points}", f"|Z_f|={spec.zero_count}", f"genus={spec.genus}",
             f"conductor_exponent={spec.conductor_exponent}", f"hasse_weil={hw}", f"serre={se}"]
    flags = [f"hasse_weil_ok={_yn(n_points <= hw)}", f"serre_ok={_yn(n_points <= se)}"]
    if r < ctx.p:
        code = powcode.generator_matrix(ctx, r)
        d = powcode.min_distance(code, "orbit", args.threads, _budget(args)).d
        ours = bounds.new_bound(ctx.p, ctx.m, r, d)
        parts.append(f"our_bound={ours}")
        flags.append(f"our_ok={_yn(n_points <= ours)}")
    else:
        parts.append("our_bound=n/a(deg f >= p)")
    print(" ".join(parts + flags))
    return EXIT_OK


def cmd_maxpoints(args) -> int:
    t0 = _tick()
    ctx = build_field(args.p, args.m)
    code = powcode.generator_matrix(ctx, args.r)
    mp = ascurve.max_points(ctx, args.r, args.threads, _budget(args))
    d = powcode.min_distance(code, "orbit", args.threads, _budget(args)).d
    row = bounds.BoundRow(ctx.p, ctx.m, args.r, code.k, d, mp.n_max, mp.witness)
    _check_row(row)
    print(f"N_max={mp.n_max} witness={powcode.format_poly(ctx, mp.witness)} "
          f"our_bound={row.our_bound} tight={_yn(row.tight)} seconds={_tick() - t0:.3f}")
    return EXIT_OK


def cmd_verify_r2(args) -> int:
    ctx = build_field(args.p, args.m)
    closed = quadform.closed_form_d2(ctx.p, ctx.m)
    code = powcode.generator_matrix(ctx, 2)
    enumerated = powcode.min_distance(code, "orbit", args.threads, _budget(args)).d
    ok = closed == enumerated
    print(f"closed={closed} enumerated={enumerated} {'OK' if ok else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_INVARIANT


def cmd_selftest(args) -> int:
    results = selftest.run(args.level, args.suite or None)
    for res in results:
        print(res.summary())
    failed = [r.name for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed")
    return EXIT_OK if not failed else EXIT_INVARIANT


# ---------------------------------------------------------------------------


def _add_run_flags(sp, strategy=False):
    if strategy:
        sp.add_argument("--strategy", choices=["orbit", "gray"], default="orbit")
    sp.add_argument("--threads", type=int, default=None,
                    help="worker threads (default: ASBOUND_THREADS or CPU count)")
    sp.add_argument("--budget", type=float, default=search.DEFAULT_WORK_BUDGET,
                    help="work cap in elementary F_p operations (default %(default).0e)")
    sp.add_argument("--force", action="store_true", help="disable the feasibility guard")


def _add_pmr(sp, names):
    for name in names:
        sp.add_argument(f"{name}_pos", nargs="?", type=int, metavar=name)
    for name in names:
        sp.add_argument(f"-{name}", type=int, dest=name)


def _merge_pmr(args, names, parser):
    for name in names:
        flag, pos = getattr(args, name, None), getattr(args, f"{name}_pos", None)
        if flag is not None and pos is not None and flag != pos:
            parser.error(f"conflicting values for {name}")
        value = flag if flag is not None else pos
        if value is None:
            parser.error(f"missing {name}")
        setattr(args, name, value)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="asbound", description=__doc__.split("\n\n")[0],
                     epilog=__doc__.split("\n\n", 1)[1],
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("mindist", help="exact minimum distance d(p,m,r) and a witness")
    _add_pmr(sp, ["p", "m", "r"])
    _add_run_flags(sp, strategy=True)
    sp.set_defaults(func=cmd_mindist, pmr=["p", "m", "r"])

    sp = sub.add_parser("table", help="bound-comparison table as CSV or Markdown")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--fields", required=True, help="comma list like 5^2,7^2 or 25,49")
    sp.add_argument("--format", choices=["csv", "md"], default="csv")
    sp.add_argument("--check-tight", action="store_true", help="also compute max N_f per row")
    _add_run_flags(sp, strategy=True)
    sp.set_defaults(func=cmd_table, pmr=[])

    sp = sub.add_parser("curve", help="rational points of y^p - y = f(x)",
                        description="f = constant + a_1 x + ... + a_r x^r, --poly a_1,...,a_r")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("--poly", required=True, help="a_1,...,a_r as base-p digit strings")
    sp.add_argument("--constant", default="0", help="constant term a_0 (default 0)")
    _add_run_flags(sp)
    sp.set_defaults(func=cmd_curve, pmr=[])

    sp = sub.add_parser("maxpoints", help="max N_f over deg f <= r and tightness")
    _add_pmr(sp, ["p", "m", "r"])
    _add_run_flags(sp)
    sp.set_defaults(func=cmd_maxpoints, pmr=["p", "m", "r"])

    sp = sub.add_parser("verify-r2", help="closed-form d(p,m,2) against enumeration")
    _add_pmr(sp, ["p", "m"])
    _add_run_flags(sp)
    sp.set_defaults(func=cmd_verify_r2, pmr=["p", "m"])

    sp = sub.add_parser("selftest", help="run the randomized invariant suites")
    sp.add_argument("level", nargs="?", choices=sorted(selftest.TIERS), default="quick")
    sp.add_argument("--suite", action="append", choices=list(selftest.SUITES))
    sp.set_defaults(func=cmd_selftest, pmr=[])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _merge_pmr(args, args.pmr, parser)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except search.InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (InvariantError, AssertionError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, ZeroDivisionError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
