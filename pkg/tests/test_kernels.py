"""The compiled kernels and the numpy fallback must agree exactly."""

import numpy as np
import pytest

from asbound import ascurve, kernels, powcode, search
from asbound.gf import build_field

compiled = pytest.importorskip("asbound._kernels")

CFGS = [(3, 1, 2), (3, 2, 2), (5, 2, 3), (7, 2, 3), (5, 3, 2), (7, 1, 5), (2, 3, 1)]


def test_backend_selection():
    assert kernels.BACKEND in ("compiled", "python")
    assert kernels.get_backend("python").__name__.endswith("_kernels_py")
    assert kernels.get_backend("compiled") is compiled
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


@pytest.mark.parametrize("p,m,r", CFGS)
@pytest.mark.parametrize("strategy", ["orbit", "gray"])
def test_min_distance_parity(p, m, r, strategy):
    code = powcode.generator_matrix(build_field(p, m), r)
    a = powcode.min_distance(code, strategy, threads=1, backend="compiled")
    b = powcode.min_distance(code, strategy, threads=1, backend="python")
    assert (a.d, a.witness, a.n_min) == (b.d, b.witness, b.n_min)


@pytest.mark.parametrize("p,m,r", CFGS)
@pytest.mark.parametrize("target", [0, 1])
def test_scan_histogram_parity(p, m, r, target):
    ctx = build_field(p, m)
    table = ascurve.evaluation_table(ctx, r)
    a = search.orbit_scan(ctx, table, r, target % p, threads=1, backend="compiled")
    b = search.orbit_scan(ctx, table, r, target % p, threads=1, backend="python")
    assert a.best == b.best
    assert np.array_equal(a.hist, b.hist)
    assert np.array_equal(np.sort(a.keys), np.sort(b.keys))


def test_gray_scan_subranges():
    code = powcode.generator_matrix(build_field(5, 2), 2)
    gen = np.ascontiguousarray(powcode.generator_rows(code), dtype=np.uint8)
    w = np.array([5**i * 25 ** (2 - k) for k in (1, 2) for i in range(2)], dtype=np.int64)
    for lo, hi in [(1, 625), (1, 2), (17, 300), (600, 625)]:
        assert compiled.gray_scan(gen, 5, 2, w, lo, hi) == kernels.get_backend("python").gray_scan(gen, 5, 2, w, lo, hi)


def test_key_overflow_rerun(monkeypatch):
    # a buffer too small for the ties forces the rerun path
    ctx = build_field(7, 2)
    table = powcode.trace_rows(ctx, 3)
    full = search.orbit_scan(ctx, table, 3, threads=1)
    monkeypatch.setattr(search, "CHUNK_WORK", 10**9)
    again = search.orbit_scan(ctx, table, 3, threads=1)
    assert np.array_equal(np.sort(full.keys), np.sort(again.keys))


@pytest.mark.parametrize("p", [257, 263])
@pytest.mark.parametrize("backend", ["compiled", "python"])
def test_primes_past_one_byte(p, backend):
    # Trace values above 255 need wider table entries.
    from asbound.quadform import closed_form_d2

    code = powcode.generator_matrix(build_field(p, 1), 2)
    assert code.table.dtype == np.uint16
    res = powcode.min_distance(code, "orbit", threads=1, backend=backend)
    assert res.d == closed_form_d2(p, 1) == p - 2


def test_wide_table_gray_parity():
    code = powcode.generator_matrix(build_field(257, 1), 2)
    a = powcode.min_distance(code, "gray", threads=1, backend="compiled")
    b = powcode.min_distance(code, "orbit", threads=1, backend="compiled")
    assert (a.d, a.witness, a.n_min) == (b.d, b.witness, b.n_min)


def test_table_dtype():
    assert kernels.table_dtype(251) == np.uint8
    assert kernels.table_dtype(257) == np.uint16
    assert kernels.table_dtype(65537) == np.uint32


def test_benchmark_script_runs(capsys):
    import runpy
    from pathlib import Path

    script = Path(__file__).parents[1] / "benchmarks" / "bench_kernels.py"
    bench = runpy.run_path(str(script))
    bench["main"](["--configs", "5,2,3", "3,2,2"])
    out = capsys.readouterr().out
    assert out.count("orbit") == 2 and out.count("gray") == 2


def test_pure_fallback_selected_by_env():
    import os
    import subprocess
    import sys

    env = dict(os.environ, ASBOUND_PURE="1")
    code = "import asbound; print(asbound.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
