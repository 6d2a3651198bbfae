import math

import pytest
from hypothesis import given, strategies as st

from asbound import ascurve, bounds, powcode, quadform
from asbound.gf import build_field
from reference_values import EXAMPLES, R2_ODD


def test_hasse_weil_and_serre():
    assert bounds.hasse_weil(49, 0) == 50
    assert bounds.hasse_weil(49, 6) == 134
    assert bounds.hasse_weil(25, 6) == 86
    assert bounds.serre(125, 4) == 214
    assert bounds.serre(125, 6) == 258
    assert bounds.serre(125, 0) == 126


@given(st.integers(2, 200), st.integers(0, 50))
def test_square_q_bounds_coincide(p, g):
    q = p * p
    assert bounds.hasse_weil(q, g) == bounds.serre(q, g) == q + 1 + 2 * g * p


@given(st.integers(2, 10**6), st.integers(0, 100))
def test_hasse_weil_floor_is_exact(q, g):
    hw = bounds.hasse_weil(q, g) - q - 1
    assert hw * hw <= 4 * g * g * q < (hw + 1) ** 2


def test_new_bound():
    assert bounds.new_bound(7, 2, 3, 34) == 106
    assert bounds.new_bound(5, 2, 4, 12) == 66
    assert bounds.new_bound(3, 1, 2, 1) == 7
    for d in (0, 49):
        with pytest.raises(ValueError):
            bounds.new_bound(7, 2, 3, d)


def test_d_lower_bound():
    assert bounds.d_lower_bound(7, 2, 3) == 30
    assert bounds.d_lower_bound(5, 3, 3) == 83
    assert bounds.d_lower_bound(7, 2, 1) == 49 - 7
    with pytest.raises(ValueError):
        bounds.d_lower_bound(3, 1, 3)


def test_weil_zf_bound():
    assert bounds.weil_zf_bound(7, 2, 1).value == 0
    assert bounds.weil_zf_bound(7, 2, 1).interval() == (7, 7)
    b = bounds.weil_zf_bound(3, 1, 2)
    assert math.isclose(b.value, 2 / math.sqrt(3))
    assert b.interval() == (0, 2)
    b = bounds.weil_zf_bound(7, 2, 3)
    assert b.value == 12
    assert b.interval() == (0, 19)
    assert b.admits(19) and not b.admits(20)
    with pytest.raises(ValueError):
        bounds.weil_zf_bound(3, 1, 3)


def test_cyclotomic_genus():
    assert bounds.cyclotomic_genus(5, 1, 1) == 0
    assert bounds.cyclotomic_genus(2, 1, 2) == 0
    assert bounds.cyclotomic_genus(3, 1, 2) == 1
    for q in (2, 3, 4, 5, 7, 8, 9):
        for d in (1, 2):
            for n in (1, 2, 3):
                assert bounds.cyclotomic_genus(q, d, n) >= 0
    with pytest.raises(ValueError):
        bounds.cyclotomic_genus(1, 1, 1)


def test_ray_class_degree():
    for q, r in [(3, 2), (7, 3), (25, 4)]:
        assert bounds.ray_class_degree(q, 1, (q - 1) * q**r, 1) == q**r
    assert bounds.ray_class_degree(9, 1, 8) == 1
    assert bounds.ray_class_degree(4, 2, 12) == 8
    with pytest.raises(ValueError):
        bounds.ray_class_degree(4, 1, 4)
    with pytest.raises(ValueError):
        bounds.ray_class_degree(4, 0, 3)


def test_bound_row():
    row = bounds.BoundRow(7, 2, 3, 6, 34, n_max=106)
    assert (row.q, row.n, row.genus) == (49, 48, 6)
    assert (row.hasse_weil, row.serre, row.classical, row.our_bound) == (134, 134, 134, 106)
    assert row.tight is True
    assert row.violations() == []
    cube = bounds.BoundRow(5, 3, 3, 9, 90)
    assert cube.classical == cube.serre == 214 and cube.tight is None
    bad = bounds.BoundRow(7, 2, 3, 6, 20, n_max=300)
    msgs = bad.violations()
    assert any("lower bound" in m for m in msgs) and any("exceeds our bound" in m for m in msgs)
    assert any("Serre" in m for m in msgs)
    assert any("Singleton" in m for m in bounds.BoundRow(7, 2, 3, 6, 44).violations())


@pytest.mark.parametrize("cfg,expected", sorted({**EXAMPLES, **R2_ODD}.items()))
def test_published_rows_outside_the_main_tables(cfg, expected):
    p, m, r = cfg
    code = powcode.generator_matrix(build_field(p, m), r)
    d = powcode.min_distance(code, "orbit", threads=1, budget=None).d
    q, g = p**m, ascurve.genus(p, r)
    classical = bounds.hasse_weil(q, g) if bounds.is_square(q) else bounds.serre(q, g)
    assert (q - 1, r * m, d, classical, bounds.new_bound(p, m, r, d)) == expected
    if r == 2:
        assert d == quadform.closed_form_d2(p, m)
