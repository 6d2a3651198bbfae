import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from asbound import gf
from asbound.gf import build_field

SMALL = [(2, 1), (2, 4), (3, 1), (3, 2), (3, 5), (5, 2), (5, 3), (7, 2), (11, 2), (13, 1), (31, 2)]


def test_prime_helpers():
    assert [n for n in range(20) if gf.is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert gf.prime_factors(360) == [2, 3, 5]
    assert gf.prime_power(343) == (7, 3)
    assert gf.prime_power(12) is None
    assert gf.prime_power(1) is None


def test_moduli_are_smallest_irreducibles(frozen):
    assert build_field(3, 1).modulus == (0, 1)
    assert build_field(7, 2).modulus == (1, 0, 1)
    assert build_field(5, 3).modulus == (1, 1, 0, 1)
    for (p, m, _), row in frozen.items():
        assert list(build_field(p, m).modulus) == row["modulus"]


def test_irreducibility_degree_four_and_up():
    # x^4 + 1 has no roots over F_3 but splits into two quadratics.
    assert not gf.is_irreducible([1, 0, 0, 0, 1], 3)
    assert gf.is_irreducible(list(build_field(3, 4).modulus), 3)
    assert gf.is_irreducible(list(build_field(2, 5).modulus), 2)


def test_f9_examples():
    ctx = build_field(3, 2)
    t = 3  # digits (0, 1)
    assert ctx.mul(t, t) == 2
    assert ctx.trace(t) == 0
    assert ctx.to_vector(ctx.parse_elem("12")) == (2, 1)
    assert build_field(7, 2).to_vector(1 * 7 + 3) == (3, 1)


@pytest.mark.parametrize("p,m", SMALL)
def test_field_axioms_exhaustive(p, m):
    ctx = build_field(p, m)
    xs = np.arange(ctx.q)
    nz = xs[1:]
    inv = np.array([ctx.inv(int(x)) for x in nz])
    assert np.all(ctx.mul_arr(nz, inv) == 1)
    assert np.all(ctx.pow_arr(nz, ctx.q - 1) == 1)
    # additive structure is digitwise
    a, b = np.meshgrid(xs[: min(ctx.q, 50)], xs[: min(ctx.q, 50)])
    s = ctx.add_arr(a, b)
    assert np.array_equal(ctx.digits_arr(s), (ctx.digits_arr(a) + ctx.digits_arr(b)) % p)
    # distributivity on a sample
    c = (a * 7 + 3) % ctx.q
    assert np.array_equal(ctx.mul_arr(c, s), ctx.add_arr(ctx.mul_arr(c, a), ctx.mul_arr(c, b)))


@pytest.mark.parametrize("p,m", SMALL)
def test_trace_properties(p, m):
    ctx = build_field(p, m)
    tr = ctx.trace_table
    xs = np.arange(ctx.q)
    assert np.count_nonzero(tr == 0) == p ** (m - 1)
    assert tr.min() >= 0 and tr.max() < p
    assert np.array_equal(tr[ctx.pow_arr(xs, p)], tr)
    # sum of Frobenius conjugates, computed independently
    direct = np.zeros(ctx.q, dtype=np.int64)
    for i in range(m):
        direct = ctx.add_arr(direct, ctx.pow_arr(xs, p**i))
    assert np.array_equal(direct, tr)
    if m == 1:
        assert np.array_equal(tr, xs)


def test_trace_table_is_read_only():
    ctx = build_field(5, 2)
    with pytest.raises(ValueError):
        ctx.trace_table[0] = 1


def test_enumeration_and_vectors():
    ctx = build_field(5, 3)
    order = ctx.elem_order
    assert list(order) == list(range(1, ctx.q))
    for x in range(ctx.q):
        assert ctx.from_vector(ctx.to_vector(x)) == x
        assert ctx.parse_elem(ctx.format_elem(x)) == x
    assert ctx.to_vector(0) == (0, 0, 0)


def test_format_large_characteristic():
    ctx = build_field(13, 2)
    x = 12 * 13 + 3
    assert ctx.format_elem(x) == "12.3"
    assert ctx.parse_elem("12.3") == x
    assert ctx.parse_elem("5") == 5


def test_build_is_deterministic():
    a = build_field(7, 3)
    build_field.cache_clear()
    b = build_field(7, 3)
    assert a is not b
    assert a.modulus == b.modulus and a.generator == b.generator
    assert np.array_equal(a.trace_table, b.trace_table)
    assert np.array_equal(a.exp, b.exp)


@pytest.mark.parametrize("args", [(4, 1), (1, 1), (3, 0), (2, 23)])
def test_build_errors(args):
    with pytest.raises(ValueError):
        build_field(*args)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        build_field(3, 2).inv(0)


def test_bad_elements():
    ctx = build_field(3, 2)
    for s in ["", "3", "111", "x"]:
        with pytest.raises(ValueError):
            ctx.parse_elem(s)


def test_rank_mod_p():
    assert gf.rank_mod_p(np.zeros((0, 3)), 5) == 0
    assert gf.rank_mod_p([[1, 2], [2, 4]], 5) == 1
    assert gf.rank_mod_p([[1, 2], [1, 1]], 3) == 2
    assert gf.rank_mod_p(np.eye(4, dtype=int) * 7, 7) == 0


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_field_laws_random(pm, data):
    ctx = build_field(*pm)
    x, y, z = (data.draw(st.integers(0, ctx.q - 1)) for _ in range(3))
    assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
    assert ctx.add(x, ctx.neg(x)) == 0
    assert ctx.sub(ctx.add(x, y), y) == x
    assert ctx.trace(ctx.add(x, y)) == (ctx.trace(x) + ctx.trace(y)) % ctx.p
    c = data.draw(st.integers(0, ctx.p - 1))
    assert ctx.trace(ctx.mul(ctx.scalar(c), x)) == c * ctx.trace(x) % ctx.p
    if y:
        assert ctx.mul(ctx.div(x, y), y) == x
    e = data.draw(st.integers(0, 3 * ctx.q))
    expect = 1
    for _ in range(e % 40):
        expect = ctx.mul(expect, x)
    assert ctx.pow(x, e % 40) == expect
