"""Closed forms for r = 2 via diagonal quadratic forms over F_p.

For a != 0 the map x -> Tr(a x^2) is a nondegenerate quadratic form in the
m coordinates of x.  After diagonalization the number of solutions of
Tr(a x^2 + b x) = 0 follows from the classical counts for
a_1 z_1^2 + ... + a_n z_n^2 = c over a prime field.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .gf import FieldCtx, is_prime


def _check_odd(p: int) -> None:
    if p == 2:
        raise ValueError("quadratic-form counts need odd characteristic (p = 2 given)")
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")


def quadratic_character(p: int, c: int) -> int:
    """Legendre symbol via Euler's criterion; eta(0) = 0."""
    _check_odd(p)
    c %= p
    if c == 0:
        return 0
    return 1 if pow(c, (p - 1) // 2, p) == 1 else -1


def v(q: int, c: int) -> int:
    return q - 1 if c % q == 0 else -1


@dataclass(frozen=True)
class DiagonalForm:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_odd(self.p)
        coeffs = tuple(int(a) % self.p for a in self.coeffs)
        if not coeffs or any(a == 0 for a in coeffs):
            raise ValueError("diagonal entries must be nonzero (nondegenerate form)")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def det(self) -> int:
        return prod(self.coeffs) % self.p


def count_even(form: DiagonalForm, c: int) -> int:
    """#{x in F_p^n : form(x) = c} for even n."""
    n, p = form.n, form.p
    if n % 2:
        raise ValueError("count_even needs an even number of variables")
    eta = quadratic_character(p, (-1) ** (n // 2) * form.det)
    return p ** (n - 1) + v(p, c) * p ** ((n - 2) // 2) * eta


def count_odd(form: DiagonalForm, c: int) -> int:
    """#{x in F_p^n : form(x) = c} for odd n."""
    n, p = form.n, form.p
    if n % 2 == 0:
        raise ValueError("count_odd needs an odd number of variables")
    eta = quadratic_character(p, (-1) ** ((n - 1) // 2) * c * form.det)
    return p ** (n - 1) + p ** ((n - 1) // 2) * eta


def count_solutions(form: DiagonalForm, c: int) -> int:
    return count_even(form, c) if form.n % 2 == 0 else count_odd(form, c)


def closed_form_d2(p: int, m: int) -> int:
    """d(p, m, 2) for odd p."""
    _check_odd(p)
    if m % 2 == 0:
        return (p - 1) * p ** (m - 1) - (p - 1) * p ** ((m - 2) // 2)
    return (p - 1) * p ** (m - 1) - p ** ((m - 1) // 2)


def bound_r2(p: int, m: int) -> int:
    """Tight upper bound on N_f for deg f = 2."""
    _check_odd(p)
    q = p**m
    if m % 2:
        return q + 1 + p ** ((m + 1) // 2)
    return q + 1 + (p - 1) * p ** (m // 2)


def diagonalize(gram, p: int) -> tuple[list[int], np.ndarray]:
    """Congruence-diagonalize a symmetric matrix over F_p (p odd).

    Returns (diagonal entries, P) with P^T G P = diag(entries).  Raises
    ValueError if the form is degenerate.
    """
    g = np.array(gram, dtype=np.int64) % p
    n = g.shape[0]
    basis = np.eye(n, dtype=np.int64)

    def congruence(e):
        nonlocal g, basis
        g = (e.T @ g @ e) % p
        basis = (basis @ e) % p

    for i in range(n):
        if g[i, i] == 0:
            swap = next((j for j in range(i + 1, n) if g[j, j]), None)
            if swap is not None:
                e = np.eye(n, dtype=np.int64)
                e[[i, swap]] = e[[swap, i]]
                congruence(e)
            else:
                partner = next((j for j in range(i + 1, n) if g[i, j]), None)
                if partner is None:
                    raise ValueError("degenerate quadratic form")
                # e_i -> e_i + e_j gives a nonzero diagonal entry 2 g_ij.
                e = np.eye(n, dtype=np.int64)
                e[partner, i] = 1
                congruence(e)
        inv = pow(int(g[i, i]), -1, p)
        e = np.eye(n, dtype=np.int64)
        for j in range(i + 1, n):
            e[i, j] = (-g[i, j] * inv) % p
        congruence(e)
    return [int(g[i, i]) for i in range(n)], basis


def trace_gram(ctx: FieldCtx, a: int) -> np.ndarray:
    """Gram matrix (Tr(a t^i t^j))_{i,j} of x -> Tr(a x^2) in the polynomial basis."""
    basis = [ctx.p**i for i in range(ctx.m)]
    return np.array([[ctx.trace(ctx.mul(a, ctx.mul(bi, bj))) for bj in basis] for bi in basis],
                    dtype=np.int64)


def trace_form(ctx: FieldCtx, a: int) -> tuple[DiagonalForm, np.ndarray]:
    if a == 0:
        raise ValueError("a must be nonzero")
    diag, basis = diagonalize(trace_gram(ctx, a), ctx.p)
    return DiagonalForm(ctx.p, tuple(diag)), basis


def trace_form_weight(ctx: FieldCtx, a: int, b: int) -> int:
    """Hamming weight of (Tr(a x^2 + b x))_{x in F_q^*} from the solution counts.

    With x = P y the equation becomes sum_i d_i y_i^2 + sum_i beta_i y_i = 0,
    completing squares gives sum_i d_i z_i^2 = sum_i beta_i^2 / (4 d_i).
    """
    p = ctx.p
    _check_odd(p)
    form, basis = trace_form(ctx, a)
    lin = np.array([ctx.trace(ctx.mul(b, ctx.p**i)) for i in range(ctx.m)], dtype=np.int64)
    beta = (basis.T @ lin) % p
    c = sum(int(bi) ** 2 * pow(4 * di, -1, p) for bi, di in zip(beta, form.coeffs)) % p
    zeros = count_solutions(form, c)  # over F_q, x = 0 included
    return ctx.q - zeros


def determinant_character(ctx: FieldCtx, a: int) -> int:
    """eta((-1)^(m/2) * Delta_a) for the trace form of a (m even)."""
    form, _ = trace_form(ctx, a)
    return quadratic_character(ctx.p, (-1) ** (ctx.m // 2) * form.det)
