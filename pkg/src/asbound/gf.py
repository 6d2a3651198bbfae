"""Arithmetic in F_p and F_{p^m} with a pinned, reproducible model.

Elements of F_q are plain integers 0..q-1.  The integer ``x`` stands for
the polynomial sum_i x_i t^i where x_0, x_1, ... are the base-p digits of
``x`` (least significant first), reduced modulo the field's modulus
polynomial.  With that encoding the fixed enumeration of F_q^* is simply
alpha_i = i for i = 1..q-1.

Multiplication goes through discrete log / antilog tables built once per
field, so every operation below is table lookups plus integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

DEFAULT_SIZE_LIMIT = 1 << 22


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p^m, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, math.isqrt(q) + 2):
        if q % p == 0:
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            return (p, m) if q == 1 else None
    return (q, 1)


# ---------------------------------------------------------------------------
# Polynomials over F_p as coefficient lists, low degree first.  Only used to
# pick and validate the modulus; the field itself never touches these.


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _ptrim(list(a))
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        _ptrim(a)
    return a


def _pmulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, mod, p)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result


def is_irreducible(poly: list[int], p: int) -> bool:
    """Irreducibility over F_p of a monic polynomial (low degree first).

    Degree <= 3 uses the root test; otherwise gcd(x^{p^i} - x, f) = 1 is
    checked for every i <= deg/2.
    """
    m = len(poly) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if m <= 3:
        for x in range(p):
            if sum(c * pow(x, i, p) for i, c in enumerate(poly)) % p == 0:
                return False
        return True
    xp = [0, 1]
    for _ in range(m // 2):
        xp = _ppowmod(xp, p, poly, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(poly, _ptrim(diff), p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m whose lower coefficients, read as base-p
    digits (constant term least significant), form the smallest integer."""
    for code in range(p**m):
        low = [(code // p**i) % p for i in range(m)]
        poly = low + [1]
        if m > 1 and low[0] == 0:
            continue
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {m} over F_{p}")


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Concrete model of F_{p^m}.

    ``exp[i]`` is g^i for the primitive element g with the smallest index,
    ``log`` is its inverse on F_q^* (``log[0] == -1``) and ``trace[x]`` is
    Tr(x) in 0..p-1.  Immutable once built and safe to share across threads.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int
    generator: int
    exp: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)
    trace_table: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.q - 1

    @property
    def elem_order(self) -> np.ndarray:
        return np.arange(1, self.q, dtype=np.int64)

    # -- scalar operations -------------------------------------------------

    def add(self, x: int, y: int) -> int:
        p = self.p
        if self.m == 1:
            return (x + y) % p
        out, w = 0, 1
        while x or y:
            out += ((x % p + y % p) % p) * w
            x //= p
            y //= p
            w *= p
        return out

    def neg(self, x: int) -> int:
        p = self.p
        out, w = 0, 1
        while x:
            out += ((-x) % p) * w
            x //= p
            w *= p
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self.exp[(int(self.log[x]) + int(self.log[y])) % self.n])

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        return int(self.exp[(-int(self.log[x])) % self.n])

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        """Square-and-multiply; ``pow(0, 0) == 1``."""
        if e < 0:
            x, e = self.inv(x), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def trace(self, x: int) -> int:
        return int(self.trace_table[x])

    def scalar(self, c: int) -> int:
        """Embed an integer into the prime subfield."""
        return c % self.p

    # -- vectorized operations on integer arrays ---------------------------

    def add_arr(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.m == 1:
            return (x + y) % self.p
        p, out, w = self.p, np.zeros(np.broadcast(x, y).shape, dtype=np.int64), 1
        for _ in range(self.m):
            out += ((x // w % p + y // w % p) % p) * w
            w *= p
        return out

    def mul_arr(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        zero = (x == 0) | (y == 0)
        e = (self.log[np.where(x == 0, 1, x)] + self.log[np.where(y == 0, 1, y)]) % self.n
        return np.where(zero, 0, self.exp[e])

    def pow_arr(self, x, e: int):
        x = np.asarray(x, dtype=np.int64)
        result = np.ones_like(x)
        base = x.copy()
        while e:
            if e & 1:
                result = self.mul_arr(result, base)
            base = self.mul_arr(base, base)
            e >>= 1
        return result

    def eval_arr(self, coeffs, xs):
        """Horner evaluation of sum_k coeffs[k] x^k (coeffs[0] is the constant)."""
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros_like(xs)
        for c in reversed(list(coeffs)):
            acc = self.add_arr(self.mul_arr(acc, xs), c)
        return acc

    # -- vectorization over F_p --------------------------------------------

    def to_vector(self, x: int) -> tuple[int, ...]:
        return tuple((x // self.p**i) % self.p for i in range(self.m))

    def from_vector(self, v) -> int:
        if len(v) != self.m:
            raise ValueError(f"expected {self.m} coordinates, got {len(v)}")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(v))

    def digits_arr(self, xs) -> np.ndarray:
        """Coordinate vectors of an array of elements, shape (..., m)."""
        xs = np.asarray(xs, dtype=np.int64)
        pw = self.p ** np.arange(self.m, dtype=np.int64)
        return (xs[..., None] // pw) % self.p

    def format_elem(self, x: int) -> str:
        """Base-p digit string, most significant first ('.'-separated if p > 10)."""
        digits = list(reversed(self.to_vector(x)))
        while len(digits) > 1 and digits[0] == 0:
            digits.pop(0)
        sep = "" if self.p <= 10 else "."
        return sep.join(str(d) for d in digits)

    def parse_elem(self, s: str) -> int:
        s = s.strip()
        if not s:
            raise ValueError("empty field element")
        parts = s.split(".") if (self.p > 10 or "." in s) else list(s)
        try:
            digits = [int(d) for d in parts]
        except ValueError:
            raise ValueError(f"bad field element {s!r}") from None
        if len(digits) > self.m or any(not 0 <= d < self.p for d in digits):
            raise ValueError(f"{s!r} is not an element of F_{self.q}")
        return sum(d * self.p**i for i, d in enumerate(reversed(digits)))

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={self.modulus})"


def _find_generator(p: int, m: int, modulus: tuple[int, ...]) -> int:
    q = p**m
    n = q - 1
    if n == 1:
        return 1
    mod = list(modulus)
    factors = prime_factors(n)
    for g in range(2, q):
        poly = _ptrim([(g // p**i) % p for i in range(m)])
        if all(_ppowmod(poly, n // f, mod, p) != [1] for f in factors):
            return g
    raise AssertionError("multiplicative group has no generator")


@lru_cache(maxsize=64)
def build_field(p: int, m: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> FieldCtx:
    """Build F_{p^m} with the lexicographically smallest monic irreducible modulus.

    Results are cached; a rebuild of the same (p, m) returns identical tables.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p={p!r} is not prime")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"extension degree m={m!r} must be a positive integer")
    q = p**m
    if q > size_limit:
        raise ValueError(f"q={p}^{m}={q} exceeds the field size limit {size_limit}")

    modulus = smallest_irreducible(p, m)
    g = _find_generator(p, m, modulus)

    # Antilog table by repeated multiplication with g: work on digit vectors,
    # multiplying by g is a fixed F_p-linear map (the matrix of x -> g*x).
    n = q - 1
    mod = list(modulus)
    gpoly = [(g // p**i) % p for i in range(m)]
    mat = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        col = _pmulmod(gpoly, [0] * i + [1], mod, p)
        for j, c in enumerate(col):
            mat[j, i] = c
    # Doubling: rows 0..L-1 hold g^0..g^{L-1}; multiplying them by g^L gives
    # the next L powers.
    weights = p ** np.arange(m, dtype=np.int64)
    vecs = np.zeros((1, m), dtype=np.int64)
    vecs[0, 0] = 1
    step = mat.copy()
    while len(vecs) < n:
        vecs = np.concatenate([vecs, vecs @ step.T % p])
        step = step @ step % p
    vecs = vecs[:n]
    if not np.array_equal(mat @ vecs[-1] % p, vecs[0]):
        raise AssertionError("generator order is not q-1")
    exp = vecs @ weights
    log = np.full(q, -1, dtype=np.int64)
    log[exp] = np.arange(n, dtype=np.int64)
    if (log[1:] < 0).any():
        raise AssertionError("antilog table misses an element")

    # Tr is F_p-linear: Tr(x) = sum_i x_i Tr(t^i); the basis traces are
    # computed as t^i + t^{ip} + ... directly from the antilog table.
    basis_tr = []
    for i in range(m):
        e0 = int(log[p**i])
        acc = 0
        for j in range(m):
            term = int(exp[(e0 * p**j) % n])
            acc = _add_scalar(acc, term, p)
        if acc >= p:
            raise AssertionError("trace left the prime field")
        basis_tr.append(acc)
    digits = (np.arange(q, dtype=np.int64)[:, None] // weights) % p
    trace_table = (digits @ np.asarray(basis_tr, dtype=np.int64)) % p

    for arr in (exp, log, trace_table):
        arr.setflags(write=False)
    return FieldCtx(p, m, modulus, q, g, exp, log, trace_table)


def _add_scalar(x: int, y: int, p: int) -> int:
    out, w = 0, 1
    while x or y:
        out += ((x % p + y % p) % p) * w
        x //= p
        y //= p
        w *= p
    return out


def rank_mod_p(mat, p: int) -> int:
    """Rank over F_p by Gaussian elimination."""
    a = np.array(mat, dtype=np.int64) % p
    if a.size == 0:
        return 0
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank] = a[rank] * pow(int(a[rank, c]), -1, p) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != rank]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[rank])) % p
        rank += 1
    return rank
