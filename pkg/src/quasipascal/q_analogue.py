"""q-deformations: q-binomials, q-bi^s-nomials, q-quasi coefficients, q-s-bonacci.

The q-binomial here carries the extra factor q^C(k,2), so that
sum_k [n k] x^k = (1+x)(1+qx)...(1+q^(n-1)x).  Bivariate polynomials in
(x, q) are tuples of QPoly indexed by the power of x.
"""
from __future__ import annotations

import threading
from functools import lru_cache

from .exact_core import QPoly, Series, int_binomial

ROUTES = ("recurrence_a", "recurrence_b")

XQPoly = tuple  # tuple[QPoly, ...], index = power of x


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    out = QPoly.one
    for i in range(1, n + 1):
        out = out * QPoly.bracket(i)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """[n]_q! / ([k]_q! [n-k]_q!) * q^C(k,2), by exact long division; 0 off 0..n."""
    if n < 0 or k < 0 or k > n:
        return QPoly.zero
    den = q_factorial(k) * q_factorial(n - k)
    return q_factorial(n).exact_div(den).shift(int_binomial(k, 2))


def q_binomial_recurrence_sides(n: int, k: int) -> tuple[QPoly, QPoly]:
    """Right-hand sides of the two Pascal-type recurrences for [n k]."""
    first = q_binomial(n - 1, k) + q_binomial(n - 1, k - 1).shift(n - 1)
    second = q_binomial(n - 1, k).shift(k)
    if k >= 1:
        second = second + q_binomial(n - 1, k - 1).shift(k - 1)
    return first, second


def verify_q_binomial_recurrences(n_max: int) -> bool:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            target = q_binomial(n, k)
            first, second = q_binomial_recurrence_sides(n, k)
            if first != target or second != target:
                return False
    return True


def _xq_mul(a: XQPoly, b: XQPoly) -> XQPoly:
    if not a or not b:
        return ()
    out = [QPoly.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return tuple(out)


@lru_cache(maxsize=None)
def q_bisnomial_row(s: int, n: int) -> XQPoly:
    """x-coefficients of prod_{j<n} (1 + q^j x + ... + (q^j x)^s)."""
    if s < 0 or n < 0:
        raise ValueError("s and n must be >= 0")
    if n == 0:
        return (QPoly.one,)
    j = n - 1
    factor = tuple(QPoly.monomial(j * i) for i in range(s + 1))
    return _xq_mul(q_bisnomial_row(s, n - 1), factor)


def q_bisnomial(s: int, n: int, k: int) -> QPoly:
    row = q_bisnomial_row(s, n)
    return row[k] if 0 <= k < len(row) else QPoly.zero


def q_bisnomial_recurrence_sides(s: int, n: int, k: int) -> tuple[QPoly, QPoly]:
    """sum_j q^(k-j) [n-1, k-j]^(s) and sum_j q^((n-1)j) [n-1, k-j]^(s)."""
    first = QPoly.zero
    second = QPoly.zero
    for j in range(s + 1):
        prev = q_bisnomial(s, n - 1, k - j)
        if prev:
            first = first + prev.shift(k - j)
            second = second + prev.shift((n - 1) * j)
    return first, second


class _QQuasiCache:
    """Rows of q-quasi coefficients for one (s, route), grown under a lock."""

    def __init__(self, s: int, route: str):
        self.s = s
        self.route = route
        self.rows: list[tuple[QPoly, ...]] = [(QPoly.one,)]
        self._lock = threading.Lock()

    def _entry(self, n: int, k: int) -> QPoly:
        if n < 0 or k < 0 or k > n:
            return QPoly.zero
        return self.rows[n][k]

    def _next_row(self, n: int) -> tuple[QPoly, ...]:
        s = self.s
        out = []
        for k in range(n + 1):
            if self.route == "recurrence_a":
                v = self._entry(n - 1, k)
                for j in range(1, s + 1):
                    prev = self._entry(n - j, k - 1)
                    if prev:
                        v = v + prev.shift(n - j)
            else:
                v = self._entry(n - 1, k).shift(k)
                for j in range(1, s + 1):
                    prev = self._entry(n - j, k - 1)
                    if prev:
                        v = v + prev.shift((k - 1) * j)
            out.append(v)
        return tuple(out)

    def row(self, n: int) -> tuple[QPoly, ...]:
        if n >= len(self.rows):
            with self._lock:
                while len(self.rows) <= n:
                    self.rows.append(self._next_row(len(self.rows)))
        return self.rows[n]


_caches: dict[tuple[int, str], _QQuasiCache] = {}
_caches_lock = threading.Lock()


def _cache(s: int, route: str) -> _QQuasiCache:
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")
    if s < 1:
        raise ValueError("s must be >= 1")
    with _caches_lock:
        key = (s, route)
        if key not in _caches:
            _caches[key] = _QQuasiCache(s, route)
        return _caches[key]


def q_quasi(s: int, n: int, k: int, route: str = "recurrence_a") -> QPoly:
    cache = _cache(s, route)
    if n < 0 or k < 0 or k > n:
        return QPoly.zero
    return cache.row(n)[k]


def q_triangle_rows(s: int, count: int, route: str = "recurrence_a") -> list[list[QPoly]]:
    if count < 1:
        raise ValueError("count must be >= 1")
    cache = _cache(s, route)
    cache.row(count - 1)
    return [list(cache.rows[n]) for n in range(count)]


def q_quasi_by_explicit(s: int, n: int, k: int) -> QPoly:
    """sum_j [n-j, k]_q * [k, j]^(s-1)."""
    if s < 1:
        raise ValueError("s must be >= 1")
    if n < 0 or k < 0 or k > n:
        return QPoly.zero
    total = QPoly.zero
    for j in range((s - 1) * k + 1):
        a = q_binomial(n - j, k)
        if a:
            total = total + a * q_bisnomial(s - 1, k, j)
    return total


def q_quasi_gf(s: int, k: int, order: int) -> Series:
    """x^k q^C(k,2) prod_{j<k}(1 + q^j x + ... + (q^j x)^(s-1)) / prod_{j<=k}(1 - q^j x), truncated."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if s < 1 or k < 0:
        raise ValueError("need s >= 1 and k >= 0")
    zero = QPoly.zero
    num = (QPoly.monomial(int_binomial(k, 2)),)
    for j in range(k):
        num = _xq_mul(num, tuple(QPoly.monomial(j * i) for i in range(s)))
    series = Series.truncate((zero,) * k + num, order, zero)
    for j in range(k + 1):
        den = Series.truncate([QPoly.one, -QPoly.monomial(j)], order, zero)
        series = series * den.inverse()
    return series


# q-s-bonacci polynomials

def _xq_add(a: XQPoly, b: XQPoly) -> XQPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _xq_trim(out)


def _xq_trim(a) -> XQPoly:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return tuple(a)


def xq_scale(t: XQPoly, base: int, per_degree: int) -> XQPoly:
    """Replace the x^m coefficient c by c * q^(base + per_degree * m).

    This is T(x q^per_degree) times q^base.  Negative exponents must cancel
    exactly against powers of q already present; otherwise ArithmeticError.
    """
    return _xq_trim(c.shift(base + per_degree * m) if c else c for m, c in enumerate(t))


def xq_shift_x(t: XQPoly, m: int = 1) -> XQPoly:
    return _xq_trim((QPoly.zero,) * m + tuple(t)) if t else ()


def q_sbonacci(s: int, count: int, x_degree_cap: int | None = None) -> list[XQPoly]:
    """T_0..T_{count-1}, T_{n+1}(x) = sum_k [n-k, k]_[s] x^k, T_0 = 0.

    ``x_degree_cap`` bounds the x-degree of every term; exceeding it raises
    instead of truncating.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    terms: list[XQPoly] = [()]
    for n in range(count - 1):
        coeffs = [q_quasi(s, n - k, k) for k in range(n // 2 + 1)]
        t = _xq_trim(coeffs)
        if x_degree_cap is not None and len(t) - 1 > x_degree_cap:
            raise ValueError(f"T_{n + 1} has x-degree {len(t) - 1} > cap {x_degree_cap}")
        terms.append(t)
    return terms


def q_sbonacci_recurrence_sides(s: int, terms: list[XQPoly], n: int) -> tuple[XQPoly, XQPoly]:
    """Right-hand sides for T_{n+1}:

    T_n(x) + x sum_j q^(n-j-1) T_{n-j}(x/q)   and   T_n(xq) + x sum_j T_{n-j}(x q^j).
    Terms with negative index are zero.
    """

    def t(i):
        return terms[i] if i >= 0 else ()

    first_tail: XQPoly = ()
    second_tail: XQPoly = ()
    for j in range(1, s + 1):
        prev = t(n - j)
        if prev:
            first_tail = _xq_add(first_tail, xq_scale(prev, n - j - 1, -1))
            second_tail = _xq_add(second_tail, xq_scale(prev, 0, j))
    first = _xq_add(t(n), xq_shift_x(first_tail))
    second = _xq_add(xq_scale(t(n), 0, 1), xq_shift_x(second_tail))
    return first, second


def verify_q_sbonacci(s: int, count: int) -> bool:
    """Both recurrences for T_2..T_{count-1}; T_1 = 1 is the initial condition."""
    terms = q_sbonacci(s, count)
    for n in range(1, count - 1):
        first, second = q_sbonacci_recurrence_sides(s, terms, n)
        if first != terms[n + 1] or second != terms[n + 1]:
            return False
    return True


def xq_eval(t: XQPoly, x, q):
    return sum((c(q) * x ** m for m, c in enumerate(t)), 0)
