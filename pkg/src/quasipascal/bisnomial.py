"""bi^s-nomial coefficients: the coefficient of x^k in (1 + x + ... + x^s)^n.

Five routes are provided.  ``bisnomial_by_expansion`` is the definition and
serves as the oracle; the others are classical identities checked against it.
Every route accepts s = 0 (the polynomial 1, so only k = 0 survives), which
the quasi-triangle link formula needs at s = 1.
"""
from __future__ import annotations

import threading
from functools import lru_cache

from .exact_core import int_binomial, poly_pow, root_of_unity

ROOT_OF_UNITY_MAX_TERMS = 40
DEFAULT_TOLERANCE = 1e-6


def _check(s: int, n: int) -> None:
    if s < 0:
        raise ValueError(f"s must be non-negative, got {s}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")


@lru_cache(maxsize=None)
def expansion_row(s: int, n: int) -> tuple[int, ...]:
    """Coefficients of (1 + x + ... + x^s)^n by repeated multiplication."""
    _check(s, n)
    return tuple(poly_pow([1] * (s + 1), n))


def bisnomial_by_expansion(s: int, n: int, k: int) -> int:
    row = expansion_row(s, n)
    return row[k] if 0 <= k < len(row) else 0


def _chains(top: int, length: int, total: int):
    """Non-increasing tuples (j_1, ..., j_length) with j_1 <= top summing to total."""
    if length == 0:
        if total == 0:
            yield ()
        return
    # j_1 >= total/length is forced by monotonicity, j_1 <= total by positivity
    lo = -(-total // length)
    for j in range(lo, min(top, total) + 1):
        for rest in _chains(j, length - 1, total - j):
            yield (j,) + rest


def bisnomial_by_nested_sum(s: int, n: int, k: int) -> int:
    """Sum over n >= j_1 >= ... >= j_s with j_1 + ... + j_s = k of C(n,j_1)C(j_1,j_2)...C(j_{s-1},j_s)."""
    _check(s, n)
    if k < 0:
        return 0
    if s == 0:
        return 1 if k == 0 else 0
    total = 0
    for chain in _chains(n, s, k):
        term = int_binomial(n, chain[0])
        for a, b in zip(chain, chain[1:]):
            term *= int_binomial(a, b)
        total += term
    return total


class _LongitudinalTable:
    """Rows of the s-Pascal triangle grown by C_s(n,k) = sum_{j=0..s} C_s(n-1,k-j).

    Readers see only fully built rows; growth happens under a lock.
    """

    def __init__(self, s: int):
        self.s = s
        self.rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        if n >= len(self.rows):
            with self._lock:
                while len(self.rows) <= n:
                    prev = self.rows[-1]
                    width = len(prev) + self.s
                    new = []
                    for k in range(width):
                        acc = 0
                        for j in range(self.s + 1):
                            if 0 <= k - j < len(prev):
                                acc += prev[k - j]
                        new.append(acc)
                    self.rows.append(tuple(new))
        return self.rows[n]


_tables: dict[int, _LongitudinalTable] = {}
_tables_lock = threading.Lock()


def _table(s: int) -> _LongitudinalTable:
    with _tables_lock:
        if s not in _tables:
            _tables[s] = _LongitudinalTable(s)
        return _tables[s]


def bisnomial_by_longitudinal(s: int, n: int, k: int) -> int:
    _check(s, n)
    row = _table(s).row(n)
    return row[k] if 0 <= k < len(row) else 0


@lru_cache(maxsize=None)
def bisnomial_by_diagonal(s: int, n: int, k: int) -> int:
    """C_s(n,k) = sum_j C(n,j) C_{s-1}(j, k-j), bottoming out at the plain binomial."""
    _check(s, n)
    if s == 0:
        return 1 if k == 0 else 0
    if s == 1:
        return int_binomial(n, k)
    if k < 0 or k > s * n:
        return 0
    return sum(int_binomial(n, j) * bisnomial_by_diagonal(s - 1, j, k - j) for j in range(n + 1))


def bisnomial_by_demoivre(s: int, n: int, k: int) -> int:
    """Inclusion-exclusion: sum_j (-1)^j C(n,j) C(k - j(s+1) + n - 1, n - 1)."""
    _check(s, n)
    if n == 0:
        # the second factor is C(., -1) = 0 for every j, which would lose C_s(0,0) = 1
        return 1 if k == 0 else 0
    if k < 0:
        return 0
    total = 0
    for j in range(min(n, (k + n - 1) // (s + 1)) + 1):
        term = int_binomial(n, j) * int_binomial(k - j * (s + 1) + n - 1, n - 1)
        total += -term if j & 1 else term
    return total


def _compositions(parts: int, total: int, cap: int):
    """All (j_1..j_parts) with 0 <= j_r <= cap summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for j in range(max(0, total - cap * (parts - 1)), min(cap, total) + 1):
        for rest in _compositions(parts - 1, total - j, cap):
            yield (j,) + rest


def root_of_unity_bisnomial(s: int, n: int, k: int) -> complex:
    """(-1)^k sum_{j_1+..+j_s=k} prod_r C(n,j_r) a^(-sum r j_r), a = exp(2 i pi/(s+1)), in floating point."""
    _check(s, n)
    if s < 1:
        raise ValueError("the root-of-unity relation needs s >= 1")
    if s * n > ROOT_OF_UNITY_MAX_TERMS:
        raise ValueError(f"s*n = {s * n} exceeds the floating-point limit {ROOT_OF_UNITY_MAX_TERMS}")
    acc = 0j
    for js in _compositions(s, k, n):
        weight = 1
        for j in js:
            weight *= int_binomial(n, j)
        expo = sum(r * j for r, j in enumerate(js, start=1))
        acc += weight * root_of_unity(s + 1, -expo)
    return -acc if k & 1 else acc


def verify_root_of_unity_bisnomial(s: int, n: int, k: int, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    z = root_of_unity_bisnomial(s, n, k)
    exact = bisnomial_by_expansion(s, n, k)
    return abs(z.real - exact) < tolerance and abs(z.imag) < tolerance


METHODS = {
    "expansion": bisnomial_by_expansion,
    "nested": bisnomial_by_nested_sum,
    "longitudinal": bisnomial_by_longitudinal,
    "diagonal": bisnomial_by_diagonal,
    "demoivre": bisnomial_by_demoivre,
}


def bisnomial_row(s: int, n: int) -> list[int]:
    return list(expansion_row(s, n))
