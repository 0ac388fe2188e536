"""Quasi-bi^s-nomial coefficients C_[s](n, k).

C_[s](n, k) counts lattice paths from (0, 0) to (n, k) with steps
(1, 0), (1, 1), (2, 1), ..., (s, 1).  Besides the brute-force path count and
the last-step recurrence there are four closed forms, a root-of-unity
expansion, a nested sum with rational weights, and the generalized Delannoy
array, which matches the triangle after an index swap.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .bisnomial import bisnomial_by_expansion
from .exact_core import int_binomial, multinomial, root_of_unity

LATTICE_MAX_N = 18
ROOT_OF_UNITY_MAX_N = 14
DEFAULT_TOLERANCE = 1e-6


def step_set(s: int) -> list[tuple[int, int]]:
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    return [(1, 0)] + [(j, 1) for j in range(1, s + 1)]


def _check(s: int, n: int) -> None:
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")


def quasi_by_lattice_oracle(s: int, n: int, k: int) -> int:
    """Exhaustive depth-first path count.  Exponential; restricted to n <= 18."""
    _check(s, n)
    if n > LATTICE_MAX_N:
        raise ValueError(f"lattice enumeration is limited to n <= {LATTICE_MAX_N}, got n = {n}")
    if k < 0 or k > n:
        return 0
    steps = step_set(s)
    count = 0
    stack = [(0, 0)]
    while stack:
        x, y = stack.pop()
        if x == n and y == k:
            count += 1
            continue
        for dx, dy in steps:
            nx, ny = x + dx, y + dy
            # every remaining sloping step still needs at least one unit of x
            if nx <= n and ny <= k and k - ny <= n - nx:
                stack.append((nx, ny))
    return count


class _TriangleCache:
    def __init__(self, s: int):
        self.s = s
        self.rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def _entry(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        return self.rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        if n >= len(self.rows):
            with self._lock:
                while len(self.rows) <= n:
                    m = len(self.rows)
                    new = tuple(
                        self._entry(m - 1, k) + sum(self._entry(m - j, k - 1) for j in range(1, self.s + 1))
                        for k in range(m + 1)
                    )
                    self.rows.append(new)
        return self.rows[n]


_caches: dict[int, _TriangleCache] = {}
_caches_lock = threading.Lock()


def _cache(s: int) -> _TriangleCache:
    with _caches_lock:
        if s not in _caches:
            _caches[s] = _TriangleCache(s)
        return _caches[s]


def quasi_by_recurrence(s: int, n: int, k: int) -> int:
    """C(n,k) = C(n-1,k) + sum_{j=1..s} C(n-j,k-1), from memoized rows."""
    _check(s, n)
    if k < 0 or k > n:
        return 0
    return _cache(s).row(n)[k]


quasi = quasi_by_recurrence


def triangle_rows(s: int, count: int) -> list[list[int]]:
    _check(s, 0)
    if count < 1:
        raise ValueError("count must be >= 1")
    cache = _cache(s)
    cache.row(count - 1)
    return [list(cache.rows[n]) for n in range(count)]


def _descending(top: int, length: int):
    """All (j_1, ..., j_length) with top >= j_1 >= j_2 >= ... >= 0."""
    if length == 0:
        yield ()
        return
    for j in range(top + 1):
        for rest in _descending(j, length - 1):
            yield (j,) + rest


def _chain_product(start: int, chain: tuple[int, ...]) -> int:
    out = 1
    prev = start
    for j in chain:
        out *= int_binomial(prev, j)
        prev = j
    return out


def quasi_by_explicit_binomial(s: int, n: int, k: int) -> int:
    """sum over j_1 >= ... >= j_{s-1} of C(k,j_1)C(j_1,j_2)...C(j_{s-2},j_{s-1}) C(n - sum j, k)."""
    _check(s, n)
    if k < 0:
        return 0
    total = 0
    for chain in _descending(k, s - 1):
        top = n - sum(chain)
        if top < k:
            continue
        total += _chain_product(k, chain) * int_binomial(top, k)
    return total


def _weak_compositions(parts: int, total: int, budget: int, weight: int = 1):
    """(k_1..k_parts) summing to total with sum_i (i + weight - 1) k_i <= budget."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for k1 in range(total + 1):
        cost = weight * k1
        if cost > budget:
            break
        for rest in _weak_compositions(parts - 1, total - k1, budget - cost, weight + 1):
            yield (k1,) + rest


def quasi_by_explicit_multinomial(s: int, n: int, k: int) -> int:
    """sum over k_1+...+k_s = k of multinomial(k; k_i) C(n + k - sum i k_i, k)."""
    _check(s, n)
    if k < 0:
        return 0
    total = 0
    # C(n + k - w, k) vanishes once w = sum i k_i exceeds n
    for parts in _weak_compositions(s, k, n):
        w = sum(i * ki for i, ki in enumerate(parts, start=1))
        total += multinomial(k, parts) * int_binomial(n + k - w, k)
    return total


def quasi_by_spascal_link(s: int, n: int, k: int) -> int:
    """sum_i C(n-i, k) * bi^(s-1)-nomial(k, i)."""
    _check(s, n)
    if k < 0:
        return 0
    return sum(int_binomial(n - i, k) * bisnomial_by_expansion(s - 1, k, i) for i in range((s - 1) * k + 1))


def quasi_by_demoivre_dual(s: int, n: int, k: int) -> int:
    """sum_j (-1)^j C(k,j) C(n + k - s j, 2k)."""
    _check(s, n)
    if k < 0:
        return 0
    total = 0
    for j in range(k + 1):
        term = int_binomial(k, j) * int_binomial(n + k - s * j, 2 * k)
        total += -term if j & 1 else term
    return total


METHODS = {
    "lattice": quasi_by_lattice_oracle,
    "recurrence": quasi_by_recurrence,
    "explicit": quasi_by_explicit_binomial,
    "multinomial": quasi_by_explicit_multinomial,
    "spascal": quasi_by_spascal_link,
    "demoivre": quasi_by_demoivre_dual,
}


def _compositions(parts: int, total: int, cap: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for j in range(max(0, total - cap * (parts - 1)), min(cap, total) + 1):
        for rest in _compositions(parts - 1, total - j, cap):
            yield (j,) + rest


def root_of_unity_dual(s: int, n: int, k: int) -> complex:
    """sum_j C(n-j,k) (-1)^j sum_{k_1+..+k_{s-1}=j} prod_r C(k,k_r) w^(-sum r k_r), w = exp(2 i pi / s)."""
    _check(s, n)
    if s < 2:
        raise ValueError("the root-of-unity dual needs s >= 2")
    if n > ROOT_OF_UNITY_MAX_N:
        raise ValueError(f"n = {n} exceeds the floating-point limit {ROOT_OF_UNITY_MAX_N}")
    if k < 0:
        return 0j
    acc = 0j
    for j in range(n - k + 1):
        outer = int_binomial(n - j, k)
        if not outer:
            continue
        inner = 0j
        for ks in _compositions(s - 1, j, k):
            weight = 1
            for kr in ks:
                weight *= int_binomial(k, kr)
            expo = sum(r * kr for r, kr in enumerate(ks, start=1))
            inner += weight * root_of_unity(s, -expo)
        acc += (-outer if j & 1 else outer) * inner
    return acc


def verify_root_of_unity_dual(s: int, n: int, k: int, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    z = root_of_unity_dual(s, n, k)
    exact = quasi_by_recurrence(s, n, k)
    return abs(z.real - exact) < tolerance and abs(z.imag) < tolerance


def nested_rational(s: int, n: int, k: int) -> Fraction:
    """Nested sum weighted by 2^{j_1} (3/2)^{j_2} ... (s/(s-1))^{j_{s-1}}, in exact rationals."""
    _check(s, n)
    if s < 2:
        raise ValueError("the rational-weight identity needs s >= 2")
    if k < 0:
        return Fraction(0)
    total = Fraction(0)
    for chain in _descending(k, s - 1):
        *head, last = chain
        term = _chain_product(k, chain) * int_binomial(n - k - sum(head), last)
        if not term:
            continue
        weight = Fraction(1)
        for i, j in enumerate(chain, start=1):
            weight *= Fraction(i + 1, i) ** j
        total += term * weight
    return total


def verify_nested_rational(s: int, n: int, k: int) -> bool:
    value = nested_rational(s, n, k)
    return value.denominator == 1 and value.numerator == quasi_by_recurrence(s, n, k)


@dataclass(frozen=True)
class DelannoyParams:
    """Generalized Delannoy array D_m with horizontal weight ``a`` and weights a_1..a_m."""

    m: int
    a: int = 1
    weights: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if not self.weights:
            object.__setattr__(self, "weights", (1,) * self.m)
        if len(self.weights) != self.m:
            raise ValueError(f"expected {self.m} weights, got {len(self.weights)}")

    @classmethod
    def unit(cls, m: int) -> "DelannoyParams":
        return cls(m, 1, (1,) * m)


def delannoy_table(p: DelannoyParams, max_n: int, max_k: int) -> list[list[int]]:
    """D[n][k] for 0 <= n <= max_n, 0 <= k <= max_k.

    D(n+1,k) = a D(n+1,k-1) + sum_{i=0..m-1} a_{i+1} D(n,k-i), with D(0,k) = a^k,
    D(n,0) = a_1^n, and D = 0 at negative k.
    """
    if max_n < 0 or max_k < 0:
        raise ValueError("max_n and max_k must be >= 0")
    table = [[p.a ** k for k in range(max_k + 1)]]
    for n in range(1, max_n + 1):
        prev = table[-1]
        row = [p.weights[0] ** n]
        for k in range(1, max_k + 1):
            v = p.a * row[k - 1]
            for i in range(p.m):
                if k - i >= 0:
                    v += p.weights[i] * prev[k - i]
            row.append(v)
        table.append(row)
    return table


def verify_delannoy_correspondence(s: int, max_n: int) -> bool:
    """D_s(k, n-k) == C_[s](n, k) for 0 <= k <= n <= max_n with unit weights."""
    if s < 1:
        raise ValueError("s must be >= 1")
    d = delannoy_table(DelannoyParams.unit(s), max_n, max_n)
    return all(d[k][n - k] == quasi_by_recurrence(s, n, k) for n in range(max_n + 1) for k in range(n + 1))
