"""Sums along rays of the quasi triangle.

T_n = sum_k C_[s](n - 1 - r k, beta + alpha k) with T_0 = 0.  The principal
diagonal (alpha, beta, r) = (1, 0, 1) gives the s-bonacci numbers.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bisnomial import bisnomial_by_expansion
from .exact_core import int_binomial
from .quasi_triangle import quasi_by_recurrence


@dataclass(frozen=True)
class Direction:
    alpha: int
    beta: int
    r: int

    def __post_init__(self):
        if self.alpha < 1:
            raise ValueError(f"alpha must be a positive integer, got {self.alpha}")
        if not 0 <= self.beta < self.alpha:
            raise ValueError(f"beta must satisfy 0 <= beta < alpha, got beta={self.beta}, alpha={self.alpha}")
        if self.r + self.alpha <= 0:
            raise ValueError(f"r + alpha must be positive, got r={self.r}, alpha={self.alpha}")


DIAGONAL = Direction(1, 0, 1)


def ray_sum_direct(s: int, d: Direction, n: int) -> int:
    """T_n for direction d; T_0 = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    m = n - 1
    total = 0
    k = 0
    # a nonzero entry needs beta + alpha k <= m - r k, i.e. (alpha + r) k <= m - beta;
    # alpha + r > 0 bounds k even when r is negative
    while d.beta + d.alpha * k <= m - d.r * k:
        total += quasi_by_recurrence(s, m - d.r * k, d.beta + d.alpha * k)
        k += 1
    return total


def ray_sequence(s: int, d: Direction, count: int) -> list[int]:
    if count < 1:
        raise ValueError("count must be >= 1")
    return [ray_sum_direct(s, d, n) for n in range(count)]


def sbonacci(s: int, count: int) -> list[int]:
    """T_0..T_{count-1} from diagonal sums T_{n+1} = sum_k C_[s](n-k, k)."""
    terms = ray_sequence(s, DIAGONAL, count)
    for n in range(1, count - 1):
        expected = sum(terms[n - i] for i in range(s + 1) if n - i >= 0)
        assert terms[n + 1] == expected, f"s-bonacci recurrence broken at n={n}"
    return terms


def sbonacci_by_recurrence(s: int, count: int) -> list[int]:
    """T_{n+1} = T_n + ... + T_{n-s}, T_1 = 1, earlier terms 0."""
    terms = [0, 1][:count]
    while len(terms) < count:
        terms.append(sum(terms[-(s + 1):]))
    return terms


def ray_recurrence_sides(s: int, d: Direction, n: int, terms: list[int]) -> tuple[int, int]:
    """Both sides of sum_i (-1)^i C(alpha,i) T_{n-i} = sum_i C_{s-1}(alpha,i) T_{n-alpha-r-i}."""
    a = d.alpha

    def t(i):
        return terms[i] if i >= 0 else 0

    lhs = sum((-1) ** i * int_binomial(a, i) * t(n - i) for i in range(a + 1))
    rhs = sum(bisnomial_by_expansion(s - 1, a, i) * t(n - a - d.r - i) for i in range(a * (s - 1) + 1))
    return lhs, rhs


def verify_ray_recurrence(s: int, d: Direction, n_max: int) -> bool:
    start = d.alpha * s + d.r
    if n_max < start:
        raise ValueError(f"n_max must be >= alpha*s + r = {start}")
    terms = ray_sequence(s, d, n_max + 1)
    for n in range(start, n_max + 1):
        lhs, rhs = ray_recurrence_sides(s, d, n, terms)
        if lhs != rhs:
            return False
    return True


def verify_alternating_lemma(a: int, b: int, alpha: int) -> bool:
    """sum_i (-1)^i C(alpha,i) C(a-i, b) == C(a-alpha, b-alpha)."""
    if not 0 <= alpha <= a:
        raise ValueError("need 0 <= alpha <= a")
    lhs = sum((-1) ** i * int_binomial(alpha, i) * int_binomial(a - i, b) for i in range(alpha + 1))
    return lhs == int_binomial(a - alpha, b - alpha)
