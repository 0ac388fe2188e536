"""Coefficient-by-coefficient checks of closed-form generating functions."""
from __future__ import annotations

from dataclasses import dataclass, field

from .exact_core import Series, int_binomial, poly_pow
from .q_analogue import q_quasi, q_quasi_gf
from .quasi_triangle import quasi_by_recurrence
from .rays import Direction, ray_sum_direct

DEFAULT_ORDER = 24


@dataclass
class GfCheckReport:
    name: str
    order: int
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "passed": self.passed,
            "mismatches": [
                {"index": i, "expected": _render(e), "got": _render(g)} for i, e, g in self.mismatches
            ],
        }


def _render(v):
    return v.text() if hasattr(v, "text") else str(v)


def _poly(coeffs, order: int) -> Series:
    return Series.truncate(coeffs, order)


def _one_minus_x(order: int) -> Series:
    return _poly([1, -1], order)


def _compare(name: str, series: Series, expected, order: int) -> GfCheckReport:
    report = GfCheckReport(name, order)
    for n in range(order):
        want = expected(n)
        if series[n] != want:
            report.mismatches.append((n, want, series[n]))
    return report


def binomial_gf(k: int, order: int) -> Series:
    """x^k / (1 - x)^(k+1)."""
    return _poly([0] * k + [1], order) * _one_minus_x(order) ** -(k + 1)


def check_binomial_gf(k: int, order: int = DEFAULT_ORDER) -> GfCheckReport:
    if order < k + 1:
        raise ValueError("order must be >= k + 1")
    return _compare(f"binomial_gf(k={k})", binomial_gf(k, order), lambda n: int_binomial(n, k), order)


def quasi_gf(s: int, k: int, order: int) -> Series:
    """(1 + x + ... + x^(s-1))^k x^k / (1 - x)^(k+1)."""
    num = [0] * k + poly_pow([1] * s, k)
    return _poly(num, order) * _one_minus_x(order) ** -(k + 1)


def check_quasi_gf(s: int, k: int, order: int = DEFAULT_ORDER) -> GfCheckReport:
    if order < k + 1:
        raise ValueError("order must be >= k + 1")
    return _compare(
        f"quasi_gf(s={s},k={k})", quasi_gf(s, k, order), lambda n: quasi_by_recurrence(s, n, k), order
    )


def ray_gf_parts(s: int, d: Direction, order: int) -> tuple[Series, Series]:
    """Numerator (1-x)^(alpha-beta-1) (x+...+x^s)^beta and denominator
    (1-x)^alpha - x^(r+alpha) (1+...+x^(s-1))^alpha, as truncated series."""
    e = d.alpha - d.beta - 1
    one_minus = _one_minus_x(order)
    # beta < alpha makes e >= 0; a negative e would move to the denominator
    num = one_minus ** e if e >= 0 else one_minus.inverse() ** (-e)
    num = num * _poly(poly_pow([0] + [1] * s, d.beta), order)
    tail = [0] * (d.r + d.alpha) + poly_pow([1] * s, d.alpha)
    den = one_minus ** d.alpha - _poly(tail, order)
    return num, den


def ray_gf(s: int, d: Direction, order: int) -> Series:
    num, den = ray_gf_parts(s, d, order)
    return num / den


def check_ray_gf(s: int, d: Direction, order: int = DEFAULT_ORDER) -> GfCheckReport:
    """Series sum_n T_{n+1} x^n against direct ray sums."""
    if order < 1:
        raise ValueError("order must be >= 1")
    name = f"ray_gf(s={s},alpha={d.alpha},beta={d.beta},r={d.r})"
    return _compare(name, ray_gf(s, d, order), lambda n: ray_sum_direct(s, d, n + 1), order)


def check_q_quasi_gf(s: int, k: int, order: int) -> GfCheckReport:
    return _compare(f"q_quasi_gf(s={s},k={k})", q_quasi_gf(s, k, order), lambda n: q_quasi(s, n, k), order)
