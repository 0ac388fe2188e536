"""Exact arithmetic shared by every other module.

Integers are plain Python ``int`` (arbitrary precision), rationals are
``fractions.Fraction``.  This module adds the two containers Python does not
ship: dense polynomials in ``q`` with integer coefficients (:class:`QPoly`)
and truncated power series in ``x`` (:class:`Series`).
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable, Sequence


def int_binomial(n: int, k: int) -> int:
    """n choose k for 0 <= k <= n, and 0 for every other integer pair."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(k: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts) or sum(parts) != k:
        return 0
    out = math.factorial(k)
    for p in parts:
        out //= math.factorial(p)
    return out


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Product of two integer coefficient lists (lowest degree first)."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def poly_pow(a: Sequence[int], e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        out = poly_mul(out, a)
    return out


def root_of_unity(m: int, j: int) -> complex:
    """exp(2*pi*i*j/m), with j reduced mod m first to keep the angle small."""
    return cmath.exp(2j * math.pi * (j % m) / m)


class QPoly:
    """Dense polynomial in q with integer coefficients; ``coeffs[i]`` multiplies q**i.

    Instances are immutable and canonical: trailing zeros are stripped, so the
    zero polynomial has ``coeffs == ()``.  Plain ints coerce to constants in
    every arithmetic operation.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "_coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QPoly":
        if power < 0:
            raise ValueError(f"negative power q^{power}")
        return cls([0] * power + [coeff])

    @classmethod
    def bracket(cls, n: int) -> "QPoly":
        """[n]_q = 1 + q + ... + q^(n-1)."""
        return cls([1] * max(n, 0))

    @staticmethod
    def coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly((other,))
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        other = QPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(("QPoly", self._coeffs))

    def __repr__(self) -> str:
        return f"QPoly({list(self._coeffs)})"

    def __str__(self) -> str:
        return self.text()

    def __add__(self, other):
        other = QPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self._coeffs)

    def __sub__(self, other):
        other = QPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = QPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = QPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QPoly(poly_mul(self._coeffs, other._coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPoly":
        if e < 0:
            raise ValueError("negative exponent")
        return QPoly(poly_pow(self._coeffs, e))

    def shift(self, m: int) -> "QPoly":
        """Multiply by q**m.  Negative m is allowed only when it divides out exactly."""
        if not self._coeffs:
            return self
        if m >= 0:
            return QPoly([0] * m + list(self._coeffs))
        if any(self._coeffs[: -m]):
            raise ArithmeticError(f"{self.text()} is not divisible by q^{-m}")
        return QPoly(self._coeffs[-m:])

    def divmod(self, divisor: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Long division over Z; the divisor's leading coefficient must divide every step."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self._coeffs)
        d = divisor._coeffs
        lead = d[-1]
        quot = [0] * max(len(rem) - len(d) + 1, 0)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(d) - 1]
            if c == 0:
                continue
            if c % lead:
                raise ArithmeticError("leading coefficient does not divide over Z")
            c //= lead
            quot[i] = c
            for j, dj in enumerate(d):
                rem[i + j] -= c * dj
        return QPoly(quot), QPoly(rem)

    def exact_div(self, divisor: "QPoly") -> "QPoly":
        quot, rem = self.divmod(divisor)
        if rem:
            raise ArithmeticError(f"inexact division, remainder {rem.text()}")
        return quot

    def __call__(self, value):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def eval_at_one(self) -> int:
        return sum(self._coeffs)

    def text(self) -> str:
        """Ascending powers, e.g. ``2+q``, ``q+q^2+q^3``, ``1-3q^2``."""
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mono = "q" if i == 1 else f"q^{i}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out


QPoly.zero = QPoly()
QPoly.one = QPoly((1,))
QPoly.q = QPoly((0, 1))


def qpoly_eval_at_one(p: QPoly) -> int:
    return p.eval_at_one()


def _unit_inverse(c):
    if isinstance(c, QPoly):
        if c.degree == 0 and c.coeffs[0] in (1, -1):
            return QPoly(c.coeffs)
        raise ValueError(f"constant term {c.text()} is not a unit of Z[q]")
    if isinstance(c, Fraction):
        if c == 0:
            raise ValueError("constant term 0 is not invertible")
        return 1 / c
    if isinstance(c, int):
        if c in (1, -1):
            return c
        raise ValueError(f"constant term {c} is not a unit of Z")
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class Series:
    """Truncated power series sum_{n < order} coeffs[n] x^n.

    Coefficients may be int, Fraction or QPoly.  Binary operations demand
    equal orders; there is no implicit re-truncation.
    """

    __slots__ = ("coeffs", "order", "zero")

    def __init__(self, coeffs: Iterable = (), order: int = 0, zero=0):
        c = list(coeffs)
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(c) > order:
            raise ValueError(f"{len(c)} coefficients do not fit in order {order}; use Series.truncate")
        self.coeffs = tuple(c + [zero] * (order - len(c)))
        self.order = order
        self.zero = zero

    @classmethod
    def truncate(cls, coeffs: Iterable, order: int, zero=0) -> "Series":
        """Build from a (possibly longer) coefficient list, dropping x^order and above."""
        return cls(list(coeffs)[:order], order, zero)

    @classmethod
    def one(cls, order: int, zero=0, one=1) -> "Series":
        return cls([one] if order else [], order, zero)

    def _check(self, other: "Series"):
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)!r}, order={self.order})"

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order, self.zero)

    def __neg__(self) -> "Series":
        return Series([-a for a in self.coeffs], self.order, self.zero)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            return Series([a * other for a in self.coeffs], self.order, self.zero)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(self.order):
            acc = self.zero
            for i in range(n + 1):
                if a[i] and b[n - i]:
                    acc = acc + a[i] * b[n - i]
            out.append(acc)
        return Series(out, self.order, self.zero)

    def __rmul__(self, scalar) -> "Series":
        return Series([scalar * a for a in self.coeffs], self.order, self.zero)

    def __pow__(self, e: int) -> "Series":
        if e < 0:
            return self.inverse() ** (-e)
        out = Series.one(self.order, self.zero, self.zero + 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, m: int) -> "Series":
        """Multiply by x**m (m >= 0), dropping what falls past the order."""
        if m < 0:
            raise ValueError("negative shift")
        return Series.truncate([self.zero] * m + list(self.coeffs), self.order, self.zero)

    def inverse(self) -> "Series":
        if self.order == 0:
            return self
        a = self.coeffs
        inv0 = _unit_inverse(a[0])
        b = [inv0]
        for n in range(1, self.order):
            acc = self.zero
            for i in range(1, n + 1):
                if a[i] and b[n - i]:
                    acc = acc + a[i] * b[n - i]
            b.append(-(inv0 * acc))
        return Series(b, self.order, self.zero)

    def __truediv__(self, other: "Series") -> "Series":
        self._check(other)
        return self * other.inverse()


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_geometric_inverse(a: Series) -> Series:
    return a.inverse()
