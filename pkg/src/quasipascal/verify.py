"""Identity suites run by ``quasipascal verify``.

Each suite evaluates every identity on a fixed grid and records the first
counterexample.  The ``tables`` suite never fails: disagreements between a
printed table and the recurrence are reported as errata.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import bisnomial as bis
from . import q_analogue as qa
from . import quasi_triangle as qt
from .exact_core import int_binomial
from .rays import (
    Direction,
    ray_recurrence_sides,
    ray_sequence,
    sbonacci,
    sbonacci_by_recurrence,
    verify_alternating_lemma,
)
from .series_suite import check_binomial_gf, check_q_quasi_gf, check_quasi_gf, check_ray_gf
from .tables import PRINTED_TABLES, all_errata

SUITES = ("bisnomial", "quasi", "rays", "q", "gf", "tables")
RAY_THRESHOLDS = ("published", "corrected")
RAY_CHECK_SPAN = 15  # values of n checked past the threshold

FIBONACCI_10 = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
TRIBONACCI_10 = [0, 1, 1, 2, 4, 7, 13, 24, 44, 81]


@dataclass
class SuiteResult:
    suite: str
    checks: int = 0
    failures: int = 0
    counterexample: dict | None = None
    errata: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, ok: bool, **context) -> bool:
        self.checks += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = {key: _plain(v) for key, v in context.items()}
        return ok

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
            "counterexample": self.counterexample,
            "errata": [e.to_dict() for e in self.errata],
            "notes": list(self.notes),
        }


def _plain(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if hasattr(v, "text"):
        return v.text()
    return str(v)


def ray_grid(s_values=(2, 3)):
    for s in s_values:
        for alpha in (1, 2, 3):
            for beta in range(alpha):
                for r in range(-alpha + 1, 4):
                    yield s, Direction(alpha, beta, r)


def corrected_ray_threshold(s: int, d: Direction) -> int:
    """Smallest n from which the transversal recurrence is guaranteed.

    The generating-function numerator has degree alpha - beta - 1 + s*beta,
    so the recurrence holds for n >= alpha + (s-1)*beta + 1; alpha*s + r is
    enough only when it is at least that large.
    """
    return max(d.alpha * s + d.r, d.alpha + (s - 1) * d.beta + 1)


def suite_bisnomial() -> SuiteResult:
    res = SuiteResult("bisnomial")
    for s in (1, 2, 3, 4):
        for n in range(13):
            for k in range(s * n + 1):
                vals = {name: f(s, n, k) for name, f in bis.METHODS.items()}
                res.check(len(set(vals.values())) == 1, s=s, n=n, k=k, values=vals)
                res.check(vals["expansion"] == bis.bisnomial_by_expansion(s, n, s * n - k),
                          identity="symmetry", s=s, n=n, k=k)
            row_sum = sum(bis.bisnomial_by_expansion(s, n, k) for k in range(s * n + 1))
            res.check(row_sum == (s + 1) ** n, identity="row sum", s=s, n=n, got=row_sum)
    for n in range(21):
        for k in range(n + 1):
            res.check(bis.bisnomial_by_expansion(1, n, k) == int_binomial(n, k), identity="s=1", n=n, k=k)
    for s in (2, 3):
        for n in range(11):
            for k in range(s * n + 1):
                res.check(bis.verify_root_of_unity_bisnomial(s, n, k, 1e-6), identity="root of unity",
                          s=s, n=n, k=k, value=bis.root_of_unity_bisnomial(s, n, k))
    return res


def suite_quasi() -> SuiteResult:
    res = SuiteResult("quasi")
    for s in (1, 2, 3, 4):
        for n in range(13):
            for k in range(n + 1):
                vals = {name: f(s, n, k) for name, f in qt.METHODS.items()}
                res.check(len(set(vals.values())) == 1, s=s, n=n, k=k, values=vals)
        res.check(qt.verify_delannoy_correspondence(s, 12), identity="delannoy", s=s, max_n=12)
    for n in range(21):
        for k in range(n + 1):
            res.check(qt.quasi(1, n, k) == int_binomial(n, k), identity="s=1", n=n, k=k)
    for n in range(16):
        for k in range(n + 1):
            res.check(qt.quasi(2, n, k) == qt.quasi(2, n, n - k), identity="s=2 symmetry", n=n, k=k)
    res.check(qt.quasi(3, 4, 1) == 9 and qt.quasi(3, 4, 3) == 7, identity="s=3 asymmetry")
    for s in (2, 3):
        for n in range(11):
            for k in range(n + 1):
                res.check(qt.verify_root_of_unity_dual(s, n, k, 1e-6), identity="root of unity dual",
                          s=s, n=n, k=k, value=qt.root_of_unity_dual(s, n, k))
    for s in (2, 3, 4):
        for n in range(13):
            for k in range(n + 1):
                res.check(qt.verify_nested_rational(s, n, k), identity="rational nested", s=s, n=n, k=k,
                          value=qt.nested_rational(s, n, k))
    return res


def suite_rays(threshold: str = "published") -> SuiteResult:
    if threshold not in RAY_THRESHOLDS:
        raise ValueError(f"threshold must be one of {RAY_THRESHOLDS}")
    res = SuiteResult("rays")
    res.check(sbonacci(1, 10) == FIBONACCI_10, identity="fibonacci")
    res.check(sbonacci(2, 10) == TRIBONACCI_10, identity="tribonacci")
    for s in (1, 2, 3, 4):
        res.check(sbonacci(s, 30) == sbonacci_by_recurrence(s, 30), identity="s-bonacci recurrence", s=s)
    for s, d in ray_grid():
        start = d.alpha * s + d.r
        if threshold == "corrected":
            start = corrected_ray_threshold(s, d)
        terms = ray_sequence(s, d, start + RAY_CHECK_SPAN)
        for n in range(start, start + RAY_CHECK_SPAN):
            lhs, rhs = ray_recurrence_sides(s, d, n, terms)
            res.check(lhs == rhs, identity="transversal recurrence", s=s, alpha=d.alpha, beta=d.beta,
                      r=d.r, n=n, lhs=lhs, rhs=rhs)
    if threshold == "corrected":
        res.notes.append("transversal recurrence checked from max(alpha*s+r, alpha+(s-1)*beta+1)")
    for a in range(13):
        for b in range(13):
            for alpha in range(a + 1):
                res.check(verify_alternating_lemma(a, b, alpha), identity="alternating lemma",
                          a=a, b=b, alpha=alpha)
    return res


def suite_q() -> SuiteResult:
    res = SuiteResult("q")
    negative = []
    for s in (1, 2, 3):
        for n in range(11):
            for k in range(n + 1):
                a = qa.q_quasi(s, n, k, "recurrence_a")
                b = qa.q_quasi(s, n, k, "recurrence_b")
                e = qa.q_quasi_by_explicit(s, n, k)
                res.check(a == b == e, s=s, n=n, k=k, recurrence_a=a, recurrence_b=b, explicit=e)
                res.check(a.eval_at_one() == qt.quasi(s, n, k), identity="q=1", s=s, n=n, k=k)
                if any(c < 0 for c in a.coeffs):
                    negative.append((s, n, k))
    res.notes.append(f"q-quasi values with a negative coefficient: {len(negative)}")
    res.check(qa.verify_q_binomial_recurrences(15), identity="q-binomial recurrences", n_max=15)
    for s in (1, 2, 3):
        for n in range(9):
            for k in range(s * n + 1):
                v = qa.q_bisnomial(s, n, k)
                res.check(v.eval_at_one() == bis.bisnomial_by_expansion(s, n, k), identity="q-bisnomial q=1",
                          s=s, n=n, k=k)
                if n:
                    first, second = qa.q_bisnomial_recurrence_sides(s, n, k)
                    res.check(first == v and second == v, identity="q-bisnomial recurrences", s=s, n=n, k=k)
    for s in (1, 2, 3):
        res.check(qa.verify_q_sbonacci(s, 12), identity="q-s-bonacci recurrences", s=s, count=12)
        terms = qa.q_sbonacci(s, 12)
        res.check([qa.xq_eval(t, 1, 1) for t in terms] == sbonacci(s, 12), identity="q-s-bonacci at 1", s=s)
    return res


def suite_gf() -> SuiteResult:
    res = SuiteResult("gf")
    reports = []
    reports += [check_binomial_gf(k, 24) for k in range(13)]
    reports += [check_quasi_gf(s, k, 24) for s in (1, 2, 3, 4) for k in range(13)]
    reports += [check_ray_gf(s, d, 24) for s, d in ray_grid()]
    reports += [check_q_quasi_gf(s, k, 12) for s in (1, 2, 3) for k in range(7)]
    for rep in reports:
        first = rep.to_dict()["mismatches"][:1]
        res.check(rep.passed, check=rep.name, order=rep.order, first_mismatch=first)
    return res


def suite_tables() -> SuiteResult:
    res = SuiteResult("tables")
    res.checks = sum(len(row) for rows, _ in PRINTED_TABLES.values() for row in rows)
    res.errata = all_errata()
    for e in res.errata:
        res.notes.append(f"erratum in {e.table}: row {e.row}, column {e.column}: "
                         f"printed {e.printed}, recomputed {e.recomputed}")
    return res


def run_suite(name: str, ray_threshold: str = "published") -> list[SuiteResult]:
    if name == "all":
        return [r for suite in SUITES for r in run_suite(suite, ray_threshold)]
    if name == "rays":
        return [suite_rays(ray_threshold)]
    runners = {
        "bisnomial": suite_bisnomial,
        "quasi": suite_quasi,
        "q": suite_q,
        "gf": suite_gf,
        "tables": suite_tables,
    }
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}")
    return [runners[name]()]
