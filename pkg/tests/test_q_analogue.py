import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import q_bisnomial_brute, q_subset_sum, q_weighted_paths
from quasipascal.bisnomial import bisnomial_by_expansion
from quasipascal.exact_core import QPoly, int_binomial
from quasipascal.q_analogue import (
    q_binomial,
    q_binomial_recurrence_sides,
    q_bisnomial,
    q_bisnomial_row,
    q_quasi,
    q_quasi_by_explicit,
    q_quasi_gf,
    q_sbonacci,
    q_triangle_rows,
    verify_q_binomial_recurrences,
    verify_q_sbonacci,
    xq_eval,
    xq_scale,
)
from quasipascal.quasi_triangle import quasi_by_recurrence
from quasipascal.rays import sbonacci

q = QPoly.q


def test_q_binomial_examples():
    assert q_binomial(2, 1) == 1 + q
    assert q_binomial(3, 2) == q + q ** 2 + q ** 3
    assert q_binomial(7, 0) == 1
    assert q_binomial(3, 4) == QPoly.zero
    assert q_binomial(3, -1) == QPoly.zero


def test_q_binomial_against_subset_sums():
    for n in range(9):
        for k in range(n + 1):
            assert q_binomial(n, k) == QPoly(q_subset_sum(n, k))


@pytest.mark.parametrize("n_max", [1, 10, 15])
def test_q_binomial_recurrences(n_max):
    assert verify_q_binomial_recurrences(n_max)


def test_q_binomial_recurrence_sides_example():
    a, b = q_binomial_recurrence_sides(4, 2)
    assert a == b == q_binomial(4, 2)


def test_q_bisnomial_examples():
    assert list(q_bisnomial_row(2, 1)) == [1, 1, 1]
    assert q_bisnomial(3, 2, 3).eval_at_one() == 4
    assert q_bisnomial(2, 2, 1) == 1 + q


def test_q_bisnomial_against_brute():
    for s in (1, 2, 3):
        for n in range(5):
            for k in range(s * n + 1):
                assert q_bisnomial(s, n, k) == QPoly(q_bisnomial_brute(s, n, k))


def test_q_bisnomial_at_one():
    for s in range(1, 5):
        for n in range(9):
            for k in range(s * n + 1):
                assert q_bisnomial(s, n, k).eval_at_one() == bisnomial_by_expansion(s, n, k)


def test_q_bisnomial_s1_is_q_binomial():
    for n in range(8):
        for k in range(n + 1):
            assert q_bisnomial(1, n, k) == q_binomial(n, k)


def test_q_quasi_examples():
    assert q_quasi(2, 2, 1) == 2 + q
    assert q_quasi(3, 5, 0) == 1
    assert q_quasi(2, 0, 0) == 1
    assert q_quasi(2, 2, 3) == QPoly.zero
    # s = 1 reduces to the q-binomial with the q^C(k,2) factor
    assert q_quasi(1, 3, 2) == q + q ** 2 + q ** 3 == q_binomial(3, 2)


def test_q_quasi_explicit_examples():
    assert q_quasi_by_explicit(2, 2, 1) == 2 + q
    assert q_quasi_by_explicit(3, 1, 1) == 1
    assert q_quasi_by_explicit(2, 4, 2).eval_at_one() == 13


def test_q_quasi_is_weighted_path_count():
    for s in (1, 2, 3):
        for n in range(8):
            for k in range(n + 1):
                assert q_quasi(s, n, k) == QPoly(q_weighted_paths(s, n, k)), (s, n, k)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_routes_agree(s):
    for n in range(11):
        for k in range(-1, n + 2):
            a = q_quasi(s, n, k, "recurrence_a")
            assert a == q_quasi(s, n, k, "recurrence_b")
            assert a == q_quasi_by_explicit(s, n, k)
            assert a.eval_at_one() == quasi_by_recurrence(s, n, k)


def test_unknown_route():
    with pytest.raises(ValueError):
        q_quasi(2, 3, 1, "recurrence_c")


def test_nonnegative_coefficients_observed():
    for s in (1, 2, 3):
        for row in q_triangle_rows(s, 11):
            assert all(c >= 0 for p in row for c in p.coeffs)


def test_q_triangle_rows():
    rows = q_triangle_rows(2, 3)
    assert rows[0] == [1]
    # the corner entry carries q^C(n,2), as in the q-binomial
    assert rows[2] == [1, 2 + q, q]
    assert [r[-1] for r in q_triangle_rows(3, 6)] == [q ** (n * (n - 1) // 2) for n in range(6)]


def test_q_gf_examples():
    assert list(q_quasi_gf(2, 0, 5)) == [1] * 5
    assert q_quasi_gf(2, 1, 4)[2] == 2 + q
    g = q_quasi_gf(1, 2, 6)
    assert [g[n] for n in range(6)] == [q_binomial(n, 2) for n in range(6)]


@pytest.mark.parametrize("s", [1, 2, 3])
def test_q_gf_matches_recurrence(s):
    for k in range(7):
        g = q_quasi_gf(s, k, 12)
        assert [g[n] for n in range(12)] == [q_quasi(s, n, k) for n in range(12)]


def test_q_sbonacci_initial_terms():
    t = q_sbonacci(2, 4)
    assert t[0] == () and t[1] == (QPoly.one,)
    # T_3 = [2 0] + [1 1] x = 1 + x
    assert t[3] == (QPoly.one, QPoly.one)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_q_sbonacci_at_one(s):
    terms = q_sbonacci(s, 14)
    assert [xq_eval(t, 1, 1) for t in terms] == sbonacci(s, 14)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_q_sbonacci_recurrences(s):
    assert verify_q_sbonacci(s, 12)


def test_x_degree_cap():
    q_sbonacci(2, 6, x_degree_cap=2)
    with pytest.raises(ValueError, match="cap"):
        q_sbonacci(2, 8, x_degree_cap=2)


def test_inexact_substitution_raises():
    with pytest.raises(ArithmeticError):
        xq_scale((QPoly.one, QPoly.one), 0, -1)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(0, 9), st.integers(0, 9), st.integers(-3, 3))
def test_specialization_at_integer_q(s, n, k, value):
    # evaluation is a ring map, so the recurrence survives any integer substitution
    lhs = q_quasi(s, n, k)(value)
    rhs = q_quasi(s, n - 1, k)(value) + sum(
        value ** (n - j) * q_quasi(s, n - j, k - 1)(value) for j in range(1, s + 1) if n - j >= 0)
    if n == 0 and k == 0:
        assert lhs == 1
    else:
        assert lhs == rhs


def test_concurrent_rows():
    out = []
    threads = [threading.Thread(target=lambda: out.append(q_quasi(3, 9, 4, "recurrence_b"))) for _ in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(out)) == 1
    assert out[0].eval_at_one() == quasi_by_recurrence(3, 9, 4)


def test_q_binomial_value_at_one():
    for n in range(10):
        for k in range(n + 1):
            assert q_binomial(n, k).eval_at_one() == int_binomial(n, k)
