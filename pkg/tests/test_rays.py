import pytest

from quasipascal.quasi_triangle import quasi_by_recurrence
from quasipascal.rays import (
    DIAGONAL,
    Direction,
    ray_recurrence_sides,
    ray_sequence,
    ray_sum_direct,
    sbonacci,
    sbonacci_by_recurrence,
    verify_alternating_lemma,
    verify_ray_recurrence,
)
from quasipascal.verify import corrected_ray_threshold, ray_grid


def diagonal_sum_by_hand(s, n):
    """T_{n+1} = sum_k C_[s](n-k, k), read straight off the triangle."""
    return sum(quasi_by_recurrence(s, n - k, k) for k in range(n + 1))


def test_sbonacci_examples():
    assert sbonacci(1, 8) == [0, 1, 1, 2, 3, 5, 8, 13]
    assert sbonacci(2, 8) == [0, 1, 1, 2, 4, 7, 13, 24]
    assert sbonacci(3, 8) == [0, 1, 1, 2, 4, 8, 15, 29]
    for s in (2, 3):
        assert sbonacci(s, 8)[1:] == [diagonal_sum_by_hand(s, n) for n in range(7)]


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_sbonacci_recurrence(s):
    assert sbonacci(s, 30) == sbonacci_by_recurrence(s, 30)


def test_tribonacci_rule():
    t = sbonacci(2, 25)
    for n in range(2, 24):
        assert t[n + 1] == t[n] + t[n - 1] + t[n - 2]


def test_ray_sum_examples():
    d = Direction(2, 0, 1)
    # T_5 = C_[2](4,0) + C_[2](3,2) = 1 + 5
    assert ray_sum_direct(2, d, 5) == 6
    assert ray_sum_direct(2, DIAGONAL, 3) == 2
    assert ray_sum_direct(3, Direction(3, 2, -2), 0) == 0
    assert ray_sequence(2, d, 6) == [0, 1, 1, 1, 2, 6]


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_diagonal_direction_is_sbonacci(s):
    assert ray_sequence(s, DIAGONAL, 26) == sbonacci(s, 26)


def test_direction_validation():
    with pytest.raises(ValueError, match="beta"):
        Direction(2, 2, 0)
    with pytest.raises(ValueError, match="r \\+ alpha"):
        Direction(2, 0, -2)
    with pytest.raises(ValueError, match="alpha"):
        Direction(0, 0, 1)


@pytest.mark.parametrize("s,d,n_max", [(2, Direction(2, 0, 1), 20), (3, Direction(1, 0, 1), 20),
                                       (2, Direction(3, 1, 2), 25)])
def test_ray_recurrence_examples(s, d, n_max):
    assert verify_ray_recurrence(s, d, n_max)


def test_ray_recurrence_precondition():
    with pytest.raises(ValueError):
        verify_ray_recurrence(2, Direction(2, 0, 1), 3)


def test_example_recurrence_for_direction_2_0_1():
    # T_n = 2T_{n-1} - T_{n-2} + sum_j C_{s-1}(2, j) T_{n-j-3}
    s = 3
    t = ray_sequence(s, Direction(2, 0, 1), 30)
    for n in range(2 * s + 1, 30):
        rhs = 2 * t[n - 1] - t[n - 2] + (t[n - 3] + 2 * t[n - 4] + 3 * t[n - 5] + 2 * t[n - 6] + t[n - 7])
        assert t[n] == rhs


# Pinned counterexamples: with negative r the recurrence can fail at n = alpha*s + r.
# Each row is (s, alpha, beta, r, n, lhs, rhs), computed from direct ray sums.
PUBLISHED_THRESHOLD_FAILURES = [
    (2, 2, 1, -1, 3, 2, 1),
]


@pytest.mark.parametrize("s,alpha,beta,r,n,lhs,rhs", PUBLISHED_THRESHOLD_FAILURES)
def test_published_threshold_counterexample(s, alpha, beta, r, n, lhs, rhs):
    d = Direction(alpha, beta, r)
    assert n == alpha * s + r
    terms = ray_sequence(s, d, n + 1)
    assert terms == [0, 0, 1, 4]
    assert ray_recurrence_sides(s, d, n, terms) == (lhs, rhs)
    assert not verify_ray_recurrence(s, d, n + 15)


def test_grid_cells_breaking_published_threshold():
    broken = sorted((s, d.alpha, d.beta, d.r) for s, d in ray_grid()
                    if not verify_ray_recurrence(s, d, d.alpha * s + d.r + 15))
    assert broken == [(2, 2, 1, -1), (2, 3, 1, -2), (2, 3, 2, -2), (2, 3, 2, -1), (3, 3, 2, -2)]


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_recurrence_from_corrected_threshold(s):
    for alpha in (1, 2, 3):
        for beta in range(alpha):
            for r in range(-alpha + 1, 4):
                d = Direction(alpha, beta, r)
                start = corrected_ray_threshold(s, d)
                terms = ray_sequence(s, d, start + 16)
                for n in range(start, start + 16):
                    lhs, rhs = ray_recurrence_sides(s, d, n, terms)
                    assert lhs == rhs, (s, d, n)


def test_alternating_lemma_examples():
    assert verify_alternating_lemma(5, 3, 2)
    assert verify_alternating_lemma(4, 2, 0)
    assert verify_alternating_lemma(6, 2, 3)


def test_alternating_lemma_exhaustive():
    for a in range(13):
        for b in range(13):
            for alpha in range(a + 1):
                assert verify_alternating_lemma(a, b, alpha)


def test_alternating_lemma_precondition():
    with pytest.raises(ValueError):
        verify_alternating_lemma(2, 1, 3)
