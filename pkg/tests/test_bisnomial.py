import pytest

from oracles import tuples_summing
from quasipascal.bisnomial import (
    METHODS,
    bisnomial_by_demoivre,
    bisnomial_by_diagonal,
    bisnomial_by_expansion,
    bisnomial_by_longitudinal,
    bisnomial_by_nested_sum,
    root_of_unity_bisnomial,
    verify_root_of_unity_bisnomial,
)
from quasipascal.exact_core import int_binomial
from quasipascal.tables import BIQUADRANOMIAL_PRINTED


def test_oracle_matches_tuple_count():
    for s in (1, 2, 3):
        for n in range(6):
            for k in range(-1, s * n + 2):
                assert bisnomial_by_expansion(s, n, k) == tuples_summing(n, s, k)


@pytest.mark.parametrize("fn,s,n,k,expected", [
    (bisnomial_by_expansion, 3, 2, 3, 4),
    (bisnomial_by_expansion, 3, 5, 4, 65),
    (bisnomial_by_expansion, 1, 6, 2, 15),
    (bisnomial_by_nested_sum, 2, 3, 2, tuples_summing(3, 2, 2)),
    (bisnomial_by_nested_sum, 3, 4, 6, 44),
    (bisnomial_by_nested_sum, 2, 1, 0, 1),
    (bisnomial_by_longitudinal, 3, 3, 4, 12),
    (bisnomial_by_longitudinal, 2, 0, 0, 1),
    (bisnomial_by_longitudinal, 4, 3, 6, tuples_summing(3, 4, 6)),
    (bisnomial_by_diagonal, 2, 2, 2, tuples_summing(2, 2, 2)),
    (bisnomial_by_diagonal, 3, 5, 0, 1),
    (bisnomial_by_diagonal, 3, 4, 4, 31),
    (bisnomial_by_demoivre, 3, 2, 4, 3),
    (bisnomial_by_demoivre, 2, 5, 10, 1),
    (bisnomial_by_demoivre, 3, 5, 7, 155),
])
def test_examples(fn, s, n, k, expected):
    assert fn(s, n, k) == expected


def test_frozen_derived_values():
    # values produced by the tuple-count oracle
    assert tuples_summing(3, 2, 2) == 6
    assert tuples_summing(3, 4, 6) == 19
    assert tuples_summing(2, 2, 2) == 3


def test_printed_biquadranomial_rows():
    for n, row in enumerate(BIQUADRANOMIAL_PRINTED):
        assert [bisnomial_by_expansion(3, n, k) for k in range(len(row))] == row


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_all_routes_agree(s):
    for n in range(13):
        for k in range(-2, s * n + 3):
            values = {name: f(s, n, k) for name, f in METHODS.items()}
            assert len(set(values.values())) == 1, (s, n, k, values)


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_symmetry_and_row_sum(s):
    for n in range(13):
        row = [bisnomial_by_expansion(s, n, k) for k in range(s * n + 1)]
        assert row == row[::-1]
        assert sum(row) == (s + 1) ** n


def test_s1_is_binomial():
    for n in range(21):
        for k in range(n + 1):
            assert bisnomial_by_expansion(1, n, k) == int_binomial(n, k)


def test_s0_degenerate():
    for fn in METHODS.values():
        assert fn(0, 4, 0) == 1
        assert fn(0, 4, 1) == 0


@pytest.mark.parametrize("s,n,k", [(2, 3, 2), (1, 4, 2), (3, 3, 5)])
def test_root_of_unity_examples(s, n, k):
    assert verify_root_of_unity_bisnomial(s, n, k, 1e-6)


def test_root_of_unity_value():
    z = root_of_unity_bisnomial(3, 3, 5)
    assert abs(z - 12) < 1e-9


def test_root_of_unity_precondition():
    with pytest.raises(ValueError):
        root_of_unity_bisnomial(5, 10, 3)
    with pytest.raises(ValueError):
        root_of_unity_bisnomial(0, 3, 0)


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        bisnomial_by_expansion(2, -1, 0)
