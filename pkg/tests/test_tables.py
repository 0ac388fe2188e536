from quasipascal.tables import (
    BIQUADRANOMIAL_PRINTED,
    PRINTED_TABLES,
    QUADRABONACCI_PRINTED,
    TRIBONACCI_PRINTED,
    Erratum,
    all_errata,
    compare_printed,
)


def test_table_shapes():
    assert [len(r) for r in TRIBONACCI_PRINTED] == list(range(1, 11))
    assert sum(len(r) for r in TRIBONACCI_PRINTED) == 55
    assert [len(r) for r in QUADRABONACCI_PRINTED] == list(range(1, 11))
    assert TRIBONACCI_PRINTED[8] == [1, 15, 85, 231, 321, 231, 85, 15, 1]
    assert set(PRINTED_TABLES) == {"tribonacci", "quadrabonacci", "biquadranomial"}


def test_tribonacci_and_biquadranomial_match():
    assert compare_printed("tribonacci") == []
    assert compare_printed("biquadranomial") == []
    assert len(BIQUADRANOMIAL_PRINTED) == 6


def test_quadrabonacci_row_7_errata():
    errata = compare_printed("quadrabonacci")
    assert errata == [
        Erratum("quadrabonacci", 7, 4, 66, 161),
        Erratum("quadrabonacci", 7, 5, 33, 66),
    ]
    assert all_errata() == errata


def test_erratum_dict():
    e = Erratum("quadrabonacci", 7, 4, 66, 161)
    assert e.to_dict() == {"table": "quadrabonacci", "row": 7, "column": 4, "printed": "66", "recomputed": "161"}
