"""Published triangles, copied verbatim (typos included), and a comparator.

The goldens are kept exactly as printed so that a disagreement with the
recurrence shows up as a reported erratum instead of being patched away.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .bisnomial import bisnomial_by_expansion
from .quasi_triangle import quasi_by_recurrence

# quasi triangle, s = 2 (Tribonacci triangle)
TRIBONACCI_PRINTED = [
    [1],
    [1, 1],
    [1, 3, 1],
    [1, 5, 5, 1],
    [1, 7, 13, 7, 1],
    [1, 9, 25, 25, 9, 1],
    [1, 11, 41, 63, 41, 11, 1],
    [1, 13, 61, 129, 129, 61, 13, 1],
    [1, 15, 85, 231, 321, 231, 85, 15, 1],
    [1, 17, 113, 377, 681, 681, 377, 113, 17, 1],
]

# quasi triangle, s = 3 (quadrabonacci triangle)
QUADRABONACCI_PRINTED = [
    [1],
    [1, 1],
    [1, 3, 1],
    [1, 6, 5, 1],
    [1, 9, 15, 7, 1],
    [1, 12, 33, 28, 9, 1],
    [1, 15, 60, 81, 45, 11, 1],
    [1, 18, 96, 189, 66, 33, 13, 1],
    [1, 21, 141, 378, 459, 281, 91, 15, 1],
    [1, 24, 195, 675, 1107, 946, 449, 120, 17, 1],
]

# s-Pascal triangle, s = 3 (biquadranomial); row 5 is printed only up to k = 13
BIQUADRANOMIAL_PRINTED = [
    [1],
    [1, 1, 1, 1],
    [1, 2, 3, 4, 3, 2, 1],
    [1, 3, 6, 10, 12, 12, 10, 6, 3, 1],
    [1, 4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1],
    [1, 5, 15, 35, 65, 101, 135, 155, 155, 135, 101, 65, 35, 15],
]

PRINTED_TABLES = {
    "tribonacci": (TRIBONACCI_PRINTED, lambda n, k: quasi_by_recurrence(2, n, k)),
    "quadrabonacci": (QUADRABONACCI_PRINTED, lambda n, k: quasi_by_recurrence(3, n, k)),
    "biquadranomial": (BIQUADRANOMIAL_PRINTED, lambda n, k: bisnomial_by_expansion(3, n, k)),
}


@dataclass(frozen=True)
class Erratum:
    table: str
    row: int
    column: int
    printed: int
    recomputed: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["printed"] = str(self.printed)
        d["recomputed"] = str(self.recomputed)
        return d


def compare_printed(name: str) -> list[Erratum]:
    """Every printed entry of table ``name`` that disagrees with its recurrence."""
    rows, compute = PRINTED_TABLES[name]
    out = []
    for n, row in enumerate(rows):
        for k, printed in enumerate(row):
            value = compute(n, k)
            if value != printed:
                out.append(Erratum(name, n, k, printed, value))
    return out


def all_errata() -> list[Erratum]:
    return [e for name in PRINTED_TABLES for e in compare_printed(name)]
