"""Regenerate the printed triangles and diff them against the embedded copies.

    python scripts/reproduce_tables.py            # all three tables
    python scripts/reproduce_tables.py --rows 14  # print longer triangles
"""
import argparse

from quasipascal.bisnomial import bisnomial_row
from quasipascal.quasi_triangle import triangle_rows
from quasipascal.tables import PRINTED_TABLES, compare_printed


def show(title, rows):
    print(title)
    for row in rows:
        print("  " + " ".join(str(v) for v in row))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rows", type=int, default=10)
    args = ap.parse_args()

    show("quasi triangle, s=2", triangle_rows(2, args.rows))
    show("quasi triangle, s=3", triangle_rows(3, args.rows))
    show("s-Pascal triangle, s=3", [bisnomial_row(3, n) for n in range(min(args.rows, 6))])

    print()
    for name in PRINTED_TABLES:
        errata = compare_printed(name)
        print(f"{name}: {len(errata)} discrepancies")
        for e in errata:
            print(f"  row {e.row}, column {e.column}: printed {e.printed}, recomputed {e.recomputed}")


if __name__ == "__main__":
    main()
