"""Where does the transversal recurrence start to hold?

For every direction on a grid, find the first n from which the recurrence
holds for a long stretch and compare it with alpha*s + r and with the
threshold read off the generating function.

    python scripts/ray_threshold_scan.py --s 2 3 4 --span 30
"""
import argparse

from quasipascal.rays import Direction, ray_recurrence_sides, ray_sequence
from quasipascal.verify import corrected_ray_threshold


def first_valid(s, d, span):
    """Smallest n0 such that the recurrence holds for n0 <= n < n0 + span."""
    limit = d.alpha * s + d.r + span + 10
    terms = ray_sequence(s, d, limit + span)
    ok = [lhs == rhs for lhs, rhs in (ray_recurrence_sides(s, d, n, terms) for n in range(limit + span))]
    for n0 in range(limit):
        if all(ok[n0:n0 + span]):
            return n0
    return None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--s", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--max-alpha", type=int, default=3)
    ap.add_argument("--span", type=int, default=20)
    args = ap.parse_args()

    print("s alpha beta r | alpha*s+r  corrected  observed")
    bad = 0
    for s in args.s:
        for alpha in range(1, args.max_alpha + 1):
            for beta in range(alpha):
                for r in range(-alpha + 1, 4):
                    d = Direction(alpha, beta, r)
                    published = alpha * s + r
                    corrected = corrected_ray_threshold(s, d)
                    observed = first_valid(s, d, args.span)
                    flag = "  <-- published threshold too early" if observed > published else ""
                    bad += bool(flag)
                    print(f"{s} {alpha:5d} {beta:4d} {r:2d} | {published:9d}  {corrected:9d}  {observed:8d}{flag}")
    print(f"\n{bad} directions need a later start than alpha*s + r")


if __name__ == "__main__":
    main()
