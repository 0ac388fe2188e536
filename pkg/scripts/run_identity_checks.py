"""Run every identity suite and write a JSON report.

    python scripts/run_identity_checks.py --out report.json
    python scripts/run_identity_checks.py --ray-threshold corrected
"""
import argparse
import json
import time

from quasipascal.verify import RAY_THRESHOLDS, SUITES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ray-threshold", choices=RAY_THRESHOLDS, default="published")
    ap.add_argument("--out")
    args = ap.parse_args()

    results = []
    for name in SUITES:
        t0 = time.perf_counter()
        (res,) = run_suite(name, args.ray_threshold)
        dt = time.perf_counter() - t0
        print(f"{'PASS' if res.passed else 'FAIL'} {name:10s} {res.checks:6d} checks {res.failures:3d} failures  {dt:.2f}s")
        if res.counterexample:
            print(f"    first counterexample {res.counterexample}")
        for note in res.notes:
            print(f"    {note}")
        results.append(res.to_dict())

    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"ray_threshold": args.ray_threshold, "results": results}, fh, indent=2)


if __name__ == "__main__":
    main()
