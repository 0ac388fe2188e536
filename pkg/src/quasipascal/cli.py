"""Command-line front end.

    quasipascal triangle --s 2 --rows 10 --format csv
    quasipascal coef --s 2 --n 8 --k 4 --method demoivre
    quasipascal sequence --s 2 --kind ray --alpha 2 --beta 0 --r 1 --count 6
    quasipascal qtriangle --s 2 --rows 4
    quasipascal delannoy --s 2 --n 4 --k 4
    quasipascal verify --suite all --out report.json

Exit codes: 0 success, 1 an identity failed, 2 usage error.  JSON output
renders every integer as a decimal string.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .exact_core import QPoly
from .q_analogue import q_triangle_rows
from .quasi_triangle import LATTICE_MAX_N, METHODS, DelannoyParams, delannoy_table, triangle_rows
from .rays import Direction, ray_sequence, sbonacci
from .verify import RAY_THRESHOLDS, SUITES, run_suite

FORMATS = ("plain", "csv", "json")


def _qpoly_doc(p: QPoly) -> dict:
    return {"coeffs": [str(c) for c in p.coeffs], "text": p.text()}


def document(kind: str, params: dict, payload: dict) -> str:
    doc = {"kind": kind, "params": {k: str(v) for k, v in params.items() if v is not None}, "payload": payload}
    return json.dumps(doc, indent=2) + "\n"


def render_plain(rows: list[list[str]]) -> str:
    width = max((len(row) for row in rows), default=0)
    cols = [max((len(row[i]) for row in rows if i < len(row)), default=0) for i in range(width)]
    lines = [" ".join(cell.ljust(cols[i]) for i, cell in enumerate(row)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def render_csv(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _table_out(rows: list[list[str]], fmt: str, kind: str, params: dict, payload: dict) -> str:
    if fmt == "json":
        return document(kind, params, payload)
    if fmt == "csv":
        return render_csv(rows)
    return render_plain(rows)


def cmd_triangle(args) -> tuple[str, int]:
    rows = triangle_rows(args.s, args.rows)
    cells = [[str(v) for v in row] for row in rows]
    params = {"s": args.s, "rows": args.rows}
    return _table_out(cells, args.format, "triangle", params, {"rows": cells}), 0


def cmd_coef(args, parser) -> tuple[str, int]:
    if args.method == "lattice" and args.n > LATTICE_MAX_N:
        parser.error(f"the lattice method enumerates paths one by one and is limited to n <= {LATTICE_MAX_N}; "
                     f"use --method recurrence for n = {args.n}")
    value = METHODS[args.method](args.s, args.n, args.k)
    params = {"s": args.s, "n": args.n, "k": args.k, "method": args.method}
    if args.format == "json":
        return document("coefficient", params, {"value": str(value)}), 0
    return f"{value}\n", 0


def cmd_sequence(args, parser) -> tuple[str, int]:
    params = {"s": args.s, "kind": args.kind, "count": args.count}
    if args.kind == "ray":
        if None in (args.alpha, args.beta, args.r):
            parser.error("--kind ray needs --alpha, --beta and --r")
        try:
            d = Direction(args.alpha, args.beta, args.r)
        except ValueError as exc:
            parser.error(str(exc))
        terms = ray_sequence(args.s, d, args.count)
        params.update(alpha=args.alpha, beta=args.beta, r=args.r)
    else:
        if any(v is not None for v in (args.alpha, args.beta, args.r)):
            parser.error("--alpha/--beta/--r only apply to --kind ray")
        terms = sbonacci(args.s, args.count)
    cells = [str(t) for t in terms]
    if args.format == "json":
        return document("sequence", params, {"terms": cells}), 0
    return ",".join(cells) + "\n", 0


def cmd_qtriangle(args) -> tuple[str, int]:
    rows = q_triangle_rows(args.s, args.rows)
    cells = [[p.text() for p in row] for row in rows]
    payload = {"rows": [[_qpoly_doc(p) for p in row] for row in rows]}
    return _table_out(cells, args.format, "qtriangle", {"s": args.s, "rows": args.rows}, payload), 0


def cmd_delannoy(args, parser) -> tuple[str, int]:
    weights = tuple(int(w) for w in args.weights.split(",")) if args.weights else ()
    try:
        p = DelannoyParams(args.s, args.a, weights)
    except ValueError as exc:
        parser.error(str(exc))
    table = delannoy_table(p, args.n, args.k)
    cells = [[str(v) for v in row] for row in table]
    params = {"s": args.s, "n": args.n, "k": args.k, "a": args.a, "weights": ",".join(map(str, p.weights))}
    return _table_out(cells, args.format, "delannoy", params, {"rows": cells}), 0


def cmd_verify(args) -> tuple[str, int]:
    results = run_suite(args.suite, args.ray_threshold)
    ok = all(r.passed for r in results)
    params = {"suite": args.suite, "ray_threshold": args.ray_threshold}
    payload = {"passed": ok, "results": [r.to_dict() for r in results]}
    report = document("report", params, payload)
    if args.out:
        # --out always receives the JSON report; the summary still goes to stdout
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report)
        args.out = None
    if args.format == "json":
        return report, 0 if ok else 1
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.suite}: {r.checks} checks, {r.failures} failures")
        if r.counterexample is not None:
            lines.append(f"  first counterexample: {json.dumps(r.counterexample)}")
        lines.extend(f"  {note}" for note in r.notes)
    return "\n".join(lines) + "\n", 0 if ok else 1


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quasipascal", description="Quasi s-Pascal triangle toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="plain"):
        p.add_argument("--format", choices=FORMATS, default=fmt_default)
        p.add_argument("--out", help="write output to this path instead of stdout")
        return p

    p = common(sub.add_parser("triangle", help="rows of the quasi s-Pascal triangle"))
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--rows", type=_positive, required=True)

    p = common(sub.add_parser("coef", help="one coefficient by a chosen method"))
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--n", type=_non_negative, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=tuple(METHODS), default="recurrence")

    p = common(sub.add_parser("sequence", help="s-bonacci or ray-sum sequence"))
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--kind", choices=("sbonacci", "ray"), default="sbonacci")
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--count", type=_positive, required=True)

    p = common(sub.add_parser("qtriangle", help="rows of the q-quasi triangle"))
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--rows", type=_positive, required=True)

    p = common(sub.add_parser("delannoy", help="generalized Delannoy array D_s(0..n, 0..k)"))
    p.add_argument("--s", type=_positive, required=True, help="number of weights m")
    p.add_argument("--n", type=_non_negative, required=True)
    p.add_argument("--k", type=_non_negative, required=True)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--weights", help="comma-separated a_1..a_m (default all 1)")

    p = common(sub.add_parser("verify", help="run identity suites"))
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--ray-threshold", choices=RAY_THRESHOLDS, default="published",
                   help="start of the transversal-recurrence check: alpha*s+r as published, "
                        "or the threshold implied by the generating function")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "triangle": lambda: cmd_triangle(args),
        "coef": lambda: cmd_coef(args, parser),
        "sequence": lambda: cmd_sequence(args, parser),
        "qtriangle": lambda: cmd_qtriangle(args),
        "delannoy": lambda: cmd_delannoy(args, parser),
        "verify": lambda: cmd_verify(args),
    }
    text, code = handlers[args.command]()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
