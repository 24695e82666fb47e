"""Command line interface: compute, verify, classify and table.

Exit codes: 0 success, 1 identity violated, 2 usage error, 3 IO error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arithmetic import alpha, coefficient_stats, roots_numeric
from .checks import CHECKS, run_check
from .exact_arith import Poly, series_expand
from .families import bernoulli_poly, chebyshev_T, chebyshev_U, euler_poly, gegenbauer
from .periodicity import InsufficientData, MIN_WINDOW, classify_even_zagier, classify_odd_zagier, gf_odd_certificate
from .zagier import UndefinedIndex, modified_euler_poly, zagier_poly

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    kind: str  # value, polynomial, classification or report
    payload: object
    metadata: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "payload": self.payload, "metadata": self.metadata}


def format_rational(q: Fraction | int) -> str:
    return str(Fraction(q))


def format_poly(p: Poly) -> str:
    return "coeffs: [" + ", ".join(format_rational(c) for c in p.coeffs or (Fraction(0),)) + "]"


def _jsonable(v):
    if isinstance(v, (Fraction, int)) and not isinstance(v, bool):
        return format_rational(v) if isinstance(v, Fraction) else v
    if isinstance(v, Poly):
        return [format_rational(c) for c in v.coeffs]
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v if isinstance(v, (str, float, bool, type(None))) else str(v)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


# compute

FAMILIES = ("bernoulli", "euler", "chebyshev_t", "chebyshev_u", "gegenbauer", "zagier", "mod_euler")


def family_poly(family: str, n: int, lam: int | None = None) -> Poly:
    if n < 0:
        raise UsageError(f"index must be non-negative, got {n}")
    try:
        if family == "bernoulli":
            return bernoulli_poly(n)
        if family == "euler":
            return euler_poly(n)
        if family == "chebyshev_t":
            return chebyshev_T(n)
        if family == "chebyshev_u":
            return chebyshev_U(n)
        if family == "gegenbauer":
            if lam is None:
                raise UsageError("gegenbauer needs --lam")
            return gegenbauer(n, lam)
        if family == "zagier":
            return zagier_poly(n)
        if family == "mod_euler":
            return modified_euler_poly(n)
    except UndefinedIndex as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown family {family!r}")


def cmd_compute(args) -> int:
    p = family_poly(args.family, args.n, args.lam)
    meta = {"command": "compute", "parameters": {"family": args.family, "n": args.n}}
    if args.lam is not None:
        meta["parameters"]["lam"] = args.lam
    if args.at is not None:
        x = parse_rational(args.at)
        value = p(x)
        meta["parameters"]["x"] = format_rational(x)
        record, text = OutputRecord("value", format_rational(value), meta), format_rational(value)
    else:
        record, text = OutputRecord("polynomial", _jsonable(p), meta), format_poly(p)
    print(json.dumps([record.to_dict()]) if args.format == "json" else text)
    return EXIT_OK


# verify


def cmd_verify(args) -> int:
    ids = list(CHECKS) if args.theorem == "all" else [args.theorem]
    if args.theorem != "all" and args.theorem not in CHECKS:
        raise UsageError(f"unknown theorem id {args.theorem!r}; choose from {', '.join(CHECKS)}")
    if args.nmax is not None and args.nmax < 1:
        raise UsageError("--nmax must be positive")
    records, status = [], EXIT_OK
    for theorem_id in ids:
        check = CHECKS[theorem_id]
        n_max = check.default_n_max if args.nmax is None else args.nmax
        try:
            report = run_check(theorem_id, n_max)
        except InsufficientData as exc:
            raise UsageError(str(exc)) from None
        payload = {"id": theorem_id, "ok": report.ok, "checked": report.checked}
        if report.failures:
            payload["counterexample"] = _jsonable(list(report.failures[0]))
        if report.conjectural:
            payload["conjectural"] = report.conjectural
        records.append(OutputRecord("report", payload, {"command": "verify", "parameters": {"theorem": theorem_id}, "n_max_tested": n_max}))
        if not report.ok:
            status = EXIT_VIOLATED
        if args.format != "json":
            line = f"{'PASS' if report.ok else 'FAIL'} {theorem_id} (n_max={n_max}, {report.checked} checks): {check.summary}"
            if report.failures:
                label, *rest = report.failures[0]
                line += f"\n  first counterexample: {label}: " + ", ".join(str(_jsonable(v)) for v in rest)
            print(line)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in records]))
    return status


# classify


def cmd_classify(args) -> int:
    if args.nmax < MIN_WINDOW:
        raise UsageError(f"--nmax must be at least {MIN_WINDOW}")
    if args.even:
        if args.x2 % 2:
            raise UsageError("--even needs an integer u, so --x2 must be even")
        u = args.x2 // 2
        res = classify_even_zagier(u, args.nmax)
    else:
        res = classify_odd_zagier(Fraction(args.x2, 2), args.nmax)
    record = OutputRecord(
        "classification",
        res.to_dict(),
        {"command": "classify", "parameters": {"x2": args.x2, "even": args.even}, "n_max_tested": res.n_max_tested},
    )
    print(json.dumps(record.to_dict()) if args.format == "json" else res.to_json())
    return EXIT_OK


# table


def table_rows(which: str, n_max: int) -> tuple[list[str], list[list]]:
    if n_max < 1:
        raise UsageError("--nmax must be positive")
    if which == "alpha":
        rows = []
        for n in range(1, n_max + 1):
            a = alpha(n)
            rows.append([n, a, a // 4 if n % 2 == 0 else ""])
        return ["n", "alpha", "alpha_over_4"], rows
    if which == "coeff_stats":
        rows = []
        for n in range(1, n_max + 1):
            s = coefficient_stats(n)
            rows.append([n, s.integer_count, format_rational(s.positive_excess), s.logconcave_depth, s.shifted_positive])
        return ["n", "integer_count", "positive_excess", "logconcave_depth", "shifted_positive"], rows
    if which == "roots":
        rows = [[n, re, im, res] for n in range(1, n_max + 1) for re, im, res in roots_numeric(n)]
        return ["n", "re", "im", "residual"], rows
    if which == "gf_coeffs":
        coeffs = series_expand(gf_odd_certificate(), n_max + 1)
        return ["power", "coefficient"], [[k, format_rational(c)] for k, c in enumerate(coeffs)]
    raise UsageError(f"unknown table {which!r}")


def render_table(which: str, header: list[str], rows: list[list], fmt: str, n_max: int) -> str:
    if fmt == "json":
        meta = {"command": "table", "parameters": {"which": which}, "n_max_tested": n_max}
        records = [OutputRecord("value", dict(zip(header, map(_jsonable, row))), meta).to_dict() for row in rows]
        return json.dumps(records) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_table(args) -> int:
    header, rows = table_rows(args.which, args.nmax)
    text = render_table(args.which, header, rows, args.format or "csv", args.nmax)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zagier", description="Exact computations with Zagier and classical polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="print a polynomial or its value")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("--at", help="evaluate at this rational, e.g. 1/2")
    p.add_argument("--lam", type=int, help="Gegenbauer order (positive integer)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check a published identity to a finite depth")
    p.add_argument("theorem", help="one of: all, " + ", ".join(CHECKS))
    p.add_argument("--nmax", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="classify a special-value sequence, printed as JSON")
    p.add_argument("--x2", type=int, required=True, help="twice the argument x (or twice u with --even)")
    p.add_argument("--even", action="store_true", help="classify A*_{2n}(u) with u = x2/2")
    p.add_argument("--nmax", type=int, default=60)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="emit a data series as CSV or JSON")
    p.add_argument("which", choices=("alpha", "coeff_stats", "roots", "gf_coeffs"))
    p.add_argument("--nmax", type=int, default=30)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
