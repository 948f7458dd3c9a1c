"""Command-line surface: table, gf, charpoly, verify.

All data goes to stdout, diagnostics to stderr.  Exit codes: 0 on
success (for verify: all checks passed), 1 when verification fails,
2 on usage errors.  Output is byte-identical across identical
invocations; the only timing field lives in verify reports.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .hessenberg import char_poly
from .parse import ParseError, parse_poly
from .poly import Poly
from .series import convolved_series
from .verify import convolved_table, report_to_dict, run_suite

FORMATS = ("text", "csv", "json", "latex")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _verify_n_max(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"must be >= 2, got {value}")
    return value


def _r_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not values or any(r < 1 for r in values):
        raise argparse.ArgumentTypeError("every r must be >= 1")
    return values


def _subst_poly(text: str) -> Poly:
    try:
        return parse_poly(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(f"bad polynomial {text!r}: {exc}")


def _latex_escape(text: str) -> str:
    return text.replace("_", r"\_")


def _csv_line(fields: list[str]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="").writerow(fields)
    return buf.getvalue()


def cmd_table(args: argparse.Namespace) -> int:
    rows = convolved_table(args.r, args.n_max)
    if args.subst is not None:
        rows = [[p.compose(args.subst) for p in row] for row in rows]
    if args.at is not None:
        rows = [[Poly([p(args.at)]) for p in row] for row in rows]
    lines: list[str] = []
    if args.format == "text":
        lines.append("n\t" + "\t".join(f"r={r}" for r in args.r))
        for n, row in enumerate(rows):
            lines.append(f"{n}\t" + "\t".join(str(p) for p in row))
    elif args.format == "csv":
        lines.append("n,r,poly")
        for n, row in enumerate(rows):
            for r, p in zip(args.r, row):
                lines.append(_csv_line([str(n), str(r), str(p)]))
    elif args.format == "json":
        payload = {
            "r_list": args.r,
            "n_max": args.n_max,
            "rows": [[p.to_json() for p in row] for row in rows],
        }
        lines.append(json.dumps(payload, indent=2))
    else:  # latex
        for n, row in enumerate(rows):
            lines.append(f"{n} & " + " & ".join(f"${p}$" for p in row) + r" \\")
    print("\n".join(lines))
    return 0


def cmd_gf(args: argparse.Namespace) -> int:
    coeffs = convolved_series(args.r, args.terms)
    lines: list[str] = []
    if args.format == "text":
        lines.extend(str(p) for p in coeffs)
    elif args.format == "csv":
        lines.append("j,r,poly")
        for j, p in enumerate(coeffs):
            lines.append(_csv_line([str(j), str(args.r), str(p)]))
    elif args.format == "json":
        payload = {
            "r": args.r,
            "terms": args.terms,
            "coefficients": [p.to_json() for p in coeffs],
        }
        lines.append(json.dumps(payload, indent=2))
    else:
        for j, p in enumerate(coeffs):
            lines.append(f"{j} & ${p}$" + r" \\")
    print("\n".join(lines))
    return 0


def cmd_charpoly(args: argparse.Namespace) -> int:
    n = args.n
    cp = char_poly(n)
    annotations = []
    for l in range(n, -1, -1):
        sign = -1 if (n - l) % 2 else 1
        annotations.append((l, sign, l + 1, n - l + 1))
    lines: list[str] = []
    if args.format == "text":
        lines.append(str(cp))
        for l, sign, r, idx in annotations:
            mark = "+" if sign > 0 else "-"
            lines.append(f"t^{l}: {cp.coefficient(l)} = {mark}conv(r={r}, n={idx})")
    elif args.format == "csv":
        lines.append("power,sign,r,index,poly")
        for l, sign, r, idx in annotations:
            lines.append(_csv_line([str(l), str(sign), str(r), str(idx), str(cp.coefficient(l))]))
    elif args.format == "json":
        payload = {
            "n": n,
            "coeffs_t": cp.to_json(),
            "annotations": [
                {"power": l, "sign": sign, "r": r, "index": idx}
                for l, sign, r, idx in annotations
            ],
        }
        lines.append(json.dumps(payload, indent=2))
    else:
        lines.append(f"$p_{{{n}}}(t) = {cp}$" + r" \\")
        for l, sign, r, idx in annotations:
            mark = "+" if sign > 0 else "-"
            lines.append(f"{l} & ${cp.coefficient(l)}$ & ${mark}$ & {r} & {idx}" + r" \\")
    print("\n".join(lines))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.r_max, args.n_max, args.seed)
    lines: list[str] = []
    if args.format == "json":
        lines.append(json.dumps(report_to_dict(report), indent=2))
    elif args.format == "csv":
        lines.append("check_id,passed,elapsed_ms")
        for r in report.results:
            lines.append(_csv_line([r.check_id, str(r.passed).lower(), str(r.elapsed_ms)]))
    elif args.format == "latex":
        for r in report.results:
            status = "pass" if r.passed else "FAIL"
            lines.append(f"{_latex_escape(r.check_id)} & {status}" + r" \\")
    else:
        width = max(len(r.check_id) for r in report.results)
        for r in report.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status}  {r.check_id:<{width}}  {r.elapsed_ms} ms")
            if r.counterexample is not None:
                lines.append(f"      counterexample: {r.counterexample}")
        summary = "all checks passed" if report.all_passed else "FAILURES PRESENT"
        lines.append(
            f"{summary} (r_max={report.bounds['r_max']}, "
            f"n_max={report.bounds['n_max']}, seed={report.bounds['seed']})"
        )
    print("\n".join(lines))
    return 0 if report.all_passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hfib",
        description="Exact generalized Fibonacci/Lucas polynomial toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="grid of convolved polynomials")
    table.add_argument("--r", type=_r_list, default=[1, 2, 3], help="comma-separated orders")
    table.add_argument("--n-max", type=_nonneg_int, default=8)
    table.add_argument("--format", choices=FORMATS, default="text")
    table.add_argument("--subst", type=_subst_poly, default=None, metavar="EXPR",
                       help="substitute h with this polynomial (h or x as symbol)")
    table.add_argument("--at", type=int, default=None, metavar="INT",
                       help="evaluate entries at this integer after substitution")
    table.set_defaults(func=cmd_table)

    gf = sub.add_parser("gf", help="generating-function expansion")
    gf.add_argument("--r", type=_positive_int, default=1)
    gf.add_argument("--terms", type=_positive_int, default=10)
    gf.add_argument("--format", choices=FORMATS, default="text")
    gf.set_defaults(func=cmd_gf)

    charpoly = sub.add_parser("charpoly", help="characteristic polynomial with coefficient annotations")
    charpoly.add_argument("--n", type=_positive_int, required=True)
    charpoly.add_argument("--format", choices=FORMATS, default="text")
    charpoly.set_defaults(func=cmd_charpoly)

    verify = sub.add_parser("verify", help="run the identity suite")
    verify.add_argument("--r-max", type=_positive_int, default=5)
    verify.add_argument("--n-max", type=_verify_n_max, default=30)
    verify.add_argument("--seed", type=_nonneg_int, default=0)
    verify.add_argument("--format", choices=FORMATS, default="text")
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
