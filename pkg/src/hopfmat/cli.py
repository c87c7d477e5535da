"""Command-line driver: a thin client over the operation layer.

Subcommands: tables, svd, verify, scan, locus.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import api

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfmat",
        description="Structure matrices and SVD of Grassmann/Clifford products",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_metric_opts(p):
        p.add_argument("--dim", type=int, default=None)
        p.add_argument("--metric", help="JSON metric file")
        p.add_argument("--preset", choices=["grassmann"])
        p.add_argument("--rho", help="rho for the 2-dim metric")
        p.add_argument("--nu", help="nu for the 2-dim metric")

    p_tables = sub.add_parser("tables", help="emit a multiplication table")
    add_metric_opts(p_tables)
    p_tables.add_argument("--format", choices=["json", "csv"], default="json")
    p_tables.add_argument("--out", help="output file (default stdout)")

    p_svd = sub.add_parser("svd", help="singular values, u/v vectors, kernel")
    add_metric_opts(p_svd)
    p_svd.add_argument("--out", help="output file (default stdout)")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "--suite",
        required=True,
        choices=["grassmann", "clifford", "dim2", "svd", "all"],
    )
    p_verify.add_argument("--dim", type=int, default=3)
    p_verify.add_argument("--report", help="write the JSON report here")

    p_scan = sub.add_parser("scan", help="eigenvalue surfaces over a grid")
    p_scan.add_argument("--rho", required=True, help="range A:B")
    p_scan.add_argument("--nu", required=True, help="range C:D")
    p_scan.add_argument("--steps", type=int, required=True)
    p_scan.add_argument("--out", required=True, help="CSV output file")

    p_locus = sub.add_parser("locus", help="singular locus points rho(nu)")
    p_locus.add_argument("--nu", required=True, help="comma-separated values")
    p_locus.add_argument("--out", help="output file (default stdout)")
    return parser


def _parse_range(text: str):
    try:
        lo, hi = text.split(":")
        return float(lo), float(hi)
    except ValueError as exc:
        raise SystemExit(f"bad range {text!r}, expected A:B") from exc


def _emit(text: str, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _metric_kwargs(args) -> dict:
    metric = api.load_metric_file(args.metric) if args.metric else None
    return {
        "dim": args.dim,
        "preset": args.preset,
        "metric": metric,
        "rho": args.rho,
        "nu": args.nu,
    }


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "tables":
            result = api.tables_result(**_metric_kwargs(args))
            if args.format == "json":
                _emit(json.dumps(result, indent=2) + "\n", args.out)
            else:
                rows = result["product_matrix"]["entries"]
                lines = [",".join(str(x) for x in row) for row in rows]
                _emit("\n".join(lines) + "\n", args.out)
            return 0
        if args.command == "svd":
            result = api.svd_result(**_metric_kwargs(args))
            _emit(json.dumps(result, indent=2) + "\n", args.out)
            return 0
        if args.command == "verify":
            report = api.verify_result(args.suite, dim=args.dim)
            text = json.dumps(report, indent=2) + "\n"
            if args.report:
                with open(args.report, "w") as fh:
                    fh.write(text)
            sys.stdout.write(text)
            return 0 if report["pass"] else 1
        if args.command == "scan":
            rho = _parse_range(args.rho)
            nu = _parse_range(args.nu)
            with open(args.out, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(api.SCAN_CSV_HEADER)
                writer.writerows(api.scan_csv_rows(rho, nu, args.steps))
            return 0
        if args.command == "locus":
            nus = [float(x) for x in args.nu.split(",") if x]
            _emit(json.dumps(api.locus_result(nus), indent=2) + "\n", args.out)
            return 0
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
