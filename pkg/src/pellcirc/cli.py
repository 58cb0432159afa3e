"""pellcirc command-line front end.

Subcommands: det, inv, verify, bench.  Output is machine-readable: JSON
records (compact, fixed field order, one per line), CSV with the fixed
column set seq,n,method,det,elapsed_ns, or plain values.  Big integers
are always rendered as decimal strings, rationals as num/den in lowest
terms with the sign on the numerator.

Exit status: 0 on success or verification pass, 1 on verification
failure, 2 on usage errors (including the n-cap, which defaults to 10000
and can be raised with --n-cap or the PELLCIRC_N_CAP environment
variable).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import statistics
import sys
import time
from fractions import Fraction

from .circulant import circ_det_via_eigen, circ_expand, first_row_of
from .closed_forms import (
    det_pell_closed,
    det_pell_lucas_closed,
    inv_pell_closed,
    inv_pell_lucas_closed,
    sequence_circulant,
)
from .linalg import oracle_det, oracle_inverse
from .sequences import SequenceKind
from .verify import VerifyReport, run_verify

DEFAULT_N_CAP = 10000
DEFAULT_ORACLE_CUTOFF = 256
CSV_COLUMNS = ["seq", "n", "method", "det", "elapsed_ns"]


class UsageError(Exception):
    """Bad arguments detected after parsing; exits with status 2."""


def _seq_kind(name: str) -> SequenceKind:
    return SequenceKind.PELL if name == "pell" else SequenceKind.PELL_LUCAS


def _n_cap(args: argparse.Namespace) -> int:
    if args.n_cap is not None:
        return args.n_cap
    env = os.environ.get("PELLCIRC_N_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"PELLCIRC_N_CAP must be an integer, got {env!r}") from exc
    return DEFAULT_N_CAP


def _check_order(n: int, minimum: int, cap: int, what: str = "--n") -> None:
    if n < minimum:
        raise UsageError(f"{what} must be >= {minimum}, got {n}")
    if n > cap:
        raise UsageError(f"{what}={n} exceeds the cap of {cap}; raise --n-cap or PELLCIRC_N_CAP")


def frac_str(x: Fraction) -> str:
    """num/den in lowest terms, sign on the numerator, zero as 0/1."""
    return f"{x.numerator}/{x.denominator}"


def int_det_str(x: Fraction | int) -> str:
    if isinstance(x, Fraction):
        if x.denominator != 1:
            return frac_str(x)
        x = x.numerator
    return str(x)


def eigen_det_str(x: complex) -> str:
    """Real part as fixed-point decimal text, never scientific notation."""
    s = f"{x.real:.6f}".rstrip("0").rstrip(".")
    return s if s not in ("", "-", "-0") else "0"


def render_json(record: dict) -> str:
    """Canonical one-line JSON: insertion order, no whitespace."""
    return json.dumps(record, separators=(",", ":"))


def _csv_line(row: dict) -> str:
    buf = io.StringIO()
    csv.DictWriter(buf, CSV_COLUMNS, lineterminator="").writerow(row)
    return buf.getvalue()


def _csv_header() -> str:
    return ",".join(CSV_COLUMNS)


# --- det ---------------------------------------------------------------------

def _compute_det(kind: SequenceKind, n: int, method: str) -> str:
    if method == "closed":
        if kind is SequenceKind.PELL:
            return str(det_pell_closed(n))
        return str(det_pell_lucas_closed(n))
    c = sequence_circulant(kind, n)
    if method == "oracle":
        return int_det_str(oracle_det(circ_expand(c)))
    return eigen_det_str(circ_det_via_eigen(c))


def cmd_det(args: argparse.Namespace) -> int:
    cap = _n_cap(args)
    minimum = 3 if args.method == "closed" else 1
    _check_order(args.n, minimum, cap)
    det = _compute_det(_seq_kind(args.seq), args.n, args.method)
    record = {"seq": args.seq, "n": args.n, "method": args.method, "det": det}
    if args.format == "json":
        print(render_json(record))
    elif args.format == "csv":
        print(_csv_header())
        print(_csv_line({**record, "elapsed_ns": ""}))
    else:
        print(det)
    return 0


# --- inv ---------------------------------------------------------------------

def _compute_inverse_row(kind: SequenceKind, n: int, method: str) -> list[Fraction]:
    if method == "closed":
        if kind is SequenceKind.PELL:
            return list(inv_pell_closed(n).first_row)
        return list(inv_pell_lucas_closed(n).first_row)
    dense = oracle_inverse(circ_expand(sequence_circulant(kind, n)))
    return list(first_row_of(dense).first_row)


def cmd_inv(args: argparse.Namespace) -> int:
    cap = _n_cap(args)
    _check_order(args.n, 3, cap)
    row = _compute_inverse_row(_seq_kind(args.seq), args.n, args.method)
    strings = [frac_str(x) for x in row]
    if args.format == "json":
        record = {
            "seq": args.seq,
            "n": args.n,
            "method": args.method,
            "inverse_first_row": strings,
        }
        print(render_json(record))
    else:
        print(" ".join(strings))
    return 0


# --- verify ------------------------------------------------------------------

def report_to_dict(report: VerifyReport) -> dict:
    return {
        "checks": [
            {"name": c.name, "n_range": c.n_range, "status": c.status, "detail": c.detail}
            for c in report.checks
        ],
        "overall": report.overall,
    }


def cmd_verify(args: argparse.Namespace) -> int:
    cap = _n_cap(args)
    _check_order(args.n_max, 3, cap, what="--n-max")
    report = run_verify(args.n_max)
    if args.format == "json":
        print(render_json(report_to_dict(report)))
    else:
        for c in report.checks:
            print(f"{c.status.upper():4s} {c.name} [{c.n_range}] {c.detail}")
        print(f"overall: {report.overall}")
    return 0 if report.ok else 1


# --- bench -------------------------------------------------------------------

def _parse_n_list(text: str) -> list[int]:
    items = [part.strip() for part in text.split(",") if part.strip()]
    try:
        return [int(part) for part in items]
    except ValueError as exc:
        raise UsageError(f"--n expects a comma-separated list of integers, got {text!r}") from exc


def _timed_det(kind: SequenceKind, n: int, method: str, reps: int) -> tuple[str, int]:
    times = []
    det = ""
    for _ in range(reps):
        start = time.perf_counter_ns()
        det = _compute_det(kind, n, method)
        times.append(time.perf_counter_ns() - start)
    return det, int(statistics.median(times))


def cmd_bench(args: argparse.Namespace) -> int:
    cap = _n_cap(args)
    n_list = _parse_n_list(args.n)
    if args.reps < 1:
        raise UsageError(f"--reps must be >= 1, got {args.reps}")
    for n in n_list:
        _check_order(n, 3, cap)
    if not n_list:
        return 0

    rows: list[dict] = []
    mismatch: str | None = None
    for n in n_list:
        for seq in ("pell", "pell-lucas"):
            kind = _seq_kind(seq)
            det_closed, ns_closed = _timed_det(kind, n, "closed", args.reps)
            rows.append(
                {"seq": seq, "n": n, "method": "closed", "det": det_closed, "elapsed_ns": ns_closed}
            )
            if n <= args.oracle_cutoff:
                det_oracle, ns_oracle = _timed_det(kind, n, "oracle", args.reps)
                rows.append(
                    {"seq": seq, "n": n, "method": "oracle", "det": det_oracle, "elapsed_ns": ns_oracle}
                )
                if det_oracle != det_closed and mismatch is None:
                    mismatch = f"closed/oracle determinant mismatch for {seq} n={n}"
            else:
                rows.append({"seq": seq, "n": n, "method": "oracle", "det": "", "elapsed_ns": "skipped"})

    if args.format == "csv":
        print(_csv_header())
        for row in rows:
            print(_csv_line(row))
    else:
        for row in rows:
            record = {"seq": row["seq"], "n": row["n"], "method": row["method"]}
            if row["elapsed_ns"] == "skipped":
                record["skipped"] = True
            else:
                record["det"] = row["det"]
                record["elapsed_ns"] = row["elapsed_ns"]
            print(render_json(record))

    if mismatch:
        print(mismatch, file=sys.stderr)
        return 1
    return 0


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pellcirc",
        description="Exact determinants and inverses of Pell / Pell-Lucas circulant matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--n-cap",
            type=int,
            default=None,
            help=f"maximum accepted n (default {DEFAULT_N_CAP}, or PELLCIRC_N_CAP)",
        )

    p_det = sub.add_parser("det", help="determinant of the order-n circulant")
    p_det.add_argument("--seq", required=True, choices=["pell", "pell-lucas"])
    p_det.add_argument("--n", required=True, type=int)
    p_det.add_argument("--method", default="closed", choices=["closed", "oracle", "eigen"])
    p_det.add_argument("--format", default="json", choices=["json", "csv", "plain"])
    add_cap(p_det)
    p_det.set_defaults(func=cmd_det)

    p_inv = sub.add_parser("inv", help="first row of the inverse circulant")
    p_inv.add_argument("--seq", required=True, choices=["pell", "pell-lucas"])
    p_inv.add_argument("--n", required=True, type=int)
    p_inv.add_argument("--method", default="closed", choices=["closed", "oracle"])
    p_inv.add_argument("--format", default="json", choices=["json", "plain"])
    add_cap(p_inv)
    p_inv.set_defaults(func=cmd_inv)

    p_verify = sub.add_parser("verify", help="run every invariant check")
    p_verify.add_argument("--n-max", default=12, type=int)
    p_verify.add_argument("--format", default="plain", choices=["json", "plain"])
    add_cap(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time closed form against the elimination oracle")
    p_bench.add_argument("--n", required=True, help="comma-separated list of orders")
    p_bench.add_argument("--reps", default=3, type=int)
    p_bench.add_argument(
        "--oracle-cutoff",
        default=DEFAULT_ORACLE_CUTOFF,
        type=int,
        help="skip the oracle above this order",
    )
    p_bench.add_argument("--format", default="csv", choices=["csv", "json"])
    add_cap(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"pellcirc: error: {exc}", file=sys.stderr)
        return 2
    except OverflowError:
        print(
            "pellcirc: error: values at this order exceed double precision;"
            " the eigen method needs a smaller n",
            file=sys.stderr,
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
