"""Command-line interface.

Subcommands: schubert | char | matrix | verify | scan-b.  Output is
deterministic byte-for-byte for a fixed (flags, seed) combination.  Exit
codes: 0 all checks pass, 1 a verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .perm import partition_str, partitions_of, perm_str
from .polyring import QPoly
from .rep import bc_scan, generator_matrix, graded_character, weight_character
from .schubert import build_schubert_table, schubert_table_strings
from .verify import SUITES, character_comparison, run_suites

DEFAULT_SEED = 20201
MAX_N_TABLES = 8
MAX_N_VERIFY = 6

COST_NOTE = """\
cost guide (single core): schubert/char/matrix are practical up to n=6
(n=5 in seconds, n=6 in minutes); n=7..8 only for `schubert` and with
patience (the table has n! entries).  verify/scan-b accept n <= 6; the
full verify suite takes about a second at n=4 and half a minute at n=5."""


@dataclass
class RunConfig:
    """Validated run parameters shared by all subcommands."""

    n: int
    q: Fraction | None  # None means symbolic
    degree_bound: int
    output: str
    seed: int
    jobs: int

    def __post_init__(self):
        if self.degree_bound < 0:
            raise SystemExit2("degree bound must be nonnegative")
        if self.jobs < 1:
            raise SystemExit2("jobs must be at least 1")


class SystemExit2(SystemExit):
    def __init__(self, message: str):
        print(f"error: {message}", file=sys.stderr)
        super().__init__(2)


def _parse_q(text: str) -> Fraction | None:
    if text == "symbolic":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SystemExit2(f"--q must be 'symbolic' or a rational like 1 or -2/3, got {text!r}")


def _build_config(args) -> RunConfig:
    return RunConfig(
        n=args.n,
        q=_parse_q(args.q),
        degree_bound=args.degree_bound,
        output=args.output,
        seed=args.seed,
        jobs=args.jobs,
    )


def _require_n(config: RunConfig, low: int, high: int, what: str):
    if config.n < low:
        raise SystemExit2(f"{what} needs n >= {low}")
    if config.n > high:
        estimate = math.factorial(config.n)
        raise SystemExit2(
            f"{what} is capped at n <= {high}; n={config.n} would mean "
            f"{estimate} basis permutations"
        )


def _render_value(v: QPoly, q: Fraction | None) -> str:
    if q is None:
        return str(v)
    return str(v.evaluate(q))


# --- subcommands -------------------------------------------------------------


def cmd_schubert(config: RunConfig) -> int:
    _require_n(config, 1, MAX_N_TABLES, "schubert")
    table = schubert_table_strings(config.n)
    keys = sorted(table, key=lambda s: tuple(int(v) for v in s.split(",")))
    if config.output == "json":
        print(json.dumps({k: table[k] for k in keys}))
    elif config.output == "csv":
        out = _csv_writer()
        out.writerow(["w", "schubert"])
        for k in keys:
            out.writerow([k, table[k]])
        _flush_csv(out)
    else:
        width = max(len(k) for k in keys)
        for k in keys:
            print(f"{k:<{width}}  {table[k]}")
    return 0


def cmd_char(config: RunConfig, action: str) -> int:
    _require_n(config, 2, MAX_N_TABLES, "char")
    n = config.n
    mus = partitions_of(n)
    mu_names = [partition_str(mu) for mu in mus]
    top = n * (n - 1) // 2
    failed = False

    if action == "all":
        comparison = character_comparison(n, jobs=config.jobs)
        failed = not comparison.all_agree
        rows = []
        for row in comparison.rows:
            cells = {}
            for mu in mus:
                cell = row["cells"][mu]
                cells[partition_str(mu)] = {
                    "rho1": _render_value(cell["rho1"], config.q),
                    "rho2": _render_value(cell["rho2"], config.q),
                    "weights": _render_value(cell["weights"], config.q),
                    "agree": cell["agree"],
                }
            rows.append({"k": row["k"], "cells": cells})
        if config.output == "json":
            print(json.dumps({"n": n, "action": action, "mus": mu_names, "rows": rows,
                              "all_agree": comparison.all_agree}))
        else:
            cells_text = [
                [
                    f"{row['cells'][name]['rho1']} "
                    f"[{'AGREE' if row['cells'][name]['agree'] else 'MISMATCH'}]"
                    for name in mu_names
                ]
                for row in rows
            ]
            _print_table(config, mu_names, cells_text)
        return 1 if failed else 0

    values = []
    for k in range(top + 1):
        row = []
        for mu in mus:
            if action == "weights":
                v = weight_character(mu, k, n).value
            else:
                v = graded_character(action, mu, k, n).value
            row.append(_render_value(v, config.q))
        values.append(row)
    if config.output == "json":
        print(json.dumps({
            "n": n,
            "action": action,
            "mus": mu_names,
            "rows": [{"k": k, "values": row} for k, row in enumerate(values)],
        }))
    else:
        _print_table(config, mu_names, values)
    return 0


def _print_table(config: RunConfig, mu_names: list[str], rows: list[list[str]]):
    if config.output == "csv":
        out = _csv_writer()
        out.writerow(["k"] + mu_names)
        for k, row in enumerate(rows):
            out.writerow([k] + row)
        _flush_csv(out)
    else:
        widths = [
            max(len(name), max((len(row[j]) for row in rows), default=0))
            for j, name in enumerate(mu_names)
        ]
        print("k  " + "  ".join(f"{name:<{w}}" for name, w in zip(mu_names, widths)))
        for k, row in enumerate(rows):
            print(f"{k}  " + "  ".join(f"{cell:<{w}}" for cell, w in zip(row, widths)))


def cmd_matrix(config: RunConfig, action: str, i: int, k: int) -> int:
    _require_n(config, 2, MAX_N_TABLES, "matrix")
    table = build_schubert_table(config.n)
    if not 1 <= i < config.n:
        raise SystemExit2(f"generator index must satisfy 1 <= i < n, got {i}")
    if not 0 <= k <= table.max_degree:
        raise SystemExit2(f"degree must satisfy 0 <= k <= {table.max_degree}, got {k}")
    matrix = generator_matrix(action, i, k, table)
    basis = [perm_str(w) for w in matrix.basis]
    entries = [[_render_value(c, config.q) for c in row] for row in matrix.entries]
    if config.output == "json":
        print(json.dumps({"n": config.n, "action": action, "i": i, "k": k,
                          "basis": basis, "entries": entries}))
    elif config.output == "csv":
        out = _csv_writer()
        out.writerow(["z\\w"] + basis)
        for name, row in zip(basis, entries):
            out.writerow([name] + row)
        _flush_csv(out)
    else:
        width = max(len(c) for row in entries for c in row) if entries else 1
        print(f"action={action} i={i} k={k} basis={' '.join(basis)}")
        for row in entries:
            print("  ".join(f"{c:>{width}}" for c in row))
    return 0


def cmd_verify(config: RunConfig, suites: list[str]) -> int:
    _require_n(config, 2, MAX_N_VERIFY, "verify")
    results = run_suites(suites, config.n, config.degree_bound, config.seed, config.jobs)
    all_passed = all(r.passed for r in results)
    if config.output == "json":
        print(json.dumps({
            "n": config.n,
            "seed": config.seed,
            "suites": [
                {"name": r.name, "passed": r.passed, "detail": r.lines,
                 "failures": r.failures}
                for r in results
            ],
            "passed": all_passed,
        }))
    else:
        for r in results:
            print(r.render())
        print(f"overall: {'PASS' if all_passed else 'FAIL'}")
    return 0 if all_passed else 1


def cmd_scan_b(config: RunConfig) -> int:
    _require_n(config, 2, MAX_N_VERIFY, "scan-b")
    scan = bc_scan(config.n, config.jobs)
    hist = scan.b_histogram()
    outliers = scan.b_outliers()
    if config.output == "json":
        print(json.dumps({
            "n": config.n,
            "entries": [
                {"i": i, "w": perm_str(w), "z": perm_str(z), "b": b, "c": c}
                for i, w, z, b, c in scan.entries
            ],
            "b_values": {str(k): v for k, v in hist.items()},
            "conjecture_violations": [
                {"i": i, "w": perm_str(w), "z": perm_str(z), "b": b, "c": c}
                for i, w, z, b, c in outliers
            ],
            "structural_violations": scan.structural_violations,
        }))
    elif config.output == "csv":
        out = _csv_writer()
        out.writerow(["i", "w", "z", "b", "c"])
        for i, w, z, b, c in scan.entries:
            out.writerow([i, perm_str(w), perm_str(z), b, c])
        _flush_csv(out)
        print(f"# b-values observed: {hist}; conjecture violations: "
              f"{len(outliers) or 0}")
    else:
        for i, w, z, b, c in scan.entries:
            print(f"i={i} w={perm_str(w)} z={perm_str(z)} b={b:+d} c={c:+d}")
        print(f"b-values observed: {hist}")
        print(f"conjecture violations (b outside -1..1): {len(outliers)}")
        for row in outliers:
            print(f"  {row}")
        if scan.structural_violations:
            print("structural violations:")
            for v in scan.structural_violations:
                print(f"  {v}")
    return 1 if scan.structural_violations else 0


class _Csv:
    """CSV accumulator flushed to stdout in one write, for stable output."""

    def __init__(self):
        self.buffer = io.StringIO()
        self.writer = csv.writer(self.buffer, lineterminator="\n")

    def writerow(self, row):
        self.writer.writerow(row)

    def flush(self):
        sys.stdout.write(self.buffer.getvalue())


def _csv_writer() -> _Csv:
    return _Csv()


def _flush_csv(out: _Csv):
    out.flush()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qschub",
        description="Exact Hecke-algebra actions on the coinvariant algebra "
        "in the Schubert basis, over Z[q].",
        epilog=COST_NOTE,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, required=True, help="symmetric group size")
        p.add_argument("--q", default="symbolic",
                       help="'symbolic' (default) or an exact rational like 1 or -2/3")
        p.add_argument("--degree-bound", type=int, default=4,
                       help="monomial degree bound for operator identity checks")
        p.add_argument("--output", choices=("json", "csv", "text"), default="text")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                       help="seed for the randomized property checks")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker processes for matrix building")

    p = sub.add_parser("schubert", help="print all Schubert polynomials of S_n")
    common(p)

    p = sub.add_parser("char", help="graded character table")
    common(p)
    p.add_argument("--action", choices=("rho1", "rho2", "weights", "all"), default="all")

    p = sub.add_parser("matrix", help="one generator matrix in the Schubert basis")
    common(p)
    p.add_argument("--action", choices=("rho1", "rho2", "symq1"), required=True)
    p.add_argument("--i", type=int, required=True, help="generator index")
    p.add_argument("--k", type=int, required=True, help="degree of the component")

    p = sub.add_parser("verify", help="run verification suites")
    common(p)
    p.add_argument("--suite", action="append", default=None,
                   choices=tuple(SUITES) + ("all",),
                   help="suite name; repeatable; default all")

    p = sub.add_parser("scan-b", help="ledger of the (b, c) descent-column splits")
    common(p)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _build_config(args)
        if args.command == "schubert":
            return cmd_schubert(config)
        if args.command == "char":
            return cmd_char(config, args.action)
        if args.command == "matrix":
            return cmd_matrix(config, args.action, args.i, args.k)
        if args.command == "verify":
            return cmd_verify(config, args.suite or ["all"])
        if args.command == "scan-b":
            return cmd_scan_b(config)
        raise SystemExit2(f"unknown command {args.command!r}")
    except SystemExit:
        raise
    except ValueError as exc:
        raise SystemExit2(str(exc))


if __name__ == "__main__":
    sys.exit(main())
