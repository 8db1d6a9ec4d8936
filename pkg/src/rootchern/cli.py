"""Command-line front end; every value printed is exact.

Exit codes: 0 success, 2 invalid input, 3 verification-suite failure.
Table subcommands fan out across queries with a thread pool capped by the
ROOTGRR_THREADS environment variable (0 or unset picks a default); results
are collected in input order, so output is byte-deterministic.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Iterable, List, Sequence

from .grr import RootProblem, ch_term
from .gw import GWQuery, InadmissibleQueryError, gw_invariant
from .rspin import elsv_genus0, hurwitz_oracle, potential_coefficients, w_number_genus0
from .taut import format_fraction
from .verify import SUITES, run_suites


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _thread_count() -> int:
    raw = os.environ.get("ROOTGRR_THREADS", "0")
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    return cap if cap > 0 else min(8, os.cpu_count() or 1)


def _map_ordered(fn, items: Sequence):
    """Evaluate fn over items, possibly in parallel, preserving input order."""
    items = list(items)
    threads = _thread_count()
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _emit_csv(header: List[str], rows: Iterable[List[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    sys.stdout.write(buf.getvalue())


def _emit_value(value: Fraction, inputs: List[tuple], fmt: str, notes: str = "") -> None:
    if fmt == "json":
        payload = {k: v for k, v in inputs}
        payload["value"] = format_fraction(value)
        if notes:
            payload["notes"] = notes
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "csv":
        _emit_csv(
            [k for k, _ in inputs] + ["value", "notes"],
            [[_csv_cell(v) for _, v in inputs] + [format_fraction(value), notes]],
        )
    else:
        print(format_fraction(value))


def _csv_cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return str(v)


def _cmd_chern(args) -> int:
    problem = RootProblem(args.r, args.s, tuple(args.m))
    cls = ch_term(problem, args.degree)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "r": args.r,
                    "s": args.s,
                    "m": list(args.m),
                    "degree": args.degree,
                    "terms": cls.to_jsonable(),
                },
                sort_keys=True,
            )
        )
    elif args.format == "csv":
        # one row per tree term; the coefficient is the value column
        rows = []
        for term in cls.to_jsonable():
            desc = json.dumps(
                {k: term[k] for k in ("partition", "leg_psi", "edge_psi", "kappa")},
                sort_keys=True,
            )
            rows.append(
                [
                    _csv_cell([args.r]),
                    _csv_cell([args.s]),
                    _csv_cell(args.m),
                    str(args.degree),
                    term["coeff"],
                    desc,
                ]
            )
        _emit_csv(["r", "s", "m", "degree", "value", "notes"], rows)
    else:
        print(repr(cls))
    return 0


def _cmd_gw(args) -> int:
    query = GWQuery(args.r, tuple(args.counts))
    value = gw_invariant(query)
    _emit_value(value, [("r", args.r), ("counts", args.counts)], args.format)
    return 0


def _admissible_counts(r: int, max_n: int):
    def rec(j: int, remaining_slots: int, counts):
        if j == r:
            n = sum(counts)
            if n > 3 and sum(i * c for i, c in enumerate(counts)) % r == 0:
                yield tuple(counts)
            return
        for c in range(remaining_slots + 1):
            yield from rec(j + 1, remaining_slots - c, counts + [c])

    for counts in rec(1, max_n, [0]):
        yield counts


def _cmd_gw_table(args) -> int:
    queries = sorted(_admissible_counts(args.r, args.max_n), key=lambda c: (sum(c), c))
    values = _map_ordered(lambda c: gw_invariant(GWQuery(args.r, c)), queries)
    rows = [
        [_csv_cell([args.r]), _csv_cell(c), format_fraction(v), ""]
        for c, v in zip(queries, values)
    ]
    if args.format == "json":
        print(
            json.dumps(
                [
                    {"r": args.r, "counts": list(c), "value": format_fraction(v)}
                    for c, v in zip(queries, values)
                ]
            )
        )
    else:
        _emit_csv(["r", "counts", "value", "notes"], rows)
    return 0


def _cmd_rspin(args) -> int:
    value = w_number_genus0(args.r, tuple(args.k))
    if args.format == "json":
        _emit_value(value, [("r", args.r), ("k", args.k)], "json")
    else:
        _emit_csv(
            ["r", "k", "value", "notes"],
            [[_csv_cell([args.r]), _csv_cell(args.k), format_fraction(value), ""]],
        )
    return 0


def _cmd_potential(args) -> int:
    rows = potential_coefficients(args.r, args.max_n, strict_paper=args.strict_paper)
    note = "concavity-proxy" + (";strict-paper" if args.strict_paper else "")
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "r": args.r,
                        "n": row["n"],
                        "k": list(row["k"]),
                        "m": list(row["m"]),
                        "a": list(row["a"]),
                        "w0": format_fraction(row["w0"]),
                        "w_ma": format_fraction(row["w_ma"]),
                        "value": format_fraction(row["coefficient"]),
                        "notes": note,
                    }
                    for row in rows
                ]
            )
        )
    else:
        _emit_csv(
            ["r", "n", "k", "m", "a", "w0", "w_ma", "value", "notes"],
            [
                [
                    str(args.r),
                    str(row["n"]),
                    _csv_cell(row["k"]),
                    _csv_cell(row["m"]),
                    _csv_cell(row["a"]),
                    format_fraction(row["w0"]),
                    format_fraction(row["w_ma"]),
                    format_fraction(row["coefficient"]),
                    note,
                ]
                for row in rows
            ],
        )
    return 0


def _cmd_elsv(args) -> int:
    value = elsv_genus0(tuple(args.b))
    if args.format == "json":
        _emit_value(value, [("b", args.b)], "json")
    else:
        _emit_csv(["b", "value", "notes"], [[_csv_cell(args.b), format_fraction(value), ""]])
    return 0


def _cmd_hurwitz(args) -> int:
    value = hurwitz_oracle(tuple(args.b))
    if args.format == "json":
        _emit_value(value, [("b", args.b)], "json", notes="enumerative-oracle")
    else:
        _emit_csv(
            ["b", "value", "notes"],
            [[_csv_cell(args.b), format_fraction(value), "enumerative-oracle"]],
        )
    return 0


def _cmd_verify(args) -> int:
    report = run_suites(args.suite)
    print(json.dumps(report, sort_keys=True))
    return 0 if report["passed"] else 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _build_parser() -> _Parser:
    parser = _Parser(prog="rootgrr", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p, default="plain"):
        p.add_argument("--format", choices=["json", "csv", "plain"], default=default)

    p = sub.add_parser("chern", help="degree-d Chern character of the direct image")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=_int_list, required=True)
    p.add_argument("--degree", type=int, required=True)
    add_format(p, default="json")
    p.set_defaults(fn=_cmd_chern)

    p = sub.add_parser("gw", help="one orbifold Gromov-Witten invariant")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--counts", type=_int_list, required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_gw)

    p = sub.add_parser("gw-table", help="all admissible invariants up to a size bound")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    add_format(p, default="csv")
    p.set_defaults(fn=_cmd_gw_table)

    p = sub.add_parser("rspin", help="genus-0 W-number for a multiindex")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=_int_list, required=True)
    add_format(p, default="csv")
    p.set_defaults(fn=_cmd_rspin)

    p = sub.add_parser("potential", help="spin potential coefficient table")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--strict-paper", action="store_true", dest="strict_paper")
    add_format(p, default="csv")
    p.set_defaults(fn=_cmd_potential)

    p = sub.add_parser("elsv", help="genus-0 Hurwitz number from the Hodge-integral formula")
    p.add_argument("--b", type=_int_list, required=True)
    add_format(p, default="csv")
    p.set_defaults(fn=_cmd_elsv)

    p = sub.add_parser("hurwitz-oracle", help="the same number by symmetric-group enumeration")
    p.add_argument("--b", type=_int_list, required=True)
    add_format(p, default="csv")
    p.set_defaults(fn=_cmd_hurwitz)

    p = sub.add_parser("verify", help="run the built-in invariant suites")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.set_defaults(fn=_cmd_verify)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (InadmissibleQueryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
