"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
domain errors.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from .lattice import LatticePoint, Side, deformed_crossing_sequence
from .markov import (
    DEFAULT_CACHE, CacheValidationError, DomainError, cache_from_environment,
    markov_distance, markov_number, stern_brocot_oracle,
)
from .relations import DomainFilter, PreconditionError, classify_neighborhood, scan_line
from .snake import build_snake_graph, continued_fraction_of, count_matchings_fast
from .verify import SUITES, run_suite

SHOW_FIELDS = ("tiles", "glues", "cf", "count")
_NEGATIVE = re.compile(r"^-\d")


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    if not re.fullmatch(r"\s*-?\d+(\s*/\s*-?\d+)?\s*", text):
        raise argparse.ArgumentTypeError(f"expected an integer or p/q, got {text!r}")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}")


def parse_point(text: str) -> LatticePoint:
    parts = text.split(",")
    try:
        x, y = (int(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integer coordinates x,y, got {text!r}")
    return LatticePoint(x, y)


def parse_show(text: str) -> tuple[str, ...]:
    fields = tuple(f.strip() for f in text.split(",") if f.strip())
    unknown = [f for f in fields if f not in SHOW_FIELDS]
    if unknown or not fields:
        raise argparse.ArgumentTypeError(
            f"--show takes a comma list of {', '.join(SHOW_FIELDS)}; got {text!r}")
    return fields


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-6/5" or "-1,2" as an option; glue it to its flag
    out: list[str] = []
    for tok in argv:
        if (_NEGATIVE.match(tok) and out and out[-1].startswith("--")
                and "=" not in out[-1]):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="markov-distance",
                     description="Markov numbers as lengths of lattice segments.")
    parser.add_argument("--cache", metavar="PATH",
                        help="persist computed distances here ($MARKOV_CACHE overrides)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("number", help="Markov number m_{p/q}")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--oracle", action="store_true",
                   help="also compute by Stern-Brocot descent and compare")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("distance", help="Markov distance between two lattice points")
    p.add_argument("--from", dest="start", type=parse_point, required=True, metavar="X,Y")
    p.add_argument("--to", dest="end", type=parse_point, required=True, metavar="X,Y")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("snake", help="snake graph of the segment to (q, p)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--show", type=parse_show, default=SHOW_FIELDS)

    p = sub.add_parser("scan", help="Markov numbers along y = slope*x + intercept")
    p.add_argument("--slope", type=parse_rational, required=True)
    p.add_argument("--intercept", type=parse_rational, required=True)
    p.add_argument("--x-min", type=int, required=True)
    p.add_argument("--x-max", type=int, required=True)
    p.add_argument("--filter", choices=[f.value for f in DomainFilter], default="all",
                   help="'farey' keeps coprime 1 <= y < x; 'all' (default) any point but the origin")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("region", help="classify a neighbourhood against its center")
    p.add_argument("--center", type=parse_point, required=True, metavar="Q,P")
    p.add_argument("--radius", type=int, default=2)
    p.add_argument("--filter", choices=[f.value for f in DomainFilter], default="farey")
    p.add_argument("--format", choices=("text", "csv", "json"), default="csv")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-coord", type=int, default=None,
                   help="override the suite's coordinate bound")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_number(args, out) -> int:
    value = markov_number(args.p, args.q)
    oracle = stern_brocot_oracle(args.p, args.q) if args.oracle else None
    if args.format == "json":
        payload = {"x": args.q, "y": args.p, "m": str(value)}
        if oracle is not None:
            payload["oracle"] = str(oracle)
        print(json.dumps(payload), file=out)
    elif oracle is None:
        print(value, file=out)
    else:
        print(f"{value} oracle={oracle}", file=out)
    if oracle is not None and oracle != value:
        print(f"mismatch: geometric {value} != oracle {oracle}", file=sys.stderr)
        return 1
    return 0


def cmd_distance(args, out) -> int:
    value = markov_distance(args.start, args.end)
    if args.format == "json":
        d = args.end - args.start
        print(json.dumps({"x": d.x, "y": d.y, "m": str(value)}), file=out)
    else:
        print(value, file=out)
    return 0


def cmd_snake(args, out) -> int:
    markov_number(args.p, args.q)  # domain check
    seq = deformed_crossing_sequence((0, 0), (args.q, args.p), Side.LEFT)
    graph = build_snake_graph(seq)
    for fld in args.show:
        if fld == "tiles":
            print(graph.serialize(), file=out)
        elif fld == "glues":
            print(" ".join(str(g) for g in graph.glues), file=out)
        elif fld == "cf":
            print(continued_fraction_of(graph), file=out)
        elif fld == "count":
            print(count_matchings_fast(graph), file=out)
    return 0


def cmd_scan(args, out) -> int:
    report = scan_line(args.slope, args.intercept, args.x_min, args.x_max,
                       DomainFilter(args.filter))
    if args.format == "csv":
        out.write(report.to_csv())
    elif args.format == "json":
        print(report.to_json(), file=out)
    else:
        for pt, value in report.points:
            print(f"({pt.x},{pt.y}) {value}", file=out)
        line = f"verdict: {report.verdict.value}"
        if report.witness:
            line += f" at x = {', '.join(map(str, report.witness))}"
        print(line, file=out)
        if report.domain_filter is DomainFilter.ALL:
            print("domain: all lattice points (generalized m)", file=out)
    return 0


def cmd_region(args, out) -> int:
    region = classify_neighborhood(args.center, args.radius, DomainFilter(args.filter))
    if args.format == "json":
        print(region.to_json(), file=out)
    elif args.format == "csv":
        out.write(region.to_csv())
    else:
        mark = {"smaller": "<", "larger": ">", "equal": "=", "center": "*", "out": "."}
        c, r = region.center, region.radius
        for y in range(c.y + r, c.y - r - 1, -1):
            row = [mark[region.cells[LatticePoint(x, y)].value]
                   for x in range(c.x - r, c.x + r + 1)]
            print(" ".join(row), file=out)
    if region.equal_points():
        print(f"warning: equal values at {region.equal_points()}", file=sys.stderr)
    return 0


def cmd_verify(args, out) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    outcomes = [run_suite(name, args.max_coord, args.seed) for name in names]
    if args.format == "json":
        print(json.dumps([o.as_dict() for o in outcomes]), file=out)
    else:
        for o in outcomes:
            print(o.summary(), file=out)
            for case_id, expected, actual in o.failures[:20]:
                print(f"  {case_id}: expected {expected}, got {actual}", file=out)
    return 0 if all(o.passed for o in outcomes) else 1


COMMANDS = {"number": cmd_number, "distance": cmd_distance, "snake": cmd_snake,
            "scan": cmd_scan, "region": cmd_region, "verify": cmd_verify}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    try:
        cache_from_environment(args.cache)
        status = COMMANDS[args.command](args, out)
    except (DomainError, PreconditionError, CacheValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    path = os.environ.get("MARKOV_CACHE") or args.cache
    if path:
        DEFAULT_CACHE.save(path)
    return status


if __name__ == "__main__":
    sys.exit(main())
