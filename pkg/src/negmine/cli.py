"""Command-line interface: ``negmine --input FILE --minsprt R --minconf R --mininterest R``.

Exit codes: 0 success, 1 bad arguments, 2 ingestion error, 3 oracle capacity
exceeded.
"""
from __future__ import annotations

import argparse
import contextlib
import sys

from .exceptions import CapacityError, DomainError, IngestionError
from .measures import Thresholds, to_fraction
from .miner import MinerConfig, mine
from .oracle import oracle_mine
from .report import build_report, to_json, to_text
from .rules import negative_rules, positive_rules
from .transactions import load_basket

EXIT_OK, EXIT_USAGE, EXIT_INGEST, EXIT_CAPACITY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text):
    try:
        return to_fraction(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="negmine", description="Mine positive and negative itemsets of interest.")
    p.add_argument("--input", required=True, metavar="PATH", help="basket file")
    p.add_argument("--minsprt", required=True, type=_rational, metavar="R")
    p.add_argument("--minconf", required=True, type=_rational, metavar="R")
    p.add_argument("--mininterest", required=True, type=_rational, metavar="R")
    p.add_argument("--mode", choices=["literal", "freq"], default="literal",
                   help="candidate filter (default: literal)")
    p.add_argument("--termination", choices=["temp-empty", "paper-literal"], default="temp-empty")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--rules", action="store_true", help="extract association rules")
    p.add_argument("--compare-oracle", action="store_true",
                   help="check the result against exhaustive enumeration (small inputs)")
    p.add_argument("--trace", action="store_true", help="list per-level families")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        thr = Thresholds(args.minsprt, args.minconf, args.mininterest)
    except DomainError as exc:
        print(f"negmine: error: {exc}", file=stderr)
        return EXIT_USAGE
    cfg = MinerConfig(args.mode, args.termination.replace("-", "_"))

    try:
        db = load_basket(args.input)
    except (IngestionError, OSError) as exc:
        print(f"negmine: ingestion error: {exc}", file=stderr)
        return EXIT_INGEST

    oracle = None
    if args.compare_oracle:
        try:
            oracle = oracle_mine(db, thr)
        except CapacityError as exc:
            print(f"negmine: {exc}", file=stderr)
            return EXIT_CAPACITY

    result = mine(db, thr, cfg)
    rules = None
    if args.rules:
        if thr.minconf == 0:
            print("negmine: note: --rules with minconf=0 keeps every rule regardless of confidence",
                  file=stderr)
        rules = positive_rules(db, result.ps, thr) + negative_rules(db, result.ns, thr)

    report = build_report(db, thr, cfg, result, source=args.input, rules=rules,
                          oracle=oracle, trace=args.trace)
    stdout.write(to_json(report) if args.format == "json" else to_text(report))
    return EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
