"""Command-line interface: ``cdverify <command> ...``."""
from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from . import alternating, arith, degrees, groups, zsigmondy
from .claims import exit_code, format_machine, format_text, parse_ledger, run_ledger
from .errors import CdVerifyError

EXIT_USAGE = 2


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def cmd_order(args) -> int:
    G = groups.parse_group(args.group)
    print(f"{groups.order_value(G)} = {groups.order(G)}")
    return 0


def cmd_pi(args) -> int:
    G = groups.parse_group(args.group)
    print("{" + ", ".join(map(str, sorted(groups.pi(G)))) + "}")
    return 0


def cmd_cyclotomic(args) -> int:
    if args.n < 1 or args.q < 2:
        return _fail("need n >= 1 and q >= 2")
    value = arith.cyclotomic_value(args.n, args.q)
    if args.factor:
        print(f"{value} = {arith.factorize(value)}")
    else:
        print(value)
    return 0


def cmd_zsigmondy(args) -> int:
    if args.q < 2 or args.n < 1:
        return _fail("need q >= 2 and n >= 1")
    value = zsigmondy.l(args.q, args.n)
    if value is not None:
        print(value)
    elif (args.q, args.n) == (2, 6):
        print("none (Zsigmondy exception)")
    else:
        print("none (no primitive prime divisor)")
    return 0


def cmd_altdeg(args) -> int:
    if args.n < 5:
        return _fail("A_n is simple only for n >= 5")
    if args.max:
        print(alternating.max_degree_alternating(args.n))
    else:
        print(" ".join(map(str, alternating.alternating_degrees(args.n))))
    return 0


def cmd_verify(args) -> int:
    try:
        with open(args.ledger, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        return _fail(f"cannot read {args.ledger}: {exc.strerror}")
    claims = parse_ledger(text)
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    results = run_ledger(claims, jobs=jobs, budget=args.budget_ms / 1000)
    fmt = format_machine if args.format == "machine" else format_text
    sys.stdout.write(fmt(results, timings=args.timings))
    return exit_code(results)


def cmd_tables(args) -> int:
    sys.stdout.write(degrees.table_text(args.k))
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdverify",
        description="Exact arithmetic on finite simple groups and claim ledger verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="order of a simple group with its factorization")
    p.add_argument("group", help="group name, e.g. G2(3), L(3,4), 2B2(8), ON")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("pi", help="prime divisors of the group order")
    p.add_argument("group")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("cyclotomic", help="value of Phi_n(q)")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--factor", action="store_true", help="also print the factorization")
    p.set_defaults(func=cmd_cyclotomic)

    p = sub.add_parser("zsigmondy", help="smallest primitive prime divisor of q^n - 1")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_zsigmondy)

    p = sub.add_parser("altdeg", help="character degrees of A_n")
    p.add_argument("n", type=int)
    p.add_argument("--max", action="store_true", help="print only the largest degree b(A_n)")
    p.set_defaults(func=cmd_altdeg)

    p = sub.add_parser("verify", help="evaluate a claim ledger")
    p.add_argument("ledger", help="path to a .claims file")
    p.add_argument("--jobs", type=_positive, default=None, help="worker processes (default: CPU count)")
    p.add_argument("--budget-ms", type=_positive, default=5000, help="CPU time budget per claim (default 5000)")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--timings", action="store_true", help="include elapsed time per claim")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="print a bundled table")
    tsub = p.add_subparsers(dest="action", required=True)
    d = tsub.add_parser("dump", help="print table K (1 to 5)")
    d.add_argument("k", type=int)
    d.set_defaults(func=cmd_tables)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CdVerifyError as exc:
        return _fail(str(exc))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
