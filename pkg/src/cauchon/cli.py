"""Command line front end: ``cauchon <command> TYPE [options]``.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 size limit.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .checks import run_invariants
from .diagrams import (
    brute_force_diagrams,
    count_all,
    count_column,
    enumerate_all,
    graph_for,
    per_start_counts,
    verify_bijection,
)
from .errors import CauchonError, SizeError
from .implications import Arrow, to_dot
from .lusztig import canonical_order
from .planes import enumerate_admissible_planes
from .roots import LieType, weyl_order
from .serialize import implication_to_dict, order_to_dict

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3
ORACLE_LIMIT = 14


def _type_arg(token: str) -> LieType:
    try:
        return LieType.parse(token)
    except CauchonError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _coeffs(root) -> str:
    return "(" + ",".join(str(x) for x in root) + ")"


def cmd_roots(args, out) -> int:
    order = canonical_order(args.type)
    if args.format == "json":
        json.dump(order_to_dict(order, graph_for(order)), out, indent=1)
        out.write("\n")
        return EXIT_OK
    out.write(f"{'pos':>4}  {'coeffs':<26} {'col':>3} {'box':>3} {'h':>3} {'lheight':>7} {'simple':>6}\n")
    for e in order.entries:
        out.write(
            f"{e.pos:>4}  {_coeffs(e.root):<26} {e.column:>3} {e.box:>3} "
            f"{e.height:>3} {str(e.lheight):>7} {e.assoc_simple:>6}\n"
        )
    return EXIT_OK


def cmd_word(args, out) -> int:
    order = canonical_order(args.type)
    out.write(" ".join(str(i) for i in order.word) + "\n")
    return EXIT_OK


def cmd_planes(args, out) -> int:
    order = canonical_order(args.type)
    planes = enumerate_admissible_planes(order)
    if args.format == "json":
        doc = [
            {
                "column": p.column,
                "type": p.ptype.value,
                "condition": p.condition,
                "members": [order.position_of(m) for m in p.members],
                "roles": {k: order.position_of(v) for k, v in p.roles},
            }
            for p in planes
        ]
        json.dump(doc, out, indent=1)
        out.write("\n")
        return EXIT_OK
    for p in planes:
        members = " ".join(str(order.position_of(m)) for m in p.members)
        roles = ", ".join(f"{k}={order.position_of(v)}" for k, v in p.roles)
        out.write(f"column {p.column}  {p.ptype.value:<6} {p.condition:<8} [{members}]  {roles}\n")
    return EXIT_OK


def cmd_implications(args, out) -> int:
    order = canonical_order(args.type)
    g = graph_for(order)
    imps = list(g.column(args.column)) if args.column else list(g)
    if args.format == "dot":
        out.write(to_dot(g, args.column))
    elif args.format == "json":
        doc = order_to_dict(order)
        doc["implications"] = [implication_to_dict(i) for i in imps]
        json.dump(doc, out, indent=1)
        out.write("\n")
    else:
        for imp in imps:
            if isinstance(imp, Arrow):
                out.write(f"{imp.src} -> {imp.dst}\n")
            else:
                out.write(f"{imp.src} => " + " or ".join(str(a) for a in imp.alts) + "\n")
    return EXIT_OK


def cmd_count(args, out) -> int:
    g = graph_for(args.type)
    n = args.type.rank
    cols = [args.column] if args.column else list(range(1, n + 1))
    if args.per_start:
        for j in cols:
            rep = per_start_counts(j, g)
            out.write(f"column {j}\n")
            for k, v in rep.per_start.items():
                out.write(f"{'none' if k is None else k}: {v}\n")
            out.write(f"total: {rep.total}\n")
        return EXIT_OK
    if args.per_column:
        for j in cols:
            out.write(f"column {j}: {count_column(j, g)}\n")
    if args.column:
        if not args.per_column:
            out.write(f"{count_column(args.column, g)}\n")
    else:
        out.write(f"{count_all(g)}\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    diagrams = list(enumerate_all(args.type, limit=args.limit))
    if args.format == "json":
        json.dump([list(d.positions) for d in diagrams], out)
        out.write("\n")
    else:
        for d in diagrams:
            out.write("{" + ",".join(str(p) for p in d.positions) + "}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if not (args.invariants or args.bijection or args.oracle):
        args.invariants = True
    ok = True
    if args.invariants:
        for r in run_invariants(args.type):
            out.write(r.line() + "\n")
            ok &= r.ok
        c, w = count_all(args.type), weyl_order(args.type)
        out.write(f"{'PASS' if c == w else 'FAIL'}  diagram count {c} vs |W| {w}\n")
        ok &= c == w
    if args.bijection:
        rep = verify_bijection(args.type)
        out.write(
            f"{'PASS' if rep.ok else 'FAIL'}  bijection: {rep.diagrams} diagrams, "
            f"all reduced {rep.all_reduced}, all distinct {rep.all_distinct}, "
            f"image {rep.image_size} of |W| {rep.weyl_order}\n"
        )
        ok &= rep.ok
    if args.oracle:
        order = canonical_order(args.type)
        if len(order) > ORACLE_LIMIT:
            raise _Usage(f"--oracle needs at most {ORACLE_LIMIT} positive roots, {args.type} has {len(order)}")
        g = graph_for(order)
        scanned = brute_force_diagrams(g)
        listed = set(enumerate_all(g))
        good = scanned == listed and len(scanned) == weyl_order(args.type)
        out.write(f"{'PASS' if good else 'FAIL'}  oracle: exhaustive scan finds {len(scanned)} diagrams\n")
        ok &= good
    return EXIT_OK if ok else EXIT_FAIL


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cauchon", description="Lusztig orders, admissible planes and Cauchon diagrams."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("type", type=_type_arg, help="Cartan type such as A3, F4 or E8")
        p.set_defaults(func=func)
        return p

    p = add("roots", cmd_roots, "positive roots in Lusztig order")
    p.add_argument("--format", choices=["text", "json"], default="text")
    add("word", cmd_word, "the reduced word of w_0 behind the order")
    p = add("planes", cmd_planes, "admissible planes and their types")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p = add("implications", cmd_implications, "implications between order positions")
    p.add_argument("--column", type=int)
    p.add_argument("--format", choices=["text", "dot", "json"], default="text")
    p = add("count", cmd_count, "count Cauchon diagrams")
    p.add_argument("--column", type=int)
    p.add_argument("--per-column", action="store_true")
    p.add_argument("--per-start", action="store_true")
    p = add("enumerate", cmd_enumerate, "list Cauchon diagrams")
    p.add_argument("--limit", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p = add("verify", cmd_verify, "run checks; exit 1 if any fails")
    p.add_argument("--invariants", action="store_true")
    p.add_argument("--bijection", action="store_true")
    p.add_argument("--oracle", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    col = getattr(args, "column", None)
    if col is not None and not 1 <= col <= args.type.rank:
        print(f"cauchon: column {col} outside 1..{args.type.rank}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except _Usage as exc:
        print(f"cauchon: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeError as exc:
        print(f"cauchon: {exc}", file=sys.stderr)
        return EXIT_SIZE


if __name__ == "__main__":
    sys.exit(main())
