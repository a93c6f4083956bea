"""Command line entry point: ``almostsym <command> ...``.

Exit codes: 0 success, 1 a verification found a difference, 2 bad usage.
"""
from __future__ import annotations

import argparse
import sys

from . import classifier as clf
from .orbits import InvalidMarkingError, Marking, is_extrinsically_symmetric, orbit_geometry, parse_support
from .rootsys import FAMILIES, InvalidRankError, build_root_system, kind
from .symspace import catalog, lookup

EXIT_OK, EXIT_DIFF, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _space_json(s) -> dict:
    return {"label": s.label, "family": s.family, "rank": s.rank,
            "mults": s.mult_map, "flags": vars(s.flags), "known_dim": s.known_dim,
            "parameters": dict(s.parameters)}


def cmd_list(args) -> int:
    spaces = catalog(args.max_rank)
    if args.format == "json":
        sys.stdout.write(clf.dumps([_space_json(s) for s in spaces]))
    else:
        for s in spaces:
            ms = ", ".join(f"{k}={v}" for k, v in s.mults)
            print(f"{s.label:<12} {s.restricted.name:<5} dim={s.known_dim:<4} {ms}")
    return EXIT_OK


def cmd_roots(args) -> int:
    family = args.family.upper()
    if family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
    rs = build_root_system(kind(family, args.rank))
    sys.stdout.write(rs.dump_json() + "\n")
    return EXIT_OK


def cmd_orbit(args) -> int:
    space = lookup(args.space, args.max_rank)
    m = Marking(space.rank, parse_support(args.support))
    geo = orbit_geometry(space, m)
    sys.stdout.write(clf.dumps({
        "space": space.label, "support": list(m.support), "tangent_dim": geo.tangent_dim,
        "codim": geo.codim, "kind": geo.kind,
        "symmetric": is_extrinsically_symmetric(space, m)}))
    return EXIT_OK


def cmd_classify(args) -> int:
    spaces = [lookup(args.space, args.max_rank)] if args.space else catalog(args.max_rank)
    sys.stdout.write(clf.dumps(clf.report(clf.classify_all(spaces=spaces))))
    return EXIT_OK


def cmd_verify(args) -> int:
    diff = clf.verify_expected(args.max_rank)
    sys.stdout.write(clf.dumps(diff.to_json()))
    return EXIT_OK if diff.empty else EXIT_DIFF


def cmd_verify_table_b(args) -> int:
    res = clf.verify_table_b()
    sys.stdout.write(clf.dumps(res))
    return EXIT_OK if res["ok"] else EXIT_DIFF


def cmd_emit(args) -> int:
    verdicts = clf.classify_all(args.max_rank)
    sys.stdout.write(clf.emit_table_a(verdicts, args.format, args.max_rank))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="almostsym",
        description="Classify almost symmetric orbits of s-representations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_rank(p):
        p.add_argument("--max-rank", type=int, default=8, help="largest restricted rank (default 8)")
        return p

    p = with_rank(sub.add_parser("list", help="list catalog entries"))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("roots", help="dump the positive roots of a root system")
    p.add_argument("family")
    p.add_argument("rank", type=int)
    p.set_defaults(func=cmd_roots)

    p = with_rank(sub.add_parser("orbit", help="orbit geometry of a marked basepoint"))
    p.add_argument("space", help="catalog label, e.g. 'AI(3)' or EIII")
    p.add_argument("support", help="comma separated nodes, e.g. 1,2")
    p.set_defaults(func=cmd_orbit)

    p = with_rank(sub.add_parser("classify", help="sweep markings and characters"))
    p.add_argument("--space", help="only this catalog label")
    p.set_defaults(func=cmd_classify)

    p = with_rank(sub.add_parser("verify", help="diff the sweep against expected findings"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-table-b", help="dimension checks for the cohomogeneity-3 rows")
    p.set_defaults(func=cmd_verify_table_b)

    p = with_rank(sub.add_parser("emit", help="render the table of findings"))
    p.add_argument("--table", choices=("a",), default="a")
    p.add_argument("--format", choices=("json", "md"), default="md")
    p.set_defaults(func=cmd_emit)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    if getattr(args, "max_rank", 8) < 2:
        print("almostsym: --max-rank must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, KeyError, InvalidMarkingError, InvalidRankError, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"almostsym: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
