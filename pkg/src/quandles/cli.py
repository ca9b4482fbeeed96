"""Command-line front end.

Exit codes: 0 success / affirmative answer, 1 valid-but-negative answer
(not isomorphic, not connected), 2 malformed input or usage error,
3 internal assertion failure.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import canon, catalog_io, enumeration, verify
from .perm import cycle_notation
from .quandle import (
    Quandle,
    QuandleError,
    dual,
    is_connected,
    is_latin,
    profile,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BAD_INPUT = 2
EXIT_INTERNAL = 3


def _load(path: str) -> Quandle:
    return catalog_io.load_quandle(path)


def _profile_str(q: Quandle) -> str:
    return catalog_io.format_profile(profile(q))


def cmd_check(args) -> int:
    q = _load(args.file)
    connected = is_connected(q)
    parts = [
        "valid",
        "connected" if connected else "not connected",
        "latin" if is_latin(q) else "not latin",
    ]
    if connected:
        parts.append(f"profile {_profile_str(q)}")
    print(f"order {q.n}: " + ", ".join(parts))
    return EXIT_OK


def cmd_canon(args) -> int:
    q = _load(args.file)
    sys.stdout.write(catalog_io.serialize_matrix(canon.canonical_form(q)))
    return EXIT_OK


def cmd_aut(args) -> int:
    q = _load(args.file)
    group = canon.automorphism_group(q)
    for p in group:
        print(cycle_notation(p))
    print(f"|Aut| = {len(group)}")
    return EXIT_OK


def cmd_iso(args) -> int:
    q1, q2 = _load(args.file1), _load(args.file2)
    if canon.are_isomorphic(q1, q2):
        print("isomorphic")
        return EXIT_OK
    print("not isomorphic")
    return EXIT_NEGATIVE


def cmd_dual(args) -> int:
    q = _load(args.file)
    sys.stdout.write(catalog_io.serialize_matrix(dual(q).table))
    return EXIT_OK


def _max_order(args) -> int | None:
    if args.max_order_override is not None:
        return args.max_order_override
    env = os.environ.get("QUANDLE_MAX_ORDER")
    return int(env) if env else None


def _parse_profile(text: str) -> tuple[int, ...]:
    return tuple(
        sorted(int(x) for x in text.strip().strip("{}").split(",") if x)
    )


def cmd_enum(args) -> int:
    progress = (lambda msg: print(msg, file=sys.stderr)) if args.verbose else None
    quandles = enumeration.enumerate_connected(
        args.n, max_order=_max_order(args), progress=progress
    )
    if args.profile:
        quandles = enumeration.filter_by_profile(
            quandles, _parse_profile(args.profile)
        )
    if args.out:
        entries = [
            catalog_io.CatalogEntry(id=f"q{args.n}_{i}", quandle=q)
            for i, q in enumerate(quandles, start=1)
        ]
        catalog_io.save_catalog(args.out, entries)
    else:
        for q in quandles:
            sys.stdout.write(catalog_io.serialize_matrix(q.table))
            print()
    print(f"{len(quandles)} classes")
    return EXIT_OK


def cmd_verify(args) -> int:
    if os.path.isdir(args.path):
        entries = catalog_io.load_catalog(args.path)
    else:
        entries = [
            catalog_io.CatalogEntry(
                id=os.path.basename(args.path), quandle=_load(args.path)
            )
        ]
    catalog = [(e.id, e.quandle) for e in entries]
    disconnected = [name for name, q in catalog if not is_connected(q)]
    if disconnected:
        print(f"not connected: {', '.join(disconnected)}", file=sys.stderr)
        return EXIT_NEGATIVE
    reports = verify.verify_all(catalog)
    wanted = set(args.claims.split(",")) if args.claims else None
    for report in reports:
        if wanted is None or report.claim in wanted:
            print(report.line())
    failures = verify.theorem_failures(reports)
    if failures:
        print(f"{len(failures)} theorem check(s) FAILED", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandle",
        description="Finite connected quandles: validation, canonical "
        "forms, automorphisms, enumeration, claim verification.",
    )
    parser.add_argument("--jobs", type=int, default=1, help="worker cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a table and report its facts")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("canon", help="print the canonical form")
    p.add_argument("file")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("aut", help="list automorphisms")
    p.add_argument("file")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("iso", help="exit 0 iff the two quandles are isomorphic")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("dual", help="print the dual quandle")
    p.add_argument("file")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("enum", help="enumerate connected quandles of order n")
    p.add_argument("n", type=int)
    p.add_argument("--profile", help="keep only this profile, e.g. {1,4}")
    p.add_argument("--out", help="write results as a catalog directory")
    p.add_argument("--max-order-override", type=int, default=None)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("verify", help="run claim checks over a file or catalog")
    p.add_argument("path")
    p.add_argument("--claims", help="comma-separated claim ids to print")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (catalog_io.MatrixFormatError, catalog_io.ValidationFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (QuandleError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
