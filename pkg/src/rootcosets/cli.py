"""
Command line front end: root tables, exhaustive verifications, Costas
enumeration, chain replay and poset export.

Exit codes: 0 on success, 1 when a verification finds a counterexample,
2 on usage errors (bad rank, bad format, malformed root).
"""

import argparse
import json
import sys

from . import bruhat, cosets, costas
from .roots import all_roots, parse_root

# rank windows per command; --force lifts the ceilings, never the floors
RANK_WINDOWS = {
    "table": (3, 12),
    "costas": (1, 10),
    "poset": (3, 7),
    "chain": (3, 12),
    "verify:theorem1": (3, 8),
    "verify:contrapositives": (3, 8),
    "verify:character": (3, 7),
    "verify:proposition": (3, 7),
}

VERIFIERS = {
    "theorem1": bruhat.verify_equal_height_comparable,
    "contrapositives": bruhat.verify_height_separation,
    "character": cosets.verify_character_identity,
    "proposition": costas.verify_costas_height_property,
}


class UsageError(Exception):
    pass


def _guard_rank(what: str, n: int, force: bool) -> None:
    lo, hi = RANK_WINDOWS[what]
    if n < lo:
        raise UsageError(f"{what} needs rank at least {lo}, got {n}")
    if n > hi:
        if not force:
            raise UsageError(
                f"{what} is capped at rank {hi}, got {n}; pass --force to override"
            )
        print(
            f"warning: rank {n} is above the usual ceiling {hi} for {what}",
            file=sys.stderr,
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootcosets",
        description="Tables and exhaustive checks for the root/coset "
        "correspondence of the symmetric group.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="one row per root: height, longest representative, its length")
    table.add_argument("--n", type=int, required=True, help="rank")
    table.add_argument("--format", choices=("text", "csv", "json"), default="text")
    table.add_argument("--force", action="store_true", help="lift the rank ceiling")

    verify = sub.add_parser("verify", help="run one exhaustive check")
    verify.add_argument(
        "target",
        choices=("theorem1", "contrapositives", "character", "proposition"),
        help="theorem1: equal-height cosets comparable; contrapositives: "
        "incomparability and equal statistic force distinct heights; "
        "character: fixed roots match fixed cosets; proposition: Costas "
        "arrays separate heights",
    )
    verify.add_argument("--n", type=int, required=True, help="rank")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--force", action="store_true", help="lift the rank ceiling")

    costas_cmd = sub.add_parser("costas", help="enumerate Costas permutations")
    costas_cmd.add_argument("--n", type=int, required=True, help="order")
    costas_cmd.add_argument("--count-only", action="store_true")
    costas_cmd.add_argument("--force", action="store_true", help="lift the rank ceiling")

    poset = sub.add_parser("poset", help="emit the coset order as a DOT digraph")
    poset.add_argument("--n", type=int, required=True, help="rank")
    poset.add_argument("--out", help="output path; standard output when omitted")
    poset.add_argument("--force", action="store_true", help="lift the rank ceiling")

    chain = sub.add_parser("chain", help="replay the transposition chain from one coset")
    chain.add_argument("--n", type=int, required=True, help="rank")
    chain.add_argument("--root", required=True, help="starting root, e.g. a(2,4)")
    chain.add_argument("--force", action="store_true", help="lift the rank ceiling")

    return parser


def _table_rows(n: int) -> list[tuple[str, int, str, int]]:
    rows = []
    for r in sorted(all_roots(n), key=lambda r: (r.height, r.i)):
        rows.append((str(r), r.height, str(cosets.max_rep(r)), cosets.max_rep_length(r)))
    return rows


def _render_table(rows, fmt: str) -> str:
    header = ("root", "height", "max_rep", "n_J")
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(str(x) for x in row) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps([dict(zip(header, row)) for row in rows], indent=2) + "\n"
    cells = [header] + [tuple(str(x) for x in row) for row in rows]
    widths = [max(len(line[c]) for line in cells) for c in range(len(header))]
    return (
        "\n".join(
            "  ".join(line[c].ljust(widths[c]) for c in range(len(header))).rstrip()
            for line in cells
        )
        + "\n"
    )


def cmd_table(n: int, fmt: str, force: bool = False) -> str:
    _guard_rank("table", n, force)
    return _render_table(_table_rows(n), fmt)


def cmd_verify(target: str, n: int, fmt: str, force: bool = False) -> tuple[int, str]:
    _guard_rank(f"verify:{target}", n, force)
    report = VERIFIERS[target](n, force=force)
    document = report.to_json() + "\n" if fmt == "json" else report.summary() + "\n"
    return (0 if report.passed else 1), document


def cmd_costas(n: int, count_only: bool, force: bool = False) -> str:
    _guard_rank("costas", n, force)
    found = costas.enumerate_costas(n)
    if count_only:
        return f"{len(found)}\n"
    return "".join(f"{w}\n" for w in found)


def cmd_poset(n: int, force: bool = False) -> str:
    _guard_rank("poset", n, force)
    lines = [f"digraph coset_bruhat_n{n} {{"]
    for r in all_roots(n):
        lines.append(
            f'  "{r}" [label="{r} | h={r.height} | nJ={cosets.max_rep_length(r)}"];'
        )
    for a, b in bruhat.hasse_covers(n, force=force):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_chain(n: int, root_text: str, force: bool = False) -> str:
    _guard_rank("chain", n, force)
    try:
        start = parse_root(root_text, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    head = cosets.max_rep(start)
    lines = [f"{start} h={start.height} {head} length={head.length()}"]
    for step in bruhat.chain(start):
        first, second = step.intermediates
        lines.append(f"  -> {first} length={first.length()}")
        lines.append(
            f"{step.target} h={step.target.height} {second} length={second.length()}"
        )
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "table":
            sys.stdout.write(cmd_table(args.n, args.format, args.force))
            return 0
        if args.command == "verify":
            code, document = cmd_verify(args.target, args.n, args.format, args.force)
            sys.stdout.write(document)
            return code
        if args.command == "costas":
            sys.stdout.write(cmd_costas(args.n, args.count_only, args.force))
            return 0
        if args.command == "poset":
            document = cmd_poset(args.n, args.force)
            if args.out:
                try:
                    with open(args.out, "w") as handle:
                        handle.write(document)
                except OSError as exc:
                    raise UsageError(f"cannot write {args.out}: {exc}") from None
            else:
                sys.stdout.write(document)
            return 0
        if args.command == "chain":
            sys.stdout.write(cmd_chain(args.n, args.root, args.force))
            return 0
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
