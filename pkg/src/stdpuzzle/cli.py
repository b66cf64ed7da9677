"""Command-line surface.

Subcommands: pieces, reduce, transform, skeleton, count, enumerate, seq,
theorem, compose, verify, identify, families.  Structured results go to
stdout as JSON (or CSV with --format csv); human-oriented progress lines
go to stderr.  Exit codes: 0 success, 1 verification failure, 2 usage
error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import families as families_mod
from . import theorems
from .counting import (count_bruteforce, count_corner_bottom,
                       count_corner_top, count_dp, enumerate_puzzles)
from .identify import identify
from .pieces import Support, piece_table, reduce_window
from .sequences import (catalan, double_factorial, fibonacci, lattice_L,
                        multinomial_all_pairs, secant, whirlpool_W)
from .skeleton import export_dot, puzzle_skeleton
from .transforms import f1, f2, f3, f12, f123
from .verify import run_verification

_SEQUENCES = {
    "catalan": catalan,
    "secant": secant,
    "fibonacci": fibonacci,
    "double_factorial": double_factorial,
    "double_factorial_odd": lambda k: double_factorial(2 * k + 1),
    "double_factorial_even": lambda k: double_factorial(2 * k),
    "lattice": lattice_L,
    "whirlpool": whirlpool_W,
    "multinomial_pairs": multinomial_all_pairs,
}

_THEOREM_FUNCS = {
    "a123b": lambda a: theorems.a123_plus_b(a.i, a.n),
    "a12b": lambda a: theorems.a12_plus_b(a.i, a.n),
    "a123c": lambda a: theorems.a123_plus_c(a.i, a.n),
    "a12c": lambda a: theorems.a12_plus_c(a.i, a.n),
    "a23b": lambda a: theorems.a23_plus_b(a.i, a.n),
    "a2b": lambda a: theorems.a2_plus_b(a.i, a.n),
    "a12345b": lambda a: theorems.a12345_plus_b(a.i, a.n),
    "simple_piece": lambda a: theorems.simple_piece_count(a.i, a.n),
    "fibonacci": lambda a: theorems.fibonacci_family(a.n),
}

# Interface aliases for the same formulas (--base picks the P/Q variant).
_THEOREM_ALIASES = {
    "thm42": ("a123b", "a123b"),
    "thm43": ("a12b", "a12b"),
    "thm44": ("a123c", "a12c"),
    "thm46": ("a23b", "a23b"),
    "thm47": ("a2b", "a2b"),
    "thm48": ("a12345b", "a12345b"),
}

_MAPS = {"f1": f1, "f2": f2, "f3": f3, "f12": f12, "f123": f123}


def _emit(args, payload, csv_rows=None) -> None:
    """Print a payload as JSON, or as CSV when rows are tabular."""
    if args.format == "csv" and csv_rows is not None:
        rows = list(csv_rows)
        writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]) if rows else [])
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    else:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")


def _support(text: str) -> Support:
    return Support.parse(text)


def _nmax(args, default: int) -> int:
    if args.nmax is not None:
        return args.nmax
    if args.global_nmax is not None:
        return args.global_nmax
    return default


def cmd_pieces(args) -> int:
    rows = [{"code": p.code, "letter": p.letter, "category": p.category,
             "index": p.index,
             "grid": f"[{p.tl} {p.tr} / {p.bl} {p.br}]"} for p in piece_table()]
    _emit(args, rows, csv_rows=rows)
    return 0


def cmd_reduce(args) -> int:
    values = [int(tok) for tok in args.window.replace(",", " ").split()]
    if len(values) != 4:
        raise ValueError("expected four labels: TL,TR,BL,BR")
    p = reduce_window(*values)
    payload = {"window": values, "piece": p.code, "letter": p.letter}
    _emit(args, payload, csv_rows=[payload | {"window": args.window}])
    return 0


def cmd_transform(args) -> int:
    support = _support(args.support)
    image = _MAPS[args.map](support)
    payload = {"map": args.map, "support": str(support), "image": str(image)}
    _emit(args, payload, csv_rows=[payload])
    return 0


def cmd_skeleton(args) -> int:
    support = _support(args.support)
    graph = puzzle_skeleton(support, args.n)
    dot = export_dot(graph)
    payload = {"support": str(support), "n": args.n,
               "vertices": len(graph.vertices), "edges": len(graph.edges)}
    if args.dot == "-":
        sys.stdout.write(dot)
        return 0
    if args.dot:
        with open(args.dot, "w") as handle:
            handle.write(dot)
        payload["dot"] = args.dot
    else:
        payload["dot_text"] = dot
    _emit(args, payload)
    return 0


def cmd_count(args) -> int:
    support = _support(args.support)
    if args.corner:
        where, _, rank = args.corner.partition("=")
        x = int(rank)
        if where == "bottom":
            value = count_corner_bottom(support, args.n, x)
        elif where == "top":
            value = count_corner_top(support, args.n, x)
        else:
            raise ValueError("--corner expects bottom=X or top=X")
    elif args.engine == "brute":
        value = count_bruteforce(support, args.n)
    else:
        value = count_dp(support, args.n)
    payload = {"support": str(support), "n": args.n, "engine": args.engine,
               "count": str(value)}
    if args.corner:
        payload["corner"] = args.corner
    _emit(args, payload, csv_rows=[payload])
    return 0


def cmd_enumerate(args) -> int:
    support = _support(args.support)
    puzzles = enumerate_puzzles(support, args.n)
    payload = {"support": str(support), "n": args.n,
               "count": str(len(puzzles)),
               "puzzles": [str(p) for p in puzzles]}
    _emit(args, payload, csv_rows=[{"puzzle": str(p)} for p in puzzles])
    return 0


def cmd_seq(args) -> int:
    if args.name not in _SEQUENCES:
        raise ValueError(f"unknown sequence {args.name!r}; "
                         f"choose from {', '.join(sorted(_SEQUENCES))}")
    fn = _SEQUENCES[args.name]
    values = [str(fn(k)) for k in range(args.start, args.upto + 1)]
    payload = {"name": args.name, "start": args.start, "upto": args.upto,
               "values": values}
    _emit(args, payload, csv_rows=[{"k": k, "value": v} for k, v in
                                   zip(range(args.start, args.upto + 1), values)])
    return 0


def cmd_theorem(args) -> int:
    name = args.id
    if name in _THEOREM_ALIASES:
        p_variant, q_variant = _THEOREM_ALIASES[name]
        name = q_variant if (args.base or "P").upper() == "Q" else p_variant
    if name not in _THEOREM_FUNCS:
        raise ValueError(f"unknown theorem id {args.id!r}")
    value = _THEOREM_FUNCS[name](args)
    payload = {"id": args.id, "resolved": name, "i": args.i, "n": args.n,
               "value": str(value)}
    _emit(args, payload, csv_rows=[payload])
    return 0


def cmd_compose(args) -> int:
    query = theorems.CompositionQuery(args.x, args.y, args.z, args.n,
                                      args.converter)
    value = theorems.compose(query)
    payload = {"x": args.x, "y": args.y, "z": args.z, "n": args.n,
               "converter": args.converter,
               "support": str(theorems.compose_support(query)),
               "value": str(value)}
    if args.verify:
        check = count_dp(theorems.compose_support(query), args.n)
        payload["engine_count"] = str(check)
        payload["verified"] = check == value
        if not payload["verified"]:
            _emit(args, payload)
            return 1
    _emit(args, payload, csv_rows=[payload])
    return 0


def cmd_verify(args) -> int:
    scope = "all" if not args.claim else args.claim
    report = run_verification(scope=scope, nmax=_nmax(args, 3))
    for result in report.results:
        print(f"[{result.status.upper():7s}] {result.claim}: {result.description}",
              file=sys.stderr)
    _emit(args, report.to_dict(),
          csv_rows=[r.to_dict() | {"computed": ";".join(map(str, r.computed)),
                                   "expected": ";".join(map(str, r.expected))}
                    for r in report.results])
    return 0 if report.ok else 1


def cmd_identify(args) -> int:
    support = _support(args.support)
    payload = identify(support, _nmax(args, 6), use_oeis=args.oeis,
                       cache_dir=args.cache_dir)
    _emit(args, payload, csv_rows=payload["matches"] or
          [{"name": "", "oeis": "", "offset": "", "factor": "",
            "label": "no registry match", "kind": "registry"}])
    return 0


def cmd_families(args) -> int:
    xs = [int(tok) for tok in args.x.split(",")] if args.x else None
    rows = families_mod.sweep(args.kind, _nmax(args, 4),
                              include_open=args.include_open,
                              xs=xs, threads=args.threads)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        if args.format == "csv":
            writer = None
            for row in rows:
                flat = dict(row)
                flat["prefix"] = ";".join(flat["prefix"])
                flat.pop("match_detail")
                if writer is None:
                    writer = csv.DictWriter(out, fieldnames=list(flat))
                    writer.writeheader()
                writer.writerow(flat)
        else:
            for row in rows:  # JSON lines: one family per line
                out.write(json.dumps(row) + "\n")
    finally:
        if args.out:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stdpuzzle",
        description="enumerate, count, and verify standard puzzles")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--cache-dir", default=None,
                        help="cache directory for OEIS lookups")
    parser.add_argument("--oeis", action="store_true",
                        help="allow network lookups against OEIS")
    parser.add_argument("--nmax", dest="global_nmax", type=int, default=None,
                        help="default n ceiling for verify/identify/families")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("pieces", help="list the 24 standard pieces")

    p = sub.add_parser("reduce", help="standardize a 2x2 window")
    p.add_argument("--window", required=True, help="TL,TR,BL,BR labels")

    p = sub.add_parser("transform", help="apply a piece-set bijection")
    p.add_argument("--map", required=True, choices=sorted(_MAPS))
    p.add_argument("--support", required=True)

    p = sub.add_parser("skeleton", help="order digraph of a simple family")
    p.add_argument("--support", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dot", default=None,
                   help="write DOT here ('-' for raw stdout)")

    p = sub.add_parser("count", help="count supported puzzles")
    p.add_argument("--support", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--engine", choices=("dp", "brute"), default="dp")
    p.add_argument("--corner", default=None, help="bottom=X or top=X")

    p = sub.add_parser("enumerate", help="list supported puzzles")
    p.add_argument("--support", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("seq", help="emit a reference sequence prefix")
    p.add_argument("--name", required=True)
    p.add_argument("--upto", type=int, required=True)
    p.add_argument("--start", type=int, default=0)

    p = sub.add_parser("theorem", help="evaluate a closed-form family count")
    p.add_argument("--id", required=True)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--base", choices=("P", "Q", "p", "q"), default=None,
                   help="for the two-variant ids: P (three-piece) or Q (two-piece)")

    p = sub.add_parser("compose", help="count a glued family by the triple sum")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--converter", choices=("B", "C"), default="B")
    p.add_argument("--verify", action="store_true",
                   help="cross-check against the DP engine")

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--claim", action="append", default=None,
                   help="claim id (repeatable); default all")
    p.add_argument("--nmax", type=int, default=None)

    p = sub.add_parser("identify", help="name a support's count sequence")
    p.add_argument("--support", required=True)
    p.add_argument("--nmax", type=int, default=None)

    p = sub.add_parser("families", help="sweep converter families")
    p.add_argument("--kind", type=int, choices=(1, 2), required=True)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--include-open", action="store_true",
                   help="include the refinement-free family 10, flagged")
    p.add_argument("--x", default=None,
                   help="restrict simple-piece indices, e.g. 4,8,17")

    return parser


_HANDLERS = {
    "pieces": cmd_pieces,
    "reduce": cmd_reduce,
    "transform": cmd_transform,
    "skeleton": cmd_skeleton,
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "seq": cmd_seq,
    "theorem": cmd_theorem,
    "compose": cmd_compose,
    "verify": cmd_verify,
    "identify": cmd_identify,
    "families": cmd_families,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
