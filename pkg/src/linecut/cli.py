"""Command-line interface.

Exit codes: 0 success, 1 negative result, 2 input error, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .drawing import draw_on_lines, falsify_support, verify_drawing
from .errors import InfeasibleScale, InvariantViolation, LinecutError, TargetUnreachable
from .geometry import Halfplane, format_scalar
from .io import (
    DrawingFile,
    LineSetFile,
    ValidationError,
    dump_json,
    read_drawing,
    read_graph,
    read_lines,
    write_text,
)
from .mu import Arrangement, mu_halfplane
from .partition import (
    centerpoint,
    centerpoint_bound,
    ceil_sqrt,
    convex_position_subsets,
    ham_sandwich_cut,
    pencil_arrangement,
    pencil_pair,
    same_type_triple,
)
from .svg import svg_export

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUG = 0, 1, 2, 3


class NegativeResult(Exception):
    """A well-defined 'no' answer (exit code 1)."""


def _line_json(l) -> dict:
    return {"a": format_scalar(l.a), "b": format_scalar(l.b), "c": format_scalar(l.c)}


def _load_lines(path: str, args) -> LineSetFile:
    ls = read_lines(path)
    r = getattr(args, "max_concurrent", None)
    if r is not None:
        worst = Arrangement(ls.lines).max_concurrency()
        if worst > r:
            raise ValidationError(f"{path}: {worst} lines share a common point, more than --max-concurrent {r}")
    return ls


def cmd_mu(args) -> int:
    A = _load_lines(args.lines, args).arrangement()
    try:
        h = Halfplane.parse(args.halfplane)
    except (ValueError, TypeError) as exc:
        raise ValidationError(f"bad --halfplane {args.halfplane!r}: {exc}") from exc
    res = mu_halfplane(A, h)
    print(dump_json({"halfplane": str(h), "mu": res.value, "witness": list(res.witness)}), end="")
    return EXIT_OK


def cmd_cut(args) -> int:
    A1 = _load_lines(args.lines_a, args).arrangement()
    A2 = _load_lines(args.lines_b, args).arrangement()
    res = ham_sandwich_cut(A1, A2)
    (p1, m1), (p2, m2) = res.witnesses
    if args.json:
        out = {
            "cut": _line_json(res.cut),
            "targets": [ceil_sqrt(len(A1)), ceil_sqrt(len(A2))],
            "values": list(res.values),
            "witnesses": [[list(p1.witness), list(m1.witness)], [list(p2.witness), list(m2.witness)]],
        }
        print(dump_json(out), end="")
    else:
        print(f"cut: {res.cut}")
        print(f"A: mu(+) = {p1.value}, mu(-) = {m1.value}, target {ceil_sqrt(len(A1))}")
        print(f"B: mu(+) = {p2.value}, mu(-) = {m2.value}, target {ceil_sqrt(len(A2))}")
    return EXIT_OK


def cmd_centerpoint(args) -> int:
    A = _load_lines(args.lines, args).arrangement()
    cert = centerpoint(A)
    out = {
        "point": [format_scalar(cert.point.x), format_scalar(cert.point.y)],
        "depth": cert.depth,
        "bound": centerpoint_bound(len(A)),
        "halfplane": str(cert.halfplane),
        "witness": list(cert.witness),
    }
    print(dump_json(out), end="")
    return EXIT_OK


def cmd_pencils(args) -> int:
    out = Path(args.out)
    if args.pair:
        A1, A2 = pencil_pair(args.k, seed=args.seed if args.seed is not None else 0)
        second = out.with_name(out.stem + ".b" + (out.suffix or ".json"))
        write_text(str(out), LineSetFile(A1.lines).serialize())
        write_text(str(second), LineSetFile(A2.lines).serialize())
        print(f"wrote {out} and {second}")
    else:
        A = pencil_arrangement(args.k, seed=args.seed)
        write_text(str(out), LineSetFile(A.lines).serialize())
        print(f"wrote {out}")
    return EXIT_OK


def cmd_same_type(args) -> int:
    arrs = [_load_lines(p, args).arrangement() for p in (args.lines_a, args.lines_b, args.lines_c)]
    res = same_type_triple(*arrs, target=args.target)
    print(dump_json({"subsets": [list(s) for s in res.subsets], "rounds": res.rounds}), end="")
    return EXIT_OK


def cmd_convex_pos(args) -> int:
    A = _load_lines(args.lines, args).arrangement()
    groups = convex_position_subsets(A, args.k, args.c, args.m, seed=args.seed)
    print(dump_json({"groups": [list(g) for g in groups]}), end="")
    return EXIT_OK


def cmd_draw(args) -> int:
    g = read_graph(args.graph).graph
    L = _load_lines(args.lines, args).lines
    d = draw_on_lines(g, L)
    write_text(args.out, DrawingFile(d).serialize(include_trace=args.trace))
    if args.svg:
        write_text(args.svg, svg_export(d, lines=L))
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph).graph
    L = _load_lines(args.lines, args).lines
    d = read_drawing(args.drawing).drawing
    rep = verify_drawing(g, L, d)
    for name, ok in rep.checks.items():
        print(f"{name}: {'ok' if ok else 'FAIL'}")
    for v in rep.violations:
        print(f"  {v}")
    if not rep.ok:
        raise NegativeResult("drawing does not verify")
    return EXIT_OK


def _parse_labels(text: str, n: int) -> list[int]:
    try:
        labels = [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise ValidationError(f"--labels must be comma-separated integers: {exc}") from exc
    if sorted(labels) != list(range(1, n + 1)):
        raise ValidationError(f"--labels must be a permutation of 1..{n}")
    return [x - 1 for x in labels]


def cmd_falsify(args) -> int:
    g = read_graph(args.graph).graph
    L = _load_lines(args.lines, args).lines
    if len(L) != g.n:
        raise ValidationError(f"graph has {g.n} vertices but the line set has {len(L)} lines")
    labelling = _parse_labels(args.labels, g.n)
    d = falsify_support(g, labelling, L, budget=args.budget, seed=args.seed)
    if d is None:
        raise NegativeResult(
            f"none found within budget {args.budget}; this does not show that no drawing exists"
        )
    text = DrawingFile(d).serialize()
    if args.out:
        write_text(args.out, text)
        print(f"found; wrote {args.out}")
    else:
        print(text, end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-concurrent",
        type=int,
        metavar="R",
        help="reject line sets with more than R lines through a common point",
    )
    p = argparse.ArgumentParser(prog="linecut", description="Cuts, centerpoints and drawings on line arrangements.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mu", parents=[common], help="capacity of a halfplane")
    s.add_argument("--lines", required=True)
    s.add_argument("--halfplane", required=True, help='"a,b,c,<" or "a,b,c,<=" for a*x+b*y<c')
    s.set_defaults(func=cmd_mu)

    s = sub.add_parser("cut", parents=[common], help="ham-sandwich cut of two arrangements")
    s.add_argument("--lines-a", required=True)
    s.add_argument("--lines-b", required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_cut)

    s = sub.add_parser("centerpoint", parents=[common], help="point of guaranteed depth")
    s.add_argument("--lines", required=True)
    s.set_defaults(func=cmd_centerpoint)

    s = sub.add_parser("pencils", help="write the pencil construction")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--pair", action="store_true")
    s.add_argument("--seed", type=int)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_pencils)

    s = sub.add_parser("same-type", parents=[common], help="well-separated subsets of three arrangements")
    s.add_argument("--lines-a", required=True)
    s.add_argument("--lines-b", required=True)
    s.add_argument("--lines-c", required=True)
    s.add_argument("--target", type=int, required=True)
    s.set_defaults(func=cmd_same_type)

    s = sub.add_parser("convex-pos", parents=[common], help="groups whose transversals are in convex position")
    s.add_argument("--lines", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_convex_pos)

    s = sub.add_parser("draw", parents=[common], help="draw a triangulation on a line set")
    s.add_argument("--graph", required=True)
    s.add_argument("--lines", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--svg")
    s.add_argument("--trace", action="store_true", help="include the placement trace in the output")
    s.set_defaults(func=cmd_draw)

    s = sub.add_parser("verify", parents=[common], help="check a drawing")
    s.add_argument("--graph", required=True)
    s.add_argument("--lines", required=True)
    s.add_argument("--drawing", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("falsify", parents=[common], help="search for a drawing with a fixed labelling")
    s.add_argument("--graph", required=True)
    s.add_argument("--labels", required=True, help="1-based line label of each vertex, comma separated")
    s.add_argument("--lines", required=True)
    s.add_argument("--budget", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_falsify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_BUG
    except (NegativeResult, TargetUnreachable, InfeasibleScale) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NEGATIVE
    except (LinecutError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
