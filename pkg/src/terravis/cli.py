"""Command-line entry point.

Exit codes: 0 success, 1 negative answer (violations, infeasible, failed
check), 2 malformed input, 3 non-monotone terrain, 4 non-persistent graph,
5 reconstructed graph mismatch.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import counterexamples as cx
from .constraints import NotPersistent, XPropertyBroken
from .graph import GraphError, format_graph, is_persistent, parse_graph
from .numerics import RationalParseError, format_vector, parse_rational
from .reconstruction import NoTerrain, VGMismatch, reconstruct
from .render import RenderSpec, render_svg
from .terrain import (
    MonotonicityViolation,
    TerrainParseError,
    format_terrain,
    parse_terrain,
    parse_xvector,
    visibility_graph,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_PARSE, EXIT_MONOTONE, EXIT_NOT_PERSISTENT, EXIT_MISMATCH = range(6)


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(EXIT_PARSE, str(exc)) from exc


def _load_terrain(path):
    try:
        return parse_terrain(_read(path))
    except MonotonicityViolation as exc:
        raise _Fail(EXIT_MONOTONE, str(exc)) from exc
    except (TerrainParseError, RationalParseError) as exc:
        raise _Fail(EXIT_PARSE, str(exc)) from exc


def _load_graph(path):
    try:
        return parse_graph(_read(path))
    except GraphError as exc:
        raise _Fail(EXIT_PARSE, str(exc)) from exc


def cmd_vg(args, out):
    T = _load_terrain(args.terrain)
    out.write(format_graph(visibility_graph(T), include_path=True))
    return EXIT_OK


def cmd_persistence(args, out):
    G = _load_graph(args.graph)
    report = is_persistent(G)
    out.write("\n".join(report.lines()) + "\n")
    return EXIT_OK if report.persistent else EXIT_NEGATIVE


def cmd_reconstruct(args, out):
    G = _load_graph(args.graph)
    try:
        X = parse_xvector(_read(args.xfile))
        eps = parse_rational(args.epsilon)
    except MonotonicityViolation as exc:
        raise _Fail(EXIT_MONOTONE, str(exc)) from exc
    except (TerrainParseError, RationalParseError) as exc:
        raise _Fail(EXIT_PARSE, str(exc)) from exc
    if len(X) != G.n:
        raise _Fail(EXIT_PARSE, f"graph has {G.n} vertices but {len(X)} x-coordinates were given")
    if eps <= 0:
        raise _Fail(EXIT_PARSE, "epsilon must be positive")
    try:
        result = reconstruct(G, X, eps, prune=args.prune)
    except (NotPersistent, XPropertyBroken) as exc:
        raise _Fail(EXIT_NOT_PERSISTENT, str(exc)) from exc
    except VGMismatch as exc:
        raise _Fail(EXIT_MISMATCH, str(exc)) from exc
    if args.system_out:
        with open(args.system_out, "w", encoding="utf-8") as fh:
            fh.write(result.system.to_text())
    if isinstance(result, NoTerrain):
        out.write("INFEASIBLE\n" + format_vector(result.certificate) + "\n")
        return EXIT_NEGATIVE
    out.write(format_terrain(result.terrain))
    return EXIT_OK


def cmd_gen(args, out):
    G = cx.gen_gprime() if args.which == "gprime" else cx.gen_gstar()
    out.write(format_graph(G))
    return EXIT_OK


def _default_seed() -> int:
    raw = os.environ.get("TERRAVIS_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError as exc:
        raise _Fail(EXIT_PARSE, f"TERRAVIS_SEED must be an integer, got {raw!r}") from exc


def cmd_verify_theorem(args, out):
    seed = args.seed if args.seed is not None else _default_seed()
    if args.samples < 1:
        raise _Fail(EXIT_PARSE, "--samples must be at least 1")
    try:
        report = cx.verify_theorem1(args.samples, seed)
    except (cx.TheoremCheckFailed, cx.NoViolation) as exc:
        out.write(f"FAIL: {exc}\n")
        return EXIT_NEGATIVE
    out.write("\n".join(report.lines()) + "\n")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_render(args, out):
    T = _load_terrain(args.terrain)
    highlight = frozenset()
    if args.highlight:
        try:
            highlight = frozenset(int(v) for v in args.highlight.split(",") if v.strip())
        except ValueError as exc:
            raise _Fail(EXIT_PARSE, f"bad --highlight list: {args.highlight!r}") from exc
    try:
        spec = RenderSpec(args.width, args.height, args.margin, not args.no_edges, highlight)
    except ValueError as exc:
        raise _Fail(EXIT_PARSE, str(exc)) from exc
    out.write(render_svg(T, spec))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="terravis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vg", help="visibility graph of a terrain file")
    p.add_argument("terrain")
    p.set_defaults(func=cmd_vg)

    p = sub.add_parser("persistence", help="check the X- and Bar-properties")
    p.add_argument("graph")
    p.set_defaults(func=cmd_persistence)

    p = sub.add_parser("reconstruct", help="terrain for a graph over given x-coordinates")
    p.add_argument("graph")
    p.add_argument("xfile")
    p.add_argument("--epsilon", default="1")
    p.add_argument("--prune", action="store_true")
    p.add_argument("--system-out", metavar="FILE", help="also write the constraint system")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("gen", help="emit the G' or G* graph")
    p.add_argument("which", choices=["gprime", "gstar"])
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify-theorem", help="sample x-vectors and certify G* has no terrain")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("render", help="SVG drawing of a terrain")
    p.add_argument("terrain")
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=400)
    p.add_argument("--margin", type=int, default=40)
    p.add_argument("--no-edges", action="store_true", help="omit visibility chords")
    p.add_argument("--highlight", default="", help="comma-separated vertex indices")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except _Fail as exc:
        err.write(f"terravis: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
