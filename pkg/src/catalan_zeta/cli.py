"""Command line interface.

Exit status: 0 on success, 1 when a verification finds counterexamples,
2 for malformed arguments or input encodings.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from . import dyck_maps, tree_maps
from .core import (
    DyckPath,
    EncodingError,
    NotCanonicalError,
    NotUnitIntervalError,
    PlaneTree,
    Poset,
    area_vector,
    canonical_form,
)
from .verify import LAWS, default_jobs, enumerate_dyck, enumerate_posets, enumerate_trees, verify_upto

KINDS = ("dyck", "tree", "poset")

# (from, to, via) -> map
CONVERSIONS: dict[tuple[str, str, str], Callable] = {
    ("poset", "dyck", "phi"): dyck_maps.phi,
    ("dyck", "poset", "phi"): dyck_maps.phi_inverse,
    ("dyck", "poset", "psi"): dyck_maps.psi,
    ("poset", "dyck", "psi"): dyck_maps.psi_inverse,
    ("tree", "dyck", "steep"): tree_maps.xi_steep,
    ("dyck", "tree", "steep"): tree_maps.lambda_steep,
    ("tree", "dyck", "bounce"): tree_maps.xi_bounce,
    ("dyck", "tree", "bounce"): tree_maps.lambda_bounce,
    ("tree", "poset", "poset"): tree_maps.xi_poset,
    ("poset", "tree", "poset"): tree_maps.lambda_poset,
}


def parse_object(kind: str, text: str):
    if kind == "dyck":
        return DyckPath.parse(text)
    if kind == "tree":
        return PlaneTree.parse(text)
    return canonical_form(Poset.from_json(text))


def guess_kind(text: str) -> str:
    text = text.strip()
    if text.startswith("("):
        return "tree"
    if text.startswith("{"):
        return "poset"
    return "dyck"


def render_path(path: DyckPath) -> str:
    """Rows top to bottom; ``|`` is the north step of the row, ``#`` the area,
    ``/`` the diagonal cell and ``.`` the cells under the diagonal."""
    n = path.size
    if n == 0:
        return "(empty path)"
    area = area_vector(path)
    lines = []
    for row in range(n, 0, -1):
        east_before = row - 1 - area[row - 1]
        cells = []
        for x in range(n):
            edge = "|" if x == east_before else " "
            if x < east_before:
                fill = " "
            elif x < row - 1:
                fill = "#"
            elif x == row - 1:
                fill = "/"
            else:
                fill = "."
            cells.append(edge + fill)
        lines.append("".join(cells).rstrip())
    return "\n".join(lines)


def render_tree(tree: PlaneTree) -> str:
    lines = ["o"]

    def walk(node, depth):
        for child in node.children:
            lines.append("  " * depth + "o")
            walk(child, depth + 1)

    walk(tree, 1)
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalan-zeta",
        description="Bijections between unit interval posets, plane trees and Dyck paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list every object of a size, one per line")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("convert", help="apply a bijection or its inverse")
    p.add_argument("--from", dest="src", choices=KINDS, required=True)
    p.add_argument("--to", dest="dst", choices=KINDS, required=True)
    p.add_argument("--via", choices=("phi", "psi", "steep", "bounce", "poset"), required=True)
    p.add_argument("input")

    p = sub.add_parser("zeta", help="apply the zeta map to a Dyck path")
    p.add_argument("input")

    p = sub.add_parser("verify", help="exhaustively check the laws")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--law", choices=list(LAWS))
    p.add_argument(
        "--jobs", type=int, default=None, help="worker processes (default: $CATALAN_ZETA_JOBS or 1)"
    )

    p = sub.add_parser("render", help="ASCII picture of a Dyck path or plane tree")
    p.add_argument("input")
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def emit(text):
        out.write(f"{text}\n")

    try:
        if args.command == "enumerate":
            if args.n < 0:
                raise EncodingError("--n must be non-negative")
            gen = {"dyck": enumerate_dyck, "tree": enumerate_trees, "poset": enumerate_posets}
            for obj in gen[args.kind](args.n):
                emit(obj)
        elif args.command == "convert":
            key = (args.src, args.dst, args.via)
            if key not in CONVERSIONS:
                err.write(f"error: no map from {args.src} to {args.dst} via {args.via}\n")
                return 2
            emit(CONVERSIONS[key](parse_object(args.src, args.input)))
        elif args.command == "zeta":
            emit(dyck_maps.zeta(DyckPath.parse(args.input)))
        elif args.command == "verify":
            if args.n_max < 0:
                raise EncodingError("--n-max must be non-negative")
            jobs = args.jobs if args.jobs is not None else default_jobs()
            laws = [args.law] if args.law else list(LAWS)
            reports = [verify_upto(law, args.n_max, jobs=max(1, jobs)) for law in laws]
            for r in reports:
                emit(r.to_json())
            return 0 if all(r.ok for r in reports) else 1
        elif args.command == "render":
            kind = guess_kind(args.input)
            if kind == "tree":
                emit(render_tree(PlaneTree.parse(args.input)))
            elif kind == "dyck":
                emit(render_path(DyckPath.parse(args.input)))
            else:
                err.write("error: render takes a Dyck path or a plane tree\n")
                return 2
    except (EncodingError, NotUnitIntervalError, NotCanonicalError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
