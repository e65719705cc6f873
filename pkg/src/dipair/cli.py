"""Command line front-end.

Input complexes come from a JSON file or ``builtin:NAME`` (with
``builtin:boundary_cube(3)`` style parameters).  Exit status: 0 on success,
1 on domain errors (directed loops, budget, unique-path violations), 2 on
malformed input.  All output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analytic, fundcat, graphcomp, ordercomp, reach
from .category import category_json_str, category_text
from .errors import DipairError, InputError
from .precubical import (BUILTIN_NAMES, EuclideanComplex, GridPoint,
                         PreCubicalSet, grid_point, load_pcs, parse_builtin,
                         parse_point)


def _load_input(spec: str) -> PreCubicalSet:
    if spec.startswith("builtin:"):
        return parse_builtin(spec[len("builtin:"):])
    return load_pcs(spec)


def _load_euclidean(path: str) -> EuclideanComplex:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return EuclideanComplex.from_json(data)


def _rescale(pcs, point: GridPoint, denom: int) -> GridPoint:
    if point.carrier.dim == 0 or point.denom == denom:
        return point
    coords = []
    for c in point.coords:
        num = c * denom
        if num % point.denom:
            raise InputError(
                f"coordinate {c}/{point.denom} has no exact form over denominator {denom}"
            )
        coords.append(num // point.denom)
    return grid_point(pcs, point.carrier, denom, coords)


def _point_pair(pcs, text: str):
    parts = text.split(";")
    if len(parts) != 2:
        raise InputError(f"expected two points separated by ';', got {text!r}")
    return parse_point(pcs, parts[0]), parse_point(pcs, parts[1])


def _emit_json(data) -> str:
    return json.dumps(data, sort_keys=True) + "\n"


def _category_output(cat, args) -> str:
    if args.format == "json":
        return category_json_str(cat)
    if args.format == "dot":
        return cat.to_dot()
    return category_text(cat, verbose=args.verbose)


def _cmd_validate(args) -> str:
    pcs = _load_input(args.input)
    report = pcs.validate()
    if args.format == "json":
        return _emit_json({"ok": report.ok, "violations": report.violations})
    return str(report) + "\n"


def _cmd_builtin(args) -> str:
    pcs = _load_input(args.input)
    return _emit_json(pcs.to_json())


def _cmd_reach(args) -> str:
    pcs = _load_input(args.input)
    u = pcs.named(args.src)
    v = pcs.named(args.dst)
    hit = reach.reachable(pcs, u, v)
    if args.format == "json":
        return _emit_json({"reachable": hit})
    return ("true" if hit else "false") + "\n"


def _cmd_branch(args) -> str:
    pcs = _load_input(args.input)
    cells = reach.branch_cubes(pcs, args.flavor)
    names = [pcs.cell_name(c) for c in cells]
    if args.format == "json":
        return _emit_json(names)
    return "\n".join(names) + ("\n" if names else "")


def _cmd_eregion(args) -> str:
    pcs = _load_input(args.input)
    x = pcs.named(args.vertex)
    region = sorted(reach.e_region(pcs, x, args.flavor))
    names = [pcs.cell_name(c) for c in region]
    if args.format == "json":
        return _emit_json(names)
    return "\n".join(names) + ("\n" if names else "")


def _cmd_pi0(args) -> str:
    pcs = _load_input(args.input)
    p = parse_point(pcs, args.src)
    q = parse_point(pcs, args.dst)
    if args.denom:
        p, q = _rescale(pcs, p, args.denom), _rescale(pcs, q, args.denom)
    result = fundcat.trace_pi0(pcs, p, q, args.budget)
    if args.format == "json":
        return _emit_json({
            "count": result.count,
            "classes": [list(c.canonical.arcs) for c in result.classes],
            "sizes": [c.size for c in result.classes],
        })
    return f"{result.count}\n"


def _cmd_homset(args) -> str:
    pcs = _load_input(args.input)
    src = _point_pair(pcs, args.src)
    dst = _point_pair(pcs, args.dst)
    if args.denom:
        src = tuple(_rescale(pcs, p, args.denom) for p in src)
        dst = tuple(_rescale(pcs, p, args.denom) for p in dst)
    morphisms = fundcat.homset(pcs, src, dst, args.budget)
    if args.format == "json":
        return _emit_json([
            {"back": list(m.back.canonical.arcs), "fwd": list(m.fwd.canonical.arcs)}
            for m in morphisms
        ])
    return f"{len(morphisms)}\n"


def _cmd_order_cat(args) -> str:
    pcs = _load_input(args.input)
    return _category_output(ordercomp.order_category(pcs, args.budget), args)


def _cmd_cube_cat(args) -> str:
    ec = _load_euclidean(args.input)
    return _category_output(ordercomp.cube_pair_category(ec, args.budget), args)


def _cmd_graph_cat(args) -> str:
    pcs = _load_input(args.input)
    return _category_output(graphcomp.graph_components(pcs, args.flavor), args)


def _cmd_analytic(args) -> str:
    if args.what == "torus":
        cat = analytic.torus_category(args.n)
        if args.format == "json":
            return _emit_json(cat.to_json())
        lines = [f"objects: {len(cat.objects)}"]
        if args.verbose:
            for d in cat.objects:
                for d2 in cat.objects:
                    lb = cat.lower_bound(d, d2)
                    lines.append(
                        "hom(%s, %s) >= %s" % (
                            "".join(map(str, d)), "".join(map(str, d2)),
                            ",".join(map(str, lb)))
                    )
        return "\n".join(lines) + "\n"
    if args.what == "pn":
        return _category_output(analytic.pn_extension_category(args.n), args)
    if args.what == "trace-type":
        tt = analytic.boundary_trace_type(args.n, args.e, args.f)
        if args.format == "json":
            return _emit_json(tt.to_json())
        if tt.kind == "sphere":
            return f"sphere({tt.dim})\n"
        return tt.kind + "\n"
    if args.what == "interval":
        return _category_output(analytic.interval_category(), args)
    raise InputError(f"unknown analytic subcommand {args.what!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dipair",
        description="Reachability, dihomotopy classes and pair component "
                    "categories of finite pre-cubical sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    default_budget = int(os.environ.get("DIPAIR_BUDGET", fundcat.DEFAULT_BUDGET))

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="JSON file or builtin:NAME; builtins: "
                                         + ", ".join(BUILTIN_NAMES))
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")
        p.add_argument("--budget", type=int, default=default_budget,
                       help="path enumeration budget (env DIPAIR_BUDGET)")
        p.add_argument("--denom", type=int, default=None,
                       help="rescale point coordinates to this denominator")
        p.add_argument("--out", default=None, help="write output to a file")
        p.add_argument("--verbose", action="store_true")

    p = sub.add_parser("validate", help="check the pre-cubical relations")
    add_common(p)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("builtin", help="emit a builtin complex as JSON")
    add_common(p)
    p.set_defaults(fn=_cmd_builtin)

    p = sub.add_parser("reach", help="vertex-to-vertex reachability")
    add_common(p)
    p.add_argument("--src", required=True)
    p.add_argument("--dst", required=True)
    p.set_defaults(fn=_cmd_reach)

    p = sub.add_parser("branch", help="future or past branch cubes")
    add_common(p)
    p.add_argument("--flavor", choices=("future", "past"), default="future")
    p.set_defaults(fn=_cmd_branch)

    p = sub.add_parser("eregion", help="region a flow can move a vertex within")
    add_common(p)
    p.add_argument("--vertex", required=True)
    p.add_argument("--flavor", choices=("future", "past"), default="future")
    p.set_defaults(fn=_cmd_eregion)

    p = sub.add_parser("pi0", help="dihomotopy class count between two points")
    add_common(p)
    p.add_argument("--src", required=True, help='point, e.g. "A@1/3,1/3"')
    p.add_argument("--dst", required=True)
    p.set_defaults(fn=_cmd_pi0)

    p = sub.add_parser("homset", help="extension morphisms between point pairs")
    add_common(p)
    p.add_argument("--src", required=True, help='pair "PT;PT"')
    p.add_argument("--dst", required=True, help='pair "PT;PT"')
    p.set_defaults(fn=_cmd_homset)

    p = sub.add_parser("order-cat", help="order pair component category")
    add_common(p)
    p.set_defaults(fn=_cmd_order_cat)

    p = sub.add_parser("cube-cat", help="cube pair category of a Euclidean complex")
    add_common(p)
    p.set_defaults(fn=_cmd_cube_cat)

    p = sub.add_parser("graph-cat", help="pair component category of a graph")
    add_common(p)
    p.add_argument("--flavor", choices=("future", "past", "total"), default="future")
    p.set_defaults(fn=_cmd_graph_cat)

    p = sub.add_parser("analytic", help="closed-form categories and trace types")
    p.add_argument("what", choices=("torus", "pn", "trace-type", "interval"))
    add_common(p, with_input=False)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--e", default=None, help='cell of the n-box boundary, e.g. "00*"')
    p.add_argument("--f", default=None)
    p.set_defaults(fn=_cmd_analytic)

    return parser


def run(argv=None) -> tuple[int, str]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (2 if exc.code else 0), ""
    try:
        if args.command == "analytic" and args.what == "trace-type":
            if args.e is None or args.f is None:
                raise InputError("trace-type needs --e and --f")
        out = args.fn(args)
    except InputError as exc:
        return 2, f"error: {exc}\n"
    except DipairError as exc:
        return 1, f"error: {exc}\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
        return 0, ""
    return 0, out


def main(argv=None) -> int:
    code, out = run(argv)
    stream = sys.stderr if code else sys.stdout
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
