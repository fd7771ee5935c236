"""Subcommands for lifts, projective images and grid scans."""
import argparse
import json
import logging
from typing import List

from polyrep.cli.common import (
    format_lines,
    parse_point,
    parse_rational,
    read_or_construct_prep,
    read_polytope,
    write_output,
)
from polyrep.construction.closed_forms import KINDS, closed_form_hrep, closed_form_rep, prism_lift, pyramid_lift
from polyrep.construction.projective import construct_polyhedron_prep, projectivize_pointed
from polyrep.construction.sparse import SparsePoly
from polyrep.exact.rational import format_rat, format_vec
from polyrep.formats.grid import grid_eval_csv
from polyrep.formats.hrep import emit_hrep
from polyrep.lattice.hpolytope import enumerate_vertices
from polyrep.utils.errors import PolyrepError

logger = logging.getLogger(__name__)


def _poly_dict(p: SparsePoly) -> dict:
    return {
        "text": p.render(),
        "terms": [{"exponent": list(e), "coef": format_rat(c)} for e, c in sorted(p.terms.items())],
    }


def _write_polys(args: argparse.Namespace, polys: List[SparsePoly], extra: dict):
    if args.format == "json":
        data = dict(extra)
        data["polynomials"] = [_poly_dict(p) for p in polys]
        write_output(json.dumps(data, indent=2) + "\n", args.output)
        return
    lines = [f"# {key}: {value}" for key, value in extra.items()]
    lines.extend(f"q{i + 1}: {p.render()} >= 0" for i, p in enumerate(polys))
    write_output(format_lines(lines), args.output)


def cmd_lift(args: argparse.Namespace) -> int:
    if args.base_dim < 1:
        raise PolyrepError("base dimension must be at least 1")
    base = closed_form_rep(args.base, args.base_dim)
    extra = {"lift": args.kind, "base": f"{args.base} in dimension {args.base_dim}"}
    if args.kind == "prism":
        polys = prism_lift(base)
    else:
        vertices = [v.coords for v in enumerate_vertices(closed_form_hrep(args.base, args.base_dim))]
        lift = pyramid_lift(base, vertices)
        polys = lift.in_user_frame() if args.user_frame else list(lift.polynomials)
        extra["center"] = format_vec(lift.center)
        extra["scale"] = format_rat(lift.scale)
        extra["frame"] = "user" if args.user_frame else "normalized"
    logger.info(f"{args.kind} lift produced {len(polys)} polynomials")
    _write_polys(args, polys, extra)
    return 0


def cmd_projectivize(args: argparse.Namespace) -> int:
    H = read_polytope(args.file)
    if args.pullback:
        result = construct_polyhedron_prep(
            H, args.vertex, rho_mode=args.rho, eps_bar=args.eps_bar, diam_upper=args.diam_upper
        )
        image = result.image
        lines = [
            f"# c = {format_vec(image.c)}, vertex = {format_vec(image.vertex)}",
            "# membership: final >= 0, products >= 0, image epsilon <= 1 at f(x)",
            f"final: {result.final.render()} >= 0",
        ]
        lines.extend(f"{p.id}: {p.render()} >= 0" for p in result.products)
        lines.append(f"p_eps(f(x)): {result.image_prep.epsilon.render()} <= 1")
        write_output(format_lines(lines), args.output)
        return 0

    image = projectivize_pointed(H, args.vertex)
    if args.format == "json":
        data = {
            "c": [format_rat(x) for x in image.c],
            "vertex": [format_rat(x) for x in image.vertex],
            "c_row_kept": image.c_row_kept,
            "image": emit_hrep(image.image),
        }
        write_output(json.dumps(data, indent=2) + "\n", args.output)
    else:
        comment = f"projective image, c = {format_vec(image.c)}, vertex = {format_vec(image.vertex)}"
        write_output(emit_hrep(image.image, comment), args.output)
    return 0


def cmd_grid(args: argparse.Namespace) -> int:
    H = read_polytope(args.file)
    prep = read_or_construct_prep(H, args.prep, args)
    write_output(grid_eval_csv(H, prep, args.lo, args.hi, args.step), args.output)
    return 0


def register(subparsers, common: argparse.ArgumentParser):
    parser = subparsers.add_parser("lift", parents=[common], help="Prism or pyramid over a cube or simplex")
    parser.add_argument("kind", choices=("prism", "pyramid"))
    parser.add_argument("--base", choices=KINDS, default="cube", help="Closed-form base (default: cube)")
    parser.add_argument("--base-dim", type=int, default=2, help="Dimension of the base (default: 2)")
    parser.add_argument("--user-frame", action="store_true",
                        help="Express pyramid polynomials in the base's original coordinates")
    parser.set_defaults(handler=cmd_lift)

    parser = subparsers.add_parser("projectivize", parents=[common],
                                   help="Projective image of an unbounded pointed polyhedron")
    parser.add_argument("file", help="H-representation file")
    parser.add_argument("--vertex", type=int, default=0, help="Index of the vertex sent to the origin")
    parser.add_argument("--pullback", action="store_true",
                        help="Construct the image's P-representation and pull it back")
    parser.add_argument("--eps-bar", type=parse_rational, help="Use this epsilon if admissible")
    parser.set_defaults(handler=cmd_projectivize)

    parser = subparsers.add_parser("grid", parents=[common], help="CSV scan of both oracles (d = 2 or 3)")
    parser.add_argument("file", help="H-representation file")
    parser.add_argument("--lo", type=parse_point, required=True, help="Lower corner, e.g. --lo=-2,-2")
    parser.add_argument("--hi", type=parse_point, required=True, help="Upper corner, e.g. --hi=2,2")
    parser.add_argument("--step", type=parse_rational, required=True, help="Grid step, e.g. 1/10")
    parser.add_argument("--prep", help="JSON P-representation to use instead of constructing one")
    parser.add_argument("--eps-bar", type=parse_rational, help="Use this epsilon if admissible")
    parser.set_defaults(handler=cmd_grid)
