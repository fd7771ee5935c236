"""Subcommands that inspect an H-representation: validate, lattice, metrics, eval, mu."""
import argparse
import json
import logging

from polyrep.cli.common import (
    format_lines,
    parse_point,
    parse_rational,
    read_or_construct_prep,
    read_polytope,
    write_output,
)
from polyrep.construction.weights import mu_count, weight_sets
from polyrep.exact.rational import format_rat, format_vec
from polyrep.lattice.faces import build_face_lattice
from polyrep.lattice.hpolytope import enumerate_vertices, require_simple_polytope, validate_hrep
from polyrep.metrics.bundle import compute_metrics, exponent_float_bound
from polyrep.metrics.wedge import INFINITY
from polyrep.utils.errors import PolyrepError, ValidationError
from polyrep.verify.evaluate import member_hrep, member_prep

logger = logging.getLogger(__name__)


def _labels(indices):
    return [i + 1 for i in indices]


def cmd_validate(args: argparse.Namespace) -> int:
    H = read_polytope(args.file)
    vertices = enumerate_vertices(H)
    report = validate_hrep(H, vertices)
    if args.format == "json":
        data = {
            "dimension": H.dim,
            "rows": H.m,
            "vertices": len(vertices),
            "valid": report.valid,
            "bounded": report.bounded,
            "simple": report.simple,
            "violations": [
                {
                    "kind": v.kind.value,
                    "message": v.message,
                    "row": v.index + 1 if v.index is not None else None,
                    "witness": [format_rat(c) for c in v.witness] if v.witness is not None else None,
                    "active": _labels(v.active) if v.active is not None else None,
                }
                for v in report.violations
            ],
        }
        write_output(json.dumps(data, indent=2) + "\n", args.output)
    else:
        lines = [
            f"dimension: {H.dim}",
            f"rows: {H.m}",
            f"vertices: {len(vertices)}",
            f"valid: {'yes' if report.valid else 'no'}",
            f"simple: {'yes' if report.simple else 'no'}",
        ]
        lines.extend(f"violation {v.kind.value}: {v.message}" for v in report.violations)
        write_output(format_lines(lines), args.output)
    if not report.valid:
        logger.error(f"Validation failed: {report.summary()}")
        return ValidationError.exit_code
    return 0


def cmd_lattice(args: argparse.Namespace) -> int:
    H = read_polytope(args.file)
    lattice = build_face_lattice(H, require_simple_polytope(H))
    if args.format == "json":
        data = {
            "dimension": H.dim,
            "f_vector": list(lattice.f_vector),
            "vertices": [[format_rat(c) for c in v.coords] for v in lattice.vertices],
            "faces": {
                str(k): [
                    {"facets": _labels(face.facet_indices), "vertices": _labels(face.vertex_ids)}
                    for face in lattice.faces(k)
                ]
                for k in range(H.dim)
            },
        }
        write_output(json.dumps(data, indent=2) + "\n", args.output)
        return 0
    lines = [f"f-vector: {' '.join(str(f) for f in lattice.f_vector)}"]
    for n, v in enumerate(lattice.vertices, start=1):
        lines.append(f"vertex {n}: {format_vec(v.coords)} facets {_labels(v.facet_set)}")
    for k in range(H.dim):
        for face in lattice.faces(k):
            lines.append(f"{k}-face facets {_labels(face.facet_indices)} vertices {_labels(face.vertex_ids)}")
    write_output(format_lines(lines), args.output)
    return 0


def _distance_text(value) -> str:
    return "inf" if value == INFINITY else format_rat(value)


def cmd_metrics(args: argparse.Namespace) -> int:
    H = read_polytope(args.file)
    lattice = build_face_lattice(H, require_simple_polytope(H))
    weights = {k: weight_sets(H.dim, k) for k in range(H.dim)}
    metrics = compute_metrics(
        H, lattice, weights, rho_mode=args.rho, eps_bar=args.eps_bar, diam_upper=args.diam_upper
    )
    float_bound = exponent_float_bound(H.m, metrics.eps_bar, metrics.diam_upper, metrics.rho)
    values = {
        "shift": [format_rat(c) for c in metrics.shift],
        "diam_sq": format_rat(metrics.diam_sq),
        "diam_upper": format_rat(metrics.diam_upper),
        "r_min": format_rat(metrics.r_min),
        "eps_k_sq": {str(k): _distance_text(v) for k, v in metrics.eps_k_sq.items()},
        "eps_bar": format_rat(metrics.eps_bar),
        "rho_mode": metrics.rho_mode,
        "rho": format_rat(metrics.rho),
        "exponent_p": metrics.exponent_p,
        "exponent_float_bound": float_bound,
    }
    if args.format == "json":
        write_output(json.dumps(values, indent=2) + "\n", args.output)
        return 0
    lines = [
        f"shift: {format_vec(metrics.shift)}",
        f"diam^2: {values['diam_sq']}",
        f"diam upper bound: {values['diam_upper']}",
        f"r_min: {values['r_min']}",
    ]
    lines.extend(f"eps_{k}^2: {v}" for k, v in values["eps_k_sq"].items())
    lines.extend([
        f"eps_bar: {values['eps_bar']}",
        f"rho: {values['rho']} ({metrics.rho_mode})",
        f"p: {metrics.exponent_p} (float bound {float_bound:.3f})",
    ])
    write_output(format_lines(lines), args.output)
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    H = read_polytope(args.file)
    if len(args.point) != H.dim:
        raise PolyrepError(f"point has {len(args.point)} coordinates, expected {H.dim}")
    prep = read_or_construct_prep(H, args.prep, args)
    hrep_verdict = member_hrep(H, args.point)
    prep_verdict = member_prep(prep, args.point, mode="guarded")
    if args.format == "json":
        data = {
            "point": [format_rat(c) for c in args.point],
            "member_hrep": hrep_verdict.inside,
            "member_prep": prep_verdict.inside,
            "violated_hrep": hrep_verdict.violated_ids,
            "violated_prep": prep_verdict.violated_ids,
        }
        write_output(json.dumps(data, indent=2) + "\n", args.output)
        return 0
    lines = [
        f"point: {format_vec(args.point)}",
        f"member_hrep: {'inside' if hrep_verdict.inside else 'outside'}",
        f"member_prep: {'inside' if prep_verdict.inside else 'outside'}",
    ]
    lines.extend(f"  violated {v.id}" + (f" = {format_rat(v.value)}" if v.value is not None else "")
                 for v in hrep_verdict.violated + prep_verdict.violated)
    write_output(format_lines(lines), args.output)
    return 0


def cmd_mu(args: argparse.Namespace) -> int:
    mu = mu_count(args.d)
    if args.format == "json":
        write_output(json.dumps({"d": args.d, "mu": mu}) + "\n", args.output)
    else:
        write_output(f"{mu}\n", args.output)
    return 0


def register(subparsers, common: argparse.ArgumentParser):
    parser = subparsers.add_parser("validate", parents=[common], help="Validate an H-representation")
    parser.add_argument("file", help="H-representation file")
    parser.set_defaults(handler=cmd_validate)

    parser = subparsers.add_parser("lattice", parents=[common], help="Print the f-vector and all faces")
    parser.add_argument("file", help="H-representation file")
    parser.set_defaults(handler=cmd_lattice)

    parser = subparsers.add_parser("metrics", parents=[common], help="Print epsilon values, diameter and exponent")
    parser.add_argument("file", help="H-representation file")
    parser.add_argument("--eps-bar", type=parse_rational, help="Use this epsilon if admissible")
    parser.set_defaults(handler=cmd_metrics)

    parser = subparsers.add_parser("eval", parents=[common], help="Evaluate both membership oracles at one point")
    parser.add_argument("file", help="H-representation file")
    parser.add_argument("--point", type=parse_point, required=True,
                        help="Comma-separated rational coordinates, e.g. --point=3/2,0")
    parser.add_argument("--prep", help="JSON P-representation to use instead of constructing one")
    parser.add_argument("--eps-bar", type=parse_rational, help="Use this epsilon if admissible")
    parser.set_defaults(handler=cmd_eval)

    parser = subparsers.add_parser("mu", parents=[common], help="Number of polynomials for dimension d")
    parser.add_argument("d", type=int, help="Dimension (>= 2)")
    parser.set_defaults(handler=cmd_mu)
