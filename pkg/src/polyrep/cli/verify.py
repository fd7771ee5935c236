#!/usr/bin/env python3
"""
CLI tool for checking a P-representation against its H-representation.

Runs the randomized equivalence test and the structural checks and exits
with code 3 when either finds a problem.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from polyrep.cli.common import (
    common_options,
    format_lines,
    parse_rational,
    read_or_construct_prep,
    read_polytope,
    run_command,
    samples_of,
    seed_of,
    write_output,
)
from polyrep.lattice.faces import build_face_lattice
from polyrep.lattice.hpolytope import require_simple_polytope
from polyrep.utils.errors import EquivalenceError
from polyrep.utils.logger import setup_logger
from polyrep.verify.equivalence import EquivalenceConfig, equivalence_test
from polyrep.verify.structural import structural_checks

logger = logging.getLogger(__name__)


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("file", help="H-representation file")
    parser.add_argument("--prep", help="JSON P-representation to check instead of constructing one")
    parser.add_argument("--eps-bar", type=parse_rational, help="Use this epsilon if admissible")
    parser.add_argument(
        "--skip-structural",
        action="store_true",
        help="Skip the structural checks"
    )
    parser.set_defaults(handler=cmd_verify)


def cmd_verify(args: argparse.Namespace) -> int:
    H = read_polytope(args.file)
    lattice = build_face_lattice(H, require_simple_polytope(H))
    prep = read_or_construct_prep(H, args.prep, args)

    seed = seed_of(args)
    report = equivalence_test(H, prep, EquivalenceConfig(seed=seed, samples=samples_of(args)), lattice)
    structural = None if args.skip_structural else structural_checks(H, lattice, prep, seed=seed)

    if args.format == "json":
        data = {"equivalence": report.to_dict(), "passed": report.passed}
        if structural is not None:
            data["structural"] = structural.to_dict()
            data["passed"] = report.passed and structural.passed
        write_output(json.dumps(data, indent=2) + "\n", args.output)
    else:
        lines = [f"equivalence: {report.summary()}"]
        lines.extend(f"  {d.describe()}" for d in report.disagreements)
        if structural is not None:
            lines.append(f"structural: {structural.summary()}")
            for name in structural.failed_checks():
                lines.extend(f"  {name}: {message}" for message in structural.failures[name])
        write_output(format_lines(lines), args.output)

    if not report.passed or (structural is not None and not structural.passed):
        logger.error("Verification failed")
        return EquivalenceError.exit_code
    logger.info("Verification passed")
    return 0


def register(subparsers, common: argparse.ArgumentParser):
    parser = subparsers.add_parser(
        "verify", parents=[common], help="Equivalence test and structural checks"
    )
    add_arguments(parser)


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(
        description="Verify a P-representation against its H-representation.",
        parents=[common_options()],
    )
    add_arguments(parser)
    return parser.parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the application."""
    setup_logger("polyrep", logging.INFO)
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    return run_command(args.handler, args)


if __name__ == "__main__":
    sys.exit(main())
