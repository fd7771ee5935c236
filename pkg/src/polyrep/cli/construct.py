#!/usr/bin/env python3
"""
CLI tool for constructing the polynomial representation of a simple polytope.

Reads an H-representation, validates it, builds every face product and the
approximating polynomial, and writes the P-representation document.
"""
import argparse
import logging
import sys
from typing import List, Optional

from polyrep.cli.common import (
    common_options,
    parse_rational,
    read_polytope,
    run_command,
    write_output,
)
from polyrep.construction.prep import construct_prep
from polyrep.formats.prep_document import emit_prep
from polyrep.utils.logger import setup_logger

logger = logging.getLogger(__name__)


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("file", help="H-representation file")
    parser.add_argument(
        "--eps-bar",
        type=parse_rational,
        help="Use this epsilon instead of the computed one (must be admissible)"
    )
    parser.set_defaults(handler=cmd_construct)


def cmd_construct(args: argparse.Namespace) -> int:
    H = read_polytope(args.file)
    logger.info(f"Constructing P-representation for {args.file} ({H.dim}-dimensional, {H.m} rows)")
    prep = construct_prep(H, rho_mode=args.rho, eps_bar=args.eps_bar, diam_upper=args.diam_upper)
    write_output(emit_prep(prep, args.format or "json"), args.output)

    logger.info("=" * 50)
    logger.info("CONSTRUCTION COMPLETE")
    logger.info("=" * 50)
    logger.info(f"Polynomials: {', '.join(prep.polynomial_ids())}")
    logger.info(f"eps_bar = {prep.metadata.eps_bar}, p = {prep.metadata.exponent_p}")
    return 0


def register(subparsers, common: argparse.ArgumentParser):
    parser = subparsers.add_parser(
        "construct", parents=[common], help="Construct and write the P-representation"
    )
    add_arguments(parser)


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(
        description="Construct the polynomial representation of a simple polytope.",
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
