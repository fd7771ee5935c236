#!/usr/bin/env python3
"""
polyrep: polynomial representations of simple polytopes.

This script provides a command-line interface for:
1. Validating H-representations and listing their face lattices
2. Computing the metric data of the construction (epsilon values, exponent)
3. Constructing, evaluating and verifying P-representations
4. Prism and pyramid lifts, projective images and CSV grid scans
"""
import argparse
import logging
import sys
from typing import List, Optional

from polyrep import __version__
from polyrep.cli import construct, describe, geometry, verify
from polyrep.cli.common import common_options, run_command
from polyrep.utils.logger import setup_logger

# Set up logger
logger = setup_logger("polyrep", logging.INFO)


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(
        description="Construct and verify polynomial representations of simple polytopes."
    )
    parser.add_argument("--version", action="version", version=f"polyrep {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    common = common_options()
    describe.register(subparsers, common)
    construct.register(subparsers, common)
    verify.register(subparsers, common)
    geometry.register(subparsers, common)
    return parser.parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the application."""
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    logger.debug(f"Running command: {args.command}")
    return run_command(args.handler, args)


if __name__ == "__main__":
    sys.exit(main())
