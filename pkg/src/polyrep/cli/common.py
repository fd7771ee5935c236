"""
Shared plumbing for the polyrep command-line tools.

Every subcommand gets the same options (seed, samples, rho mode, output
format, output path, verbosity, log file), reads its input files through
these helpers and is run through ``run_command``, which maps errors to
exit codes and logs the work summary at the end.
"""
import argparse
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, List, Optional

from polyrep.construction.prep import PRepresentation, construct_prep
from polyrep.exact.rational import RatVec, to_rat
from polyrep.formats.hrep import load_hrep
from polyrep.formats.prep_document import FORMATS, parse_prep
from polyrep.lattice.hpolytope import HPolytope
from polyrep.utils import config
from polyrep.utils.config import validate_config
from polyrep.utils.errors import PolyrepError
from polyrep.utils.logger import add_file_handler, set_level
from polyrep.utils.work_tracker import work_tracker

logger = logging.getLogger(__name__)

PACKAGE_LOGGER = "polyrep"


def common_options() -> argparse.ArgumentParser:
    """Parent parser holding the options shared by every subcommand."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="Seed for sampling (default: POLYREP_SEED or 0)"
    )
    parser.add_argument(
        "--samples",
        type=int,
        default=None,
        help="Number of equivalence samples (default: POLYREP_SAMPLES or 10000)"
    )
    parser.add_argument(
        "--rho",
        choices=config.RHO_MODES,
        default=None,
        help="Ratio used for the exponent: exact (r_min) or dimension (1/(d+1))"
    )
    parser.add_argument(
        "--diam-upper",
        type=parse_rational,
        default=None,
        help="Diameter bound to use instead of the computed one (e.g. 4)"
    )
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default=None,
        help="Output format (default: json for construct, text otherwise)"
    )
    parser.add_argument(
        "-o", "--output",
        help="Write the result to this file instead of stdout"
    )
    parser.add_argument(
        "--verbose", "-v",
        action="store_true",
        help="Enable verbose logging"
    )
    parser.add_argument(
        "--log-file",
        help="Also write the log to this file"
    )
    return parser


def parse_rational(text: str) -> Fraction:
    """argparse type for exact rationals such as ``3/100``."""
    try:
        return to_rat(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def parse_point(text: str) -> RatVec:
    """Comma-separated rationals, e.g. ``3/2,0``."""
    try:
        return tuple(to_rat(token) for token in text.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def read_polytope(path: str) -> HPolytope:
    """
    Load an H-representation file.

    Raises:
        PolyrepError: If the file does not exist.
        ParseError: If the document is malformed.
    """
    if not os.path.exists(path):
        raise PolyrepError(f"Input file not found: {path}")
    return load_hrep(path)


def read_or_construct_prep(H: HPolytope, prep_path: Optional[str], args: argparse.Namespace) -> PRepresentation:
    """Load a JSON P-representation when given, otherwise construct one from H."""
    if prep_path:
        if not os.path.exists(prep_path):
            raise PolyrepError(f"P-representation file not found: {prep_path}")
        prep = parse_prep(Path(prep_path).read_text(encoding="utf-8"))
        if prep.dim != H.dim:
            raise PolyrepError(f"P-representation has dimension {prep.dim}, H-representation {H.dim}")
        logger.info(f"Loaded P-representation from {prep_path}")
        return prep
    return construct_prep(
        H,
        rho_mode=args.rho,
        eps_bar=getattr(args, "eps_bar", None),
        diam_upper=args.diam_upper,
    )


def write_output(text: str, output: Optional[str]):
    """Write to the output file, or to stdout when no path is given."""
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text)


def seed_of(args: argparse.Namespace) -> int:
    return args.seed if args.seed is not None else config.setting('DEFAULT_SEED')


def samples_of(args: argparse.Namespace) -> int:
    return args.samples if args.samples is not None else config.setting('DEFAULT_SAMPLES')


def run_command(handler: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    """
    Run one command with logging set up and errors mapped to exit codes.

    Returns:
        The handler's exit code, the error's exit code for PolyrepError,
        130 on interrupt and 1 on anything unexpected.
    """
    package_logger = logging.getLogger(PACKAGE_LOGGER)
    file_handler = None
    try:
        if args.verbose:
            set_level(package_logger, logging.DEBUG)
        if args.log_file:
            add_file_handler(package_logger, args.log_file)
            file_handler = package_logger.handlers[-1]

        # Validate configuration
        try:
            validate_config()
        except ValueError as e:
            logger.error(f"Configuration error: {e}")
            return 1

        work_tracker.reset()
        status = handler(args)
        logger.info(work_tracker.format_work_summary())
        return status

    except PolyrepError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code

    except KeyboardInterrupt:
        logger.info("Process interrupted by user")
        return 130

    except Exception as e:
        logger.error(f"Unexpected error: {e}", exc_info=True)
        return 1

    finally:
        if file_handler is not None:
            package_logger.removeHandler(file_handler)
            file_handler.close()
        if args.verbose:
            set_level(package_logger, logging.INFO)


def format_lines(lines: List[str]) -> str:
    return "\n".join(lines) + "\n"
