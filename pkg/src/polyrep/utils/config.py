"""Configuration utilities for polyrep.

Settings are read from the environment (optionally from a ``.env`` file).
Library code reads them through this module at call time, e.g.
``config.MAX_DIMENSION``, so that they can be overridden in tests.
"""
import logging
import os
from pathlib import Path

from dotenv import load_dotenv, find_dotenv

logger = logging.getLogger(__name__)

# Try to find and load .env file from multiple locations
possible_env_paths = [
    Path(__file__).parents[3] / '.env',  # プロジェクトルート
    Path.cwd() / '.env',                 # カレントディレクトリ
]

dotenv_path = find_dotenv(usecwd=True)
if dotenv_path:
    load_dotenv(dotenv_path=dotenv_path)
    logger.debug(f"Found .env file at: {dotenv_path}")
else:
    for env_path in possible_env_paths:
        if env_path.exists():
            load_dotenv(dotenv_path=env_path)
            logger.debug(f"Loaded .env from: {env_path}")
            break

RHO_MODES = ('exact', 'dimension')

# Resource guards
MAX_DIMENSION = os.getenv('POLYREP_MAX_DIMENSION', '8')
MAX_VERTEX_SUBSETS = os.getenv('POLYREP_MAX_VERTEX_SUBSETS', '10000000')
MAX_EXPANSION_DEGREE = os.getenv('POLYREP_MAX_EXPANSION_DEGREE', '64')
MAX_EXPANSION_MONOMIALS = os.getenv('POLYREP_MAX_EXPANSION_MONOMIALS', '1000000')
EXACT_BIT_LIMIT = os.getenv('POLYREP_EXACT_BIT_LIMIT', '10000000')
MAX_GRID_CELLS = os.getenv('POLYREP_MAX_GRID_CELLS', '1000000')

# Defaults for the verification harness and the exponent choice
DEFAULT_SEED = os.getenv('POLYREP_SEED', '0')
DEFAULT_SAMPLES = os.getenv('POLYREP_SAMPLES', '10000')
DEFAULT_RHO_MODE = os.getenv('POLYREP_RHO_MODE', 'exact')

SHOW_PROGRESS = os.getenv('POLYREP_PROGRESS', '1') not in ('0', 'false', 'False', 'no')

_INTEGER_SETTINGS = (
    'MAX_DIMENSION',
    'MAX_VERTEX_SUBSETS',
    'MAX_EXPANSION_DEGREE',
    'MAX_EXPANSION_MONOMIALS',
    'EXACT_BIT_LIMIT',
    'MAX_GRID_CELLS',
    'DEFAULT_SEED',
    'DEFAULT_SAMPLES',
)


def validate_config():
    """Validate the settings and convert integer settings in place.

    Raises:
        ValueError: If any setting is malformed.
    """
    invalid = []
    module_globals = globals()

    for name in _INTEGER_SETTINGS:
        value = module_globals[name]
        try:
            converted = int(value)
        except (TypeError, ValueError):
            invalid.append(f"POLYREP_{name} ({value!r} is not an integer)")
            continue
        if converted < 0:
            invalid.append(f"POLYREP_{name} (must be non-negative)")
            continue
        module_globals[name] = converted

    if DEFAULT_RHO_MODE not in RHO_MODES:
        invalid.append(f"POLYREP_RHO_MODE ({DEFAULT_RHO_MODE!r} not in {', '.join(RHO_MODES)})")

    if invalid:
        raise ValueError(f"Invalid configuration variables: {', '.join(invalid)}")

    return True


def setting(name: str) -> int:
    """Return an integer setting, converting it on first use."""
    value = globals()[name]
    if not isinstance(value, int):
        value = int(value)
        globals()[name] = value
    return value
