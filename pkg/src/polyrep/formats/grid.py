"""CSV grid scans of both membership oracles over a bounding box (d = 2 or 3)."""
import csv
import io
import logging
from fractions import Fraction
from itertools import product
from math import floor, prod
from typing import List, Sequence

from polyrep.construction.prep import PRepresentation
from polyrep.lattice.hpolytope import HPolytope
from polyrep.utils import config
from polyrep.utils.errors import ResourceGuardError
from polyrep.verify.evaluate import compare_epsilon, member_hrep

logger = logging.getLogger(__name__)

GRID_DIMENSIONS = (2, 3)


def grid_header(prep: PRepresentation) -> List[str]:
    return [f"x{i + 1}" for i in range(prep.dim)] + prep.polynomial_ids() + ["member_prep", "member_hrep"]


def _axis(lo: Fraction, hi: Fraction, step: Fraction) -> List[Fraction]:
    if hi < lo:
        return []
    return [lo + i * step for i in range(floor((hi - lo) / step) + 1)]


def grid_rows(
    H: HPolytope,
    prep: PRepresentation,
    lo: Sequence[Fraction],
    hi: Sequence[Fraction],
    step: Fraction,
) -> List[List[str]]:
    """
    Evaluate every grid point, x1 varying slowest.

    Each row holds the coordinates, the sign of every product, the sign of
    ``1 - p_eps`` (so a nonnegative entry always means satisfied) and the two
    membership bits.

    Raises:
        ValueError: On a dimension outside {2, 3}, mismatched bounds or a nonpositive step.
        ResourceGuardError: If the grid exceeds POLYREP_MAX_GRID_CELLS.
    """
    d = prep.dim
    if d not in GRID_DIMENSIONS:
        raise ValueError(f"grid scans support d in {GRID_DIMENSIONS}, got {d}")
    if len(lo) != d or len(hi) != d or H.dim != d:
        raise ValueError("bounding box and representations must share the dimension")
    if step <= 0:
        raise ValueError("grid step must be positive")
    axes = [_axis(l, h, step) for l, h in zip(lo, hi)]
    cells = prod(len(a) for a in axes)
    limit = config.setting('MAX_GRID_CELLS')
    if cells > limit:
        raise ResourceGuardError(f"grid of {cells} cells exceeds the limit of {limit}")

    rows = []
    for point in product(*axes):
        signs = [p.sign(point) for p in prep.products]
        eps_sign = -compare_epsilon(prep.epsilon, point)
        inside_prep = all(s >= 0 for s in signs) and eps_sign >= 0
        inside_hrep = member_hrep(H, point).inside
        rows.append(
            [str(c) for c in point]
            + [str(s) for s in signs]
            + [str(eps_sign), str(int(inside_prep)), str(int(inside_hrep))]
        )
    logger.info(f"Grid scan: {cells} cells")
    return rows


def grid_eval_csv(
    H: HPolytope,
    prep: PRepresentation,
    lo: Sequence[Fraction],
    hi: Sequence[Fraction],
    step: Fraction,
) -> str:
    """CSV text with header ``x1,...,xd,<ids>,member_prep,member_hrep``."""
    rows = grid_rows(H, prep, lo, hi, step)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(grid_header(prep))
    writer.writerows(rows)
    return buffer.getvalue()
