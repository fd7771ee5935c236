"""Support function, recentering and diameter of a bounded polytope."""
import logging
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple

from polyrep.exact.rational import RatVec, centroid, dot, format_vec, norm_sq, sqrt_upper, sub
from polyrep.lattice.hpolytope import HPolytope, Vertex
from polyrep.utils.errors import ConstructionError

logger = logging.getLogger(__name__)

DIAMETER_BITS = 16


def _coords(points: Sequence) -> List[RatVec]:
    return [p.coords if isinstance(p, Vertex) else tuple(p) for p in points]


def support_value(vertices: Sequence, u: Sequence[Fraction]) -> Fraction:
    """
    Exact ``h(u) = max <u, v>`` over the vertices.

    Args:
        vertices: ``Vertex`` objects or coordinate tuples.
        u: Direction; the zero vector gives 0.

    Raises:
        ValueError: If the vertex list is empty.
    """
    points = _coords(vertices)
    if not points:
        raise ValueError("support value over an empty vertex set")
    return max(dot(u, p) for p in points)


def recenter(H: HPolytope, vertices: Sequence) -> Tuple[HPolytope, RatVec]:
    """
    Move the vertex barycenter to the origin.

    Returns:
        Tuple of the shifted H-representation (``b_i - <a^i, t>``) and the shift t.

    Raises:
        ConstructionError: If some shifted right-hand side is not positive,
            which cannot happen for a full-dimensional polytope.
    """
    t = centroid(_coords(vertices))
    shifted = H.translated(t)
    bad = [i for i, b in enumerate(shifted.rhs) if b <= 0]
    if bad:
        raise ConstructionError(
            f"barycenter {format_vec(t)} is not interior: rows {', '.join(str(i + 1) for i in bad)}"
        )
    logger.debug(f"Recentered at vertex barycenter {format_vec(t)}")
    return shifted, t


def diameter_sq(vertices: Sequence) -> Fraction:
    """Largest squared distance between two vertices.

    Raises:
        ValueError: With fewer than two vertices.
    """
    points = _coords(vertices)
    if len(points) < 2:
        raise ValueError("the diameter needs at least two vertices")
    return max(norm_sq(sub(p, q)) for p, q in combinations(points, 2))


def diameter_upper(diam_sq: Fraction, bits: int = DIAMETER_BITS) -> Fraction:
    """Least ``n / 2^bits`` whose square is at least ``diam_sq``."""
    return sqrt_upper(diam_sq, bits)
