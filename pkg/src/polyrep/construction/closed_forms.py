"""
Closed-form representations of cubes and simplices, and the prism and
pyramid lifts that add one dimension and one polynomial.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from polyrep.construction.sparse import SparsePoly
from polyrep.exact.rational import RatVec, centroid, dot, norm_sq, sqrt_upper, sub, unit_vec
from polyrep.lattice.hpolytope import HPolytope
from polyrep.utils.errors import ConstructionError

logger = logging.getLogger(__name__)

KINDS = ("cube", "simplex")


def _check_kind(kind: str, d: int):
    if kind not in KINDS:
        raise ValueError(f"unknown closed form: {kind}")
    if d < 1:
        raise ValueError("closed forms need d >= 1")


def closed_form_rep(kind: str, d: int) -> List[SparsePoly]:
    """
    d polynomials for the cube [-1,1]^d or the standard simplex.

    cube:     1 - x_i^2
    simplex:  x_i (1 - x_i - ... - x_d)
    """
    _check_kind(kind, d)
    x = [SparsePoly.variable(d, i) for i in range(d)]
    if kind == "cube":
        return [1 - xi * xi for xi in x]
    polys = []
    for i in range(d):
        tail = SparsePoly.constant(d, 1)
        for j in range(i, d):
            tail = tail - x[j]
        polys.append(x[i] * tail)
    return polys


def closed_form_hrep(kind: str, d: int) -> HPolytope:
    """The defining linear inequalities of the same cube or simplex."""
    _check_kind(kind, d)
    normals: List[RatVec] = []
    rhs: List[Fraction] = []
    if kind == "cube":
        for i in range(d):
            for sign in (1, -1):
                normals.append(unit_vec(d, i, sign))
                rhs.append(Fraction(1))
    else:
        for i in range(d):
            normals.append(unit_vec(d, i, -1))
            rhs.append(Fraction(0))
        normals.append(tuple(Fraction(1) for _ in range(d)))
        rhs.append(Fraction(1))
    return HPolytope(tuple(normals), tuple(rhs))


def prism_lift(base: Sequence[SparsePoly]) -> List[SparsePoly]:
    """Base polynomials in one more variable, plus ``x_d (1 - x_d)``."""
    if not base:
        raise ValueError("prism lift of an empty representation")
    d = base[0].nvars + 1
    x_d = SparsePoly.variable(d, d - 1)
    return [p.embed(d) for p in base] + [x_d * (1 - x_d)]


def prism_hrep(base: HPolytope) -> HPolytope:
    """Rows of ``Q x [0, 1]``."""
    zero = (Fraction(0),)
    normals = tuple(a + zero for a in base.normals)
    d = base.dim + 1
    normals += (unit_vec(d, d - 1), unit_vec(d, d - 1, -1))
    return HPolytope(normals, base.rhs + (Fraction(1), Fraction(0)))


@dataclass(frozen=True)
class PyramidLift:
    """
    Pyramid over a base Q with apex e_d, in the normalized frame.

    The base was moved to ``y = scale * (x - center)`` so that it lies in the
    unit ball; ``in_user_frame`` undoes this for the first d-1 coordinates.
    """
    polynomials: Tuple[SparsePoly, ...]
    center: RatVec
    scale: Fraction

    @property
    def dim(self) -> int:
        return self.polynomials[0].nvars

    def to_normalized(self, x: Sequence[Fraction]) -> RatVec:
        head = tuple(self.scale * (xi - ci) for xi, ci in zip(x[:-1], self.center))
        return head + (x[-1],)

    def in_user_frame(self) -> List[SparsePoly]:
        """The lifted polynomials in coordinates where the base keeps its original position."""
        d = self.dim
        substitutions = [
            (SparsePoly.variable(d, i) - self.center[i]) * self.scale for i in range(d - 1)
        ]
        substitutions.append(SparsePoly.variable(d, d - 1))
        return [p.compose(substitutions) for p in self.polynomials]

    def normalized_base_hrep(self, base: HPolytope) -> HPolytope:
        """Rows of ``scale * (Q - center)``."""
        return HPolytope(
            base.normals,
            tuple(self.scale * (b - dot(a, self.center)) for a, b in base.rows()),
        )


def _homogenize(p: SparsePoly, d: int, one_minus_last: SparsePoly) -> SparsePoly:
    degree = p.degree
    powers: Dict[int, SparsePoly] = {}
    result = SparsePoly(d)
    for exp, coef in p.terms.items():
        gap = degree - sum(exp)
        if gap not in powers:
            powers[gap] = one_minus_last ** gap
        monomial = SparsePoly(d, {exp + (0,): coef})
        result = result + monomial * powers[gap]
    return result


def pyramid_lift(base: Sequence[SparsePoly], base_vertices: Sequence[Sequence[Fraction]]) -> PyramidLift:
    """
    Lift a representation of Q to the pyramid over Q.

    Args:
        base: Polynomials in d-1 variables describing Q.
        base_vertices: Vertices of Q; their barycenter becomes the base center
            and the farthest vertex fixes the scale.

    Returns:
        PyramidLift with the homogenized base polynomials and
        ``x_d (1 - x_d - x_d * (x_1^2 + ... + x_{d-1}^2))``.

    Raises:
        ConstructionError: If the base has no extent to normalize.
    """
    if not base or not base_vertices:
        raise ConstructionError("pyramid lift needs a nonempty base and its vertices")
    n = base[0].nvars
    d = n + 1
    center = centroid([tuple(Fraction(c) for c in v) for v in base_vertices])
    radius_sq = max(norm_sq(sub(v, center)) for v in base_vertices)
    if radius_sq == 0:
        raise ConstructionError("pyramid base is a single point")
    scale = 1 / sqrt_upper(radius_sq)

    # p(center + y / scale) in the normalized base coordinates y
    shift = [SparsePoly.variable(n, i) * (1 / scale) + center[i] for i in range(n)]
    normalized = [p.compose(shift) for p in base]

    x_d = SparsePoly.variable(d, d - 1)
    one_minus_last = 1 - x_d
    lifted = [_homogenize(p, d, one_minus_last) for p in normalized]
    square_sum = SparsePoly(d)
    for i in range(n):
        xi = SparsePoly.variable(d, i)
        square_sum = square_sum + xi * xi
    lifted.append(x_d * (1 - x_d - x_d * square_sum))
    logger.debug(f"Pyramid lift: {len(lifted)} polynomials, scale {scale}")
    return PyramidLift(tuple(lifted), center, scale)


def pyramid_hrep(normalized_base: HPolytope) -> HPolytope:
    """
    Rows of ``conv(Q x {0}, e_d)`` for a base with the origin in its interior.

    ``<a, y> <= b`` becomes ``<a, y> + b x_d <= b``; with ``x_d >= 0`` that
    describes the pyramid.
    """
    if any(b <= 0 for b in normalized_base.rhs):
        raise ConstructionError("pyramid base must contain the origin in its interior")
    d = normalized_base.dim + 1
    normals = tuple(a + (b,) for a, b in normalized_base.rows()) + (unit_vec(d, d - 1, -1),)
    return HPolytope(normals, normalized_base.rhs + (Fraction(0),))
