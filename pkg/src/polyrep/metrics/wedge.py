"""
Distance between a polytope and a two-halfspace wedge.

For a wedge ``U = {<a,y> >= h_a, <b,y> >= h_b}`` with independent a, b the
squared distance from a point x to U only depends on the slacks
``s = h_a - <a,x>`` and ``t = h_b - <b,x>``:

    dist(x, U)^2 = min { u^T G^{-1} u : u >= (s, t) },   G = Gram(a, b)

so the distance from P to U is a convex quadratic minimized over the planar
region ``conv{(s(v), t(v))} + R^2_+`` spanned by the vertex slacks. Its
minimum lies on a vertex, an edge or a coordinate ray of that region, and
each candidate has a closed form over the rationals.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from tqdm import tqdm

from polyrep.exact.rational import RatVec, dot, norm_sq
from polyrep.lattice.faces import FaceLattice
from polyrep.lattice.hpolytope import HPolytope
from polyrep.utils import config
from polyrep.utils.work_tracker import work_tracker

logger = logging.getLogger(__name__)

Distance = Union[Fraction, float]
Point2 = Tuple[Fraction, Fraction]
INFINITY = math.inf


@dataclass(frozen=True)
class Wedge:
    """The closed set ``{<a,y> >= h_a} ∩ {<b,y> >= h_b}``."""
    a: RatVec
    h_a: Fraction
    b: RatVec
    h_b: Fraction

    def __post_init__(self):
        if not any(self.a) or not any(self.b):
            raise ValueError("wedge normals must be nonzero")

    def contains(self, y: Sequence[Fraction]) -> bool:
        return dot(self.a, y) >= self.h_a and dot(self.b, y) >= self.h_b


def _cross(o: Point2, p: Point2, q: Point2) -> Fraction:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def convex_hull_2d(points: Sequence[Point2]) -> List[Point2]:
    """Exact monotone chain; returns hull vertices counter-clockwise without collinear points."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: List[Point2] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point2] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _quad(H: Tuple[Fraction, Fraction, Fraction], u: Point2) -> Fraction:
    h11, h12, h22 = H
    return h11 * u[0] * u[0] + 2 * h12 * u[0] * u[1] + h22 * u[1] * u[1]


def _bilinear(H: Tuple[Fraction, Fraction, Fraction], u: Point2, v: Point2) -> Fraction:
    h11, h12, h22 = H
    return h11 * u[0] * v[0] + h12 * (u[0] * v[1] + u[1] * v[0]) + h22 * u[1] * v[1]


def reduced_distance_sq(
    slacks: Sequence[Point2],
    gram: Tuple[Fraction, Fraction, Fraction],
) -> Distance:
    """
    Minimize ``u^T G^{-1} u`` over ``conv(slacks) + R^2_+``.

    Args:
        slacks: Per-vertex slack pairs (s, t), all nonnegative.
        gram: ``(<a,a>, <a,b>, <b,b>)`` with a nonzero determinant.

    Returns:
        The exact minimum, 0 when some slack pair is (0, 0).
    """
    if any(s == 0 and t == 0 for s, t in slacks):
        return Fraction(0)
    g11, g12, g22 = gram
    det = g11 * g22 - g12 * g12
    # adjugate of G: G^{-1} = adj / det
    adj = (g22, -g12, g11)

    hull = convex_hull_2d(slacks)
    best = min(_quad(adj, p) for p in hull)

    if len(hull) >= 2:
        edges = list(zip(hull, hull[1:] + hull[:1])) if len(hull) > 2 else [(hull[0], hull[1])]
        for p, q in edges:
            direction = (q[0] - p[0], q[1] - p[1])
            denom = _quad(adj, direction)
            lam = -_bilinear(adj, p, direction) / denom
            if 0 < lam < 1:
                point = (p[0] + lam * direction[0], p[1] + lam * direction[1])
                best = min(best, _quad(adj, point))

    for p in hull:
        # rays p + tau * e_j, tau >= 0
        tau = -(adj[0] * p[0] + adj[1] * p[1]) / adj[0]
        if tau > 0:
            best = min(best, _quad(adj, (p[0] + tau, p[1])))
        tau = -(adj[1] * p[0] + adj[2] * p[1]) / adj[2]
        if tau > 0:
            best = min(best, _quad(adj, (p[0], p[1] + tau)))

    return best / det


def _parallel_distance_sq(
    slacks: Sequence[Point2],
    a: RatVec,
    h_a: Fraction,
    b: RatVec,
    h_b: Fraction,
    points: Sequence[RatVec],
) -> Distance:
    if any(s == 0 and t == 0 for s, t in slacks):
        return Fraction(0)
    # b = lam * a
    j = next(i for i, c in enumerate(a) if c != 0)
    lam = b[j] / a[j]
    if lam > 0:
        # both halfspaces are {<a,y> >= max(h_a, h_b / lam)}
        level = max(h_a, h_b / lam)
        gap = level - max(dot(a, p) for p in points)
        return max(gap, Fraction(0)) ** 2 / norm_sq(a)
    upper = h_b / lam
    if upper < h_a:
        return INFINITY
    values = [dot(a, p) for p in points]
    gap = max(h_a - max(values), min(values) - upper, Fraction(0))
    return gap * gap / norm_sq(a)


def wedge_distance_sq(H: HPolytope, lattice: FaceLattice, W: Wedge) -> Distance:
    """
    Squared distance between the polytope and the wedge W.

    Args:
        H: H-representation of the polytope.
        lattice: Its face lattice (only the vertices are used).
        W: The wedge.

    Returns:
        0 when the two bounding hyperplanes meet in a vertex of P, ``math.inf``
        when the wedge is empty, otherwise the exact positive squared distance.

    Raises:
        ValueError: On a dimension mismatch.
    """
    if len(W.a) != H.dim or len(W.b) != H.dim:
        raise ValueError("wedge dimension does not match the polytope")
    work_tracker.track("wedge_evaluations")
    points = [v.coords for v in lattice.vertices]
    slacks = [(W.h_a - dot(W.a, p), W.h_b - dot(W.b, p)) for p in points]
    gram = (norm_sq(W.a), dot(W.a, W.b), norm_sq(W.b))
    if gram[0] * gram[2] == gram[1] * gram[1]:
        return _parallel_distance_sq(slacks, W.a, W.h_a, W.b, W.h_b, points)
    return reduced_distance_sq(slacks, gram)


def _weighted_slacks(
    slack_rows: Sequence[Sequence[Fraction]],
    facets: Sequence[int],
    w: Sequence[int],
) -> List[Fraction]:
    return [sum((wj * row[i] for wj, i in zip(w, facets)), Fraction(0)) for row in slack_rows]


def _weighted_gram(
    normal_gram: Sequence[Sequence[Fraction]],
    facets_a: Sequence[int],
    facets_b: Sequence[int],
    w: Sequence[int],
) -> Fraction:
    return sum(
        (wi * wj * normal_gram[i][j] for wi, i in zip(w, facets_a) for wj, j in zip(w, facets_b)),
        Fraction(0),
    )


def face_epsilon_sq(
    H: HPolytope,
    lattice: FaceLattice,
    k: int,
    weights: Sequence[Sequence[int]],
    show_progress: Optional[bool] = None,
) -> Distance:
    """
    Smallest positive wedge distance among pairs of distinct k-faces.

    For every unordered pair of distinct k-faces and every weight vector w,
    the wedge of the two support vectors ``a(F, w)`` is measured; zeros are
    skipped. The distance is symmetric in the pair.

    Returns:
        The minimum strictly positive finite squared distance, or ``math.inf``.
    """
    if show_progress is None:
        show_progress = config.SHOW_PROGRESS
    faces = lattice.faces(k)
    points = [v.coords for v in lattice.vertices]
    slack_rows = [[H.slack(i, p) for i in range(H.m)] for p in points]
    normal_gram = [[dot(a, b) for b in H.normals] for a in H.normals]

    cache: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], List[Fraction]] = {}

    def slacks_of(facets: Tuple[int, ...], w: Tuple[int, ...]) -> List[Fraction]:
        key = (facets, w)
        if key not in cache:
            cache[key] = _weighted_slacks(slack_rows, facets, w)
        return cache[key]

    best: Distance = INFINITY
    pairs = list(combinations(faces, 2))
    total = len(pairs) * len(weights)
    progress = tqdm(total=total, desc=f"Wedges k={k}", disable=not show_progress or total < 1000,
                    leave=False)
    for w in weights:
        w = tuple(w)
        for F, G in pairs:
            progress.update(1)
            work_tracker.track("wedge_evaluations")
            s_values = slacks_of(F.facet_indices, w)
            t_values = slacks_of(G.facet_indices, w)
            slacks = list(zip(s_values, t_values))
            if any(s == 0 and t == 0 for s, t in slacks):
                continue
            gram = (
                _weighted_gram(normal_gram, F.facet_indices, F.facet_indices, w),
                _weighted_gram(normal_gram, F.facet_indices, G.facet_indices, w),
                _weighted_gram(normal_gram, G.facet_indices, G.facet_indices, w),
            )
            if gram[0] * gram[2] == gram[1] * gram[1]:
                a, h_a = F.support_vector(H, w)
                b, h_b = G.support_vector(H, w)
                value = _parallel_distance_sq(slacks, a, h_a, b, h_b, points)
            else:
                value = reduced_distance_sq(slacks, gram)
            if value != INFINITY and value > 0 and value < best:
                best = value
    progress.close()
    logger.debug(f"epsilon_{k}^2 = {best} over {total} wedges")
    return best
