"""
Metric ingredients of the construction: wedge minima, the global epsilon
bound and the exponent of the approximating polynomial.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from polyrep.exact.rational import RatVec, dot, format_rat, sqrt_lower
from polyrep.lattice.faces import FaceLattice
from polyrep.lattice.hpolytope import HPolytope
from polyrep.metrics.support import diameter_sq, diameter_upper, recenter
from polyrep.metrics.wedge import INFINITY, Distance, face_epsilon_sq
from polyrep.utils import config
from polyrep.utils.errors import ConstructionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MetricsBundle:
    """Everything the approximating polynomial needs, computed exactly.

    ``h_minus`` holds ``h(-a^i)`` in the recentered frame, so
    ``shifted.rhs[i] + h_minus[i]`` is the width of P in direction a^i.
    """
    shift: RatVec
    shifted: HPolytope
    h_minus: List[Fraction]
    diam_sq: Fraction
    diam_upper: Fraction
    r_min: Fraction
    eps_k_sq: Dict[int, Distance]
    eps_bar: Fraction
    rho_mode: str
    rho: Fraction
    exponent_p: int

    @property
    def h_minus_original(self) -> List[Fraction]:
        """``h(-a^i)`` in the caller's frame."""
        return [h - dot(a, self.shift) for a, h in zip(self.shifted.normals, self.h_minus)]


def _finite(values: Iterable[Distance]) -> List[Fraction]:
    return [v for v in values if v != INFINITY and v > 0]


def choose_eps_bar(eps_k_sq: Iterable[Distance], bits: int = 16) -> Fraction:
    """
    Pick a rational epsilon strictly below every finite wedge minimum.

    Returns:
        1 when every minimum is infinite, otherwise half of a dyadic lower
        bound of the square root of the smallest minimum.
    """
    finite = _finite(eps_k_sq)
    if not finite:
        return Fraction(1)
    smallest = min(finite)
    root = sqrt_lower(smallest, bits)
    while root == 0:
        bits += 16
        root = sqrt_lower(smallest, bits)
    return root / 2


def eps_bar_is_admissible(q: Fraction, eps_k_sq: Iterable[Distance]) -> bool:
    """True when ``q > 0`` and ``q^2`` lies strictly below every finite minimum."""
    if q <= 0:
        return False
    finite = _finite(eps_k_sq)
    return not finite or q * q < min(finite)


def _resolve_rho(d: int, rho_mode: str, r_min: Optional[Fraction]) -> Fraction:
    if rho_mode not in config.RHO_MODES:
        raise ValueError(f"unknown rho mode: {rho_mode}")
    if rho_mode == "exact":
        if r_min is None:
            raise ValueError("rho mode 'exact' needs r_min")
        return r_min
    rho = Fraction(1, d + 1)
    if r_min is not None and r_min < rho:
        raise ConstructionError(
            f"rho mode 'dimension' needs r_min >= 1/{d + 1}, got {format_rat(r_min)}"
        )
    return rho


def choose_exponent(
    m: int,
    d: int,
    eps_bar: Fraction,
    diam_upper: Fraction,
    rho_mode: str = "exact",
    r_min: Optional[Fraction] = None,
) -> int:
    """
    Least p >= 1 with ``(1 + 2 * eps_bar * rho / diam_upper)^(2p) > m``.

    Args:
        m: Number of facets.
        d: Dimension.
        eps_bar: Positive epsilon bound.
        diam_upper: Positive upper bound of the diameter.
        rho_mode: ``"exact"`` (rho = r_min) or ``"dimension"`` (rho = 1/(d+1)).
        r_min: Smallest ratio ``b_i / (b_i + h(-a^i))`` in the recentered frame.

    Returns:
        The exponent p, decided by exact rational powers.

    Raises:
        ValueError: On nonpositive inputs or a missing r_min.
        ConstructionError: If mode ``dimension`` is not justified by r_min.
    """
    if m < 1 or eps_bar <= 0 or diam_upper <= 0:
        raise ValueError("choose_exponent needs m >= 1, eps_bar > 0 and diam_upper > 0")
    rho = _resolve_rho(d, rho_mode, r_min)
    base = 1 + 2 * Fraction(eps_bar) * rho / Fraction(diam_upper)
    num, den = base.numerator, base.denominator

    def exceeds(p: int) -> bool:
        return num ** (2 * p) > m * den ** (2 * p)

    hi = 1
    while not exceeds(hi):
        hi *= 2
    lo = hi // 2  # fails, or 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if exceeds(mid):
            hi = mid
        else:
            lo = mid
    return hi


def exponent_float_bound(
    m: int,
    eps_bar: Fraction,
    diam_upper: Fraction,
    rho: Fraction,
) -> float:
    """The logarithmic bound ``ln(m) / (2 ln(1 + 2 eps rho / diam))`` in floating point."""
    ratio = 2 * float(eps_bar) * float(rho) / float(diam_upper)
    return math.log(m) / (2 * math.log1p(ratio))


def compute_metrics(
    H: HPolytope,
    lattice: FaceLattice,
    weights_by_dim: Mapping[int, Sequence[Sequence[int]]],
    rho_mode: Optional[str] = None,
    eps_bar: Optional[Fraction] = None,
    diam_upper: Optional[Fraction] = None,
) -> MetricsBundle:
    """
    Compute recentering, diameter, wedge minima, epsilon and exponent.

    Args:
        H: Validated simple polytope.
        lattice: Its face lattice.
        weights_by_dim: Weight vectors per face dimension k.
        rho_mode: ``"exact"`` or ``"dimension"``; defaults to POLYREP_RHO_MODE.
        eps_bar: Optional user-chosen epsilon; must be admissible.
        diam_upper: Optional user-chosen diameter bound; must be at least the diameter.

    Raises:
        ConstructionError: If eps_bar or diam_upper is not admissible.
    """
    rho_mode = rho_mode or config.DEFAULT_RHO_MODE
    d = H.dim
    vertices = lattice.vertices
    shifted, shift = recenter(H, vertices)
    h_minus = [
        max(-dot(a, v.coords) for v in vertices) + dot(a, shift) for a in H.normals
    ]
    r_min = min(b / (b + hm) for b, hm in zip(shifted.rhs, h_minus))
    d_sq = diameter_sq(vertices)
    if diam_upper is None:
        d_upper = diameter_upper(d_sq)
    elif diam_upper <= 0 or diam_upper * diam_upper < d_sq:
        raise ConstructionError(f"diam_upper {format_rat(diam_upper)} is below the diameter")
    else:
        d_upper = Fraction(diam_upper)
    logger.info(f"diam^2 = {format_rat(d_sq)}, diam <= {format_rat(d_upper)}, r_min = {format_rat(r_min)}")

    eps_k_sq: Dict[int, Distance] = {}
    for k in range(d):
        eps_k_sq[k] = face_epsilon_sq(H, lattice, k, weights_by_dim[k])
        value = eps_k_sq[k]
        logger.info(f"epsilon_{k}^2 = {'inf' if value == INFINITY else format_rat(value)}")

    if eps_bar is None:
        eps_bar = choose_eps_bar(eps_k_sq.values())
    elif not eps_bar_is_admissible(eps_bar, eps_k_sq.values()):
        raise ConstructionError(f"eps_bar {format_rat(eps_bar)} is not below every epsilon_k")
    rho = _resolve_rho(d, rho_mode, r_min)
    p = choose_exponent(H.m, d, eps_bar, d_upper, rho_mode, r_min)
    logger.info(f"eps_bar = {format_rat(eps_bar)}, rho = {format_rat(rho)} ({rho_mode}), p = {p}")

    return MetricsBundle(
        shift=shift,
        shifted=shifted,
        h_minus=h_minus,
        diam_sq=d_sq,
        diam_upper=d_upper,
        r_min=r_min,
        eps_k_sq=eps_k_sq,
        eps_bar=Fraction(eps_bar),
        rho_mode=rho_mode,
        rho=rho,
        exponent_p=p,
    )
