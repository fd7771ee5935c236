"""
Evaluation of the constructed polynomials and the two membership oracles.

The approximating polynomial has degree in the hundreds, so besides the
exact evaluation there is a guarded comparison against 1: each term is
bounded through ``log|num| - log(den)`` in floating point and the verdict is
only taken when it clears ``GUARD_MARGIN``; otherwise the exact value decides.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from polyrep.construction.epsilon import EpsilonPoly
from polyrep.construction.forms import ProductPoly
from polyrep.construction.prep import PRepresentation
from polyrep.construction.projective import PolyhedronPRep
from polyrep.construction.sparse import SparsePoly
from polyrep.lattice.hpolytope import HPolytope
from polyrep.utils import config
from polyrep.utils.errors import ResourceGuardError
from polyrep.utils.work_tracker import work_tracker

logger = logging.getLogger(__name__)

GUARD_MARGIN = 1e-6
EPSILON_MODES = ("exact", "guarded")


@dataclass(frozen=True)
class PolynomialViolation:
    """A polynomial that fails its inequality; ``value`` is None when a float bound decided it."""
    id: str
    value: Optional[Fraction]


@dataclass
class MembershipVerdict:
    inside: bool
    violated: List[PolynomialViolation] = field(default_factory=list)

    @property
    def violated_ids(self) -> List[str]:
        return [v.id for v in self.violated]


def eval_product(pp: ProductPoly, x: Sequence[Fraction]) -> Fraction:
    """Exact value of a face product at x."""
    return pp.evaluate(x)


def _bit_estimate(ep: EpsilonPoly, bases: Sequence[Fraction]) -> int:
    return sum(
        ep.two_p * (b.numerator.bit_length() + b.denominator.bit_length()) for b in bases
    )


def eval_epsilon(ep: EpsilonPoly, x: Sequence[Fraction]) -> Fraction:
    """
    Exact value of the approximating polynomial at x.

    Raises:
        ValueError: On a dimension mismatch.
        ResourceGuardError: If the powers would exceed POLYREP_EXACT_BIT_LIMIT bits.
    """
    if len(x) != ep.dim:
        raise ValueError(f"point of dimension {len(x)} for a {ep.dim}-dimensional polynomial")
    bases = [term.base(x) for term in ep.terms]
    limit = config.setting('EXACT_BIT_LIMIT')
    estimate = _bit_estimate(ep, bases)
    if estimate > limit:
        raise ResourceGuardError(f"exact epsilon evaluation needs about {estimate} bits (limit {limit})")
    work_tracker.track("exact_epsilon_evaluations")
    return ep.weight * sum((b ** ep.two_p for b in bases), Fraction(0))


def _log_abs(q: Fraction) -> float:
    return math.log(abs(q.numerator)) - math.log(q.denominator)


def compare_epsilon(ep: EpsilonPoly, x: Sequence[Fraction], mode: str = "guarded") -> int:
    """
    Sign of ``p_eps(x) - 1``.

    Args:
        ep: The approximating polynomial.
        x: Exact point.
        mode: ``"exact"`` always evaluates exactly; ``"guarded"`` answers from
            logarithmic bounds when they are conclusive and falls back to exact
            evaluation otherwise.

    Returns:
        -1, 0 or 1.
    """
    if mode not in EPSILON_MODES:
        raise ValueError(f"unknown epsilon mode: {mode}")
    if mode == "guarded":
        if len(x) != ep.dim:
            raise ValueError(f"point of dimension {len(x)} for a {ep.dim}-dimensional polynomial")
        log_weight = math.log(ep.weight)
        logs = [
            ep.two_p * _log_abs(b) + log_weight if b != 0 else -math.inf
            for b in (term.base(x) for term in ep.terms)
        ]
        if max(logs) > GUARD_MARGIN:
            work_tracker.track("certified_epsilon_verdicts")
            return 1
        if np.logaddexp.reduce(np.array(logs)) < -GUARD_MARGIN:
            work_tracker.track("certified_epsilon_verdicts")
            return -1
        logger.debug("Guarded epsilon comparison inconclusive; evaluating exactly")
    value = eval_epsilon(ep, x)
    return (value > 1) - (value < 1)


def member_hrep(H: HPolytope, x: Sequence[Fraction]) -> MembershipVerdict:
    """Exact check of every row; violations are named ``row i`` (1-based)."""
    violated = []
    for i in range(H.m):
        slack = H.slack(i, x)
        if slack < 0:
            violated.append(PolynomialViolation(f"row {i + 1}", slack))
    return MembershipVerdict(inside=not violated, violated=violated)


def _check_products(products: Sequence[ProductPoly], x, violated, exhaustive: bool) -> bool:
    for pp in products:
        if pp.sign(x) < 0:
            violated.append(PolynomialViolation(pp.id, pp.evaluate(x)))
            if not exhaustive:
                return False
    return True


def _check_epsilon(ep: EpsilonPoly, x, violated, mode: str) -> None:
    if mode == "exact":
        value = eval_epsilon(ep, x)
        if value > 1:
            violated.append(PolynomialViolation(ep.id, value))
    elif compare_epsilon(ep, x, mode) > 0:
        violated.append(PolynomialViolation(ep.id, None))


def member_prep(
    prep: PRepresentation,
    x: Sequence[Fraction],
    mode: str = "guarded",
    exhaustive: bool = True,
) -> MembershipVerdict:
    """
    Membership in ``{products >= 0} ∩ {p_eps <= 1}``.

    Products of faces of positive dimension are checked first, then the
    approximating polynomial, then the vertex products. With
    ``exhaustive=False`` the check stops at the first violation.
    """
    if len(x) != prep.dim:
        raise ValueError(f"point of dimension {len(x)} for a {prep.dim}-dimensional representation")
    violated: List[PolynomialViolation] = []
    upper = [p for p in prep.products if p.k >= 1]
    lower = [p for p in prep.products if p.k == 0]
    if not _check_products(upper, x, violated, exhaustive):
        return MembershipVerdict(False, violated)
    _check_epsilon(prep.epsilon, x, violated, mode)
    if violated and not exhaustive:
        return MembershipVerdict(False, violated)
    _check_products(lower, x, violated, exhaustive)
    return MembershipVerdict(inside=not violated, violated=violated)


def member_polyhedron_prep(
    pp: PolyhedronPRep,
    x: Sequence[Fraction],
    mode: str = "guarded",
) -> MembershipVerdict:
    """Membership for a pulled-back representation of an unbounded polyhedron."""
    violated: List[PolynomialViolation] = []
    final = pp.final.evaluate(x)
    if final < 0:
        return MembershipVerdict(False, [PolynomialViolation("final", final)])
    _check_products(pp.products, x, violated, exhaustive=True)
    image_point = pp.image.map_point(x)
    _check_epsilon(pp.image_prep.epsilon, image_point, violated, mode)
    return MembershipVerdict(inside=not violated, violated=violated)


def member_sparse(polys: Sequence[SparsePoly], x: Sequence[Fraction]) -> MembershipVerdict:
    """Membership in ``{p >= 0 for every p}``; polynomials are named ``q1, q2, ...``."""
    violated = []
    for i, p in enumerate(polys):
        value = p.evaluate(x)
        if value < 0:
            violated.append(PolynomialViolation(f"q{i + 1}", value))
    return MembershipVerdict(inside=not violated, violated=violated)
