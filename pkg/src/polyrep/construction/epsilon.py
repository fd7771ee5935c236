"""
The approximating polynomial

    p_eps(x) = sum_i (1/m) * v_i(x)^(2p),
    v_i(x)   = (2<a^i, x> - b_i + h(-a^i)) / (b_i + h(-a^i)),

kept as structured terms. ``v_i`` maps the slab ``-h(-a^i) <= <a^i,x> <= b_i``
onto [-1, 1] and does not depend on the coordinate frame, so the terms are
stored with the caller's rows; the recentering shift is kept as metadata.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence, Tuple

from polyrep.construction.forms import LinearForm
from polyrep.exact.rational import RatVec, dot, format_rat
from polyrep.lattice.hpolytope import HPolytope
from polyrep.utils.errors import ConstructionError

if TYPE_CHECKING:
    from polyrep.metrics.bundle import MetricsBundle

logger = logging.getLogger(__name__)

EPSILON_ID = "p_eps"


@dataclass(frozen=True)
class EpsilonTerm:
    a: RatVec
    b: Fraction
    h_minus: Fraction

    @property
    def width(self) -> Fraction:
        return self.b + self.h_minus

    @property
    def numerator(self) -> LinearForm:
        return LinearForm(self.h_minus - self.b, tuple(2 * c for c in self.a))

    def base(self, x: Sequence[Fraction]) -> Fraction:
        return (2 * dot(self.a, x) - self.b + self.h_minus) / self.width

    def render(self) -> str:
        numerator = self.numerator
        denominator = self.width
        values = [numerator.c0, *numerator.coeffs, denominator]
        if all(v.denominator == 1 for v in values):
            g = math.gcd(*(v.numerator for v in values))
            if g > 1:
                numerator = LinearForm(numerator.c0 / g, tuple(c / g for c in numerator.coeffs))
                denominator = denominator / g
        text = f"({numerator.render(constant_last=True)})"
        if denominator != 1:
            text += f"/{format_rat(denominator)}"
        return text


@dataclass(frozen=True)
class EpsilonPoly:
    terms: Tuple[EpsilonTerm, ...]
    weight: Fraction
    two_p: int
    shift: RatVec

    def __post_init__(self):
        if self.two_p <= 0 or self.two_p % 2:
            raise ConstructionError(f"exponent {self.two_p} is not a positive even integer")
        for i, term in enumerate(self.terms):
            if term.width <= 0:
                raise ConstructionError(f"epsilon term {i + 1} has nonpositive denominator {term.width}")

    @property
    def id(self) -> str:
        return EPSILON_ID

    @property
    def exponent_p(self) -> int:
        return self.two_p // 2

    @property
    def dim(self) -> int:
        return len(self.shift)

    def render(self) -> str:
        weight = format_rat(self.weight)
        return " + ".join(f"{weight}*[{term.render()}]^{self.two_p}" for term in self.terms)


def epsilon_poly(H: HPolytope, metrics: "MetricsBundle") -> EpsilonPoly:
    """
    Build the approximating polynomial of H.

    Args:
        H: The polytope in the caller's frame.
        metrics: Its metrics bundle (recentering, h(-a^i), exponent).

    Raises:
        ConstructionError: If some slab width is not positive.
    """
    h_minus = metrics.h_minus_original
    terms = tuple(EpsilonTerm(a, b, hm) for a, b, hm in zip(H.normals, H.rhs, h_minus))
    poly = EpsilonPoly(
        terms=terms,
        weight=Fraction(1, H.m),
        two_p=2 * metrics.exponent_p,
        shift=metrics.shift,
    )
    logger.debug(f"Built {EPSILON_ID} with {len(terms)} terms of degree {poly.two_p}")
    return poly
