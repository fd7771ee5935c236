"""
Affine forms and face products.

A face product for dimension k and weight w multiplies, over all k-faces F,
the support forms ``h(a(F,w)) - <a(F,w), x>``. Products stay factored.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from polyrep.construction.sparse import SparsePoly, product_of
from polyrep.construction.weights import WeightVector
from polyrep.exact.rational import RatVec, dot, format_rat
from polyrep.lattice.faces import Face, FaceLattice
from polyrep.lattice.hpolytope import HPolytope
from polyrep.utils import config
from polyrep.utils.errors import ResourceGuardError

logger = logging.getLogger(__name__)


def _render_terms(c0: Fraction, coeffs: Sequence[Fraction], constant_last: bool) -> str:
    pieces: List[Tuple[str, str]] = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        magnitude = abs(c)
        if magnitude == 1:
            body = f"x{i + 1}"
        elif magnitude.denominator == 1:
            body = f"{magnitude.numerator}x{i + 1}"
        else:
            body = f"{format_rat(magnitude)}*x{i + 1}"
        pieces.append(("-" if c < 0 else "+", body))
    if c0 != 0 or not pieces:
        constant = ("-" if c0 < 0 else "+", format_rat(abs(c0)))
        if constant_last:
            pieces.append(constant)
        else:
            pieces.insert(0, constant)
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    return text + "".join(s + b for s, b in pieces[1:])


@dataclass(frozen=True)
class LinearForm:
    """The affine function ``c0 + <coeffs, x>``."""
    c0: Fraction
    coeffs: RatVec

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def evaluate(self, x: Sequence[Fraction]) -> Fraction:
        return self.c0 + dot(self.coeffs, x)

    def translated(self, t: Sequence[Fraction]) -> "LinearForm":
        """The form ``y -> self(y + t)``."""
        return LinearForm(self.c0 + dot(self.coeffs, t), self.coeffs)

    def to_sparse(self) -> SparsePoly:
        return SparsePoly.linear(self.c0, self.coeffs)

    def render(self, constant_last: bool = False) -> str:
        """Render as ``10-2x1-3x2-5x3`` (or with the constant last)."""
        return _render_terms(self.c0, self.coeffs, constant_last)

    def __str__(self) -> str:
        return f"({self.render()})"


def polynomial_id(k: int, w: Sequence[int]) -> str:
    """Stable identifier such as ``p_0_1-1-2``."""
    return f"p_{k}_{'-'.join(str(x) for x in w)}"


@dataclass(frozen=True)
class ProductPoly:
    """``prod_F factor_F(x)`` over all k-faces F, one factor per face in canonical order."""
    k: int
    w: WeightVector
    factors: Tuple[LinearForm, ...]
    faces: Tuple[Tuple[int, ...], ...] = ()

    @property
    def id(self) -> str:
        return polynomial_id(self.k, self.w)

    @property
    def degree(self) -> int:
        return len(self.factors)

    def factor_values(self, x: Sequence[Fraction]) -> List[Fraction]:
        return [f.evaluate(x) for f in self.factors]

    def evaluate(self, x: Sequence[Fraction]) -> Fraction:
        value = Fraction(1)
        for f in self.factors:
            factor = f.evaluate(x)
            if factor == 0:
                return Fraction(0)
            value *= factor
        return value

    def sign(self, x: Sequence[Fraction]) -> int:
        """Sign of the product from the factor signs alone."""
        negative = 0
        for f in self.factors:
            factor = f.evaluate(x)
            if factor == 0:
                return 0
            if factor < 0:
                negative += 1
        return -1 if negative % 2 else 1

    def to_sparse(self) -> SparsePoly:
        """Expand; guarded by POLYREP_MAX_EXPANSION_DEGREE."""
        max_degree = config.setting('MAX_EXPANSION_DEGREE')
        if self.degree > max_degree:
            raise ResourceGuardError(
                f"{self.id} has degree {self.degree}, above the expansion limit of {max_degree}"
            )
        nvars = self.factors[0].dim if self.factors else 0
        return product_of((f.to_sparse() for f in self.factors), nvars)

    def render(self) -> str:
        return "".join(str(f) for f in self.factors)


def face_support_form(F: Face, w: Sequence[int], H: HPolytope) -> LinearForm:
    """
    The support form ``h(a(F,w)) - <a(F,w), x>`` of a face.

    Raises:
        ValueError: If ``len(w)`` does not match the face's facet count.
    """
    a, h = F.support_vector(H, w)
    return LinearForm(h, tuple(-c for c in a))


def face_product_poly(k: int, w: Sequence[int], lattice: FaceLattice, H: HPolytope) -> ProductPoly:
    """Product of the support forms of all k-faces, ordered by facet indices."""
    faces = lattice.faces(k)
    factors = tuple(face_support_form(F, w, H) for F in faces)
    product = ProductPoly(k=k, w=tuple(w), factors=factors, faces=tuple(F.facet_indices for F in faces))
    logger.debug(f"Built {product.id} with {len(factors)} factors")
    return product
