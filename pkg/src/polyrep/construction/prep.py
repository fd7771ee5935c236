"""Assembly of the polynomial representation of a simple polytope."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from polyrep.construction.epsilon import EpsilonPoly, epsilon_poly
from polyrep.construction.forms import ProductPoly, face_product_poly
from polyrep.construction.weights import mu_count, weight_sets
from polyrep.lattice.faces import FaceLattice, build_face_lattice
from polyrep.lattice.hpolytope import HPolytope, require_simple_polytope
from polyrep.metrics.bundle import MetricsBundle, compute_metrics
from polyrep.utils.errors import ConstructionError

logger = logging.getLogger(__name__)

CONVENTION = "products>=0;epsilon<=1"


@dataclass(frozen=True)
class PRepMetadata:
    mu: int
    source_hash: str
    rho_mode: str = ""
    eps_bar: Optional[Fraction] = None
    exponent_p: Optional[int] = None
    f_vector: Tuple[int, ...] = ()


@dataclass(frozen=True)
class PRepresentation:
    """
    The system ``{p_{k,w} >= 0 for all k, w} ∪ {p_eps <= 1}``.

    Products are ordered by decreasing face dimension k and, within one k,
    by weight vector.
    """
    dim: int
    products: Tuple[ProductPoly, ...]
    epsilon: EpsilonPoly
    shift: Tuple[Fraction, ...]
    metadata: PRepMetadata

    @property
    def count(self) -> int:
        return len(self.products) + 1

    def polynomial_ids(self) -> List[str]:
        return [p.id for p in self.products] + [self.epsilon.id]

    def product(self, k: int, w) -> ProductPoly:
        for p in self.products:
            if p.k == k and p.w == tuple(w):
                return p
        raise KeyError(f"no product for k={k}, w={tuple(w)}")

    def products_of_dim(self, k: int) -> List[ProductPoly]:
        return [p for p in self.products if p.k == k]

    def without(self, polynomial_id: str) -> "PRepresentation":
        """A copy with one product dropped; used to exercise the verification harness."""
        kept = tuple(p for p in self.products if p.id != polynomial_id)
        if len(kept) == len(self.products):
            raise KeyError(f"no product {polynomial_id}")
        return PRepresentation(self.dim, kept, self.epsilon, self.shift, self.metadata)


def assemble_prep(
    H: HPolytope,
    lattice: FaceLattice,
    metrics: MetricsBundle,
) -> PRepresentation:
    """Build every face product and the approximating polynomial."""
    d = H.dim
    products = []
    for k in reversed(range(d)):
        for w in weight_sets(d, k):
            products.append(face_product_poly(k, w, lattice, H))
    epsilon = epsilon_poly(H, metrics)

    expected = mu_count(d) if d >= 2 else 2
    if len(products) + 1 != expected:
        raise ConstructionError(f"built {len(products) + 1} polynomials, expected {expected}")

    metadata = PRepMetadata(
        mu=expected,
        source_hash=H.fingerprint(),
        rho_mode=metrics.rho_mode,
        eps_bar=metrics.eps_bar,
        exponent_p=metrics.exponent_p,
        f_vector=lattice.f_vector,
    )
    return PRepresentation(
        dim=d,
        products=tuple(products),
        epsilon=epsilon,
        shift=metrics.shift,
        metadata=metadata,
    )


def construct_prep(
    H: HPolytope,
    rho_mode: Optional[str] = None,
    eps_bar: Optional[Fraction] = None,
    diam_upper: Optional[Fraction] = None,
) -> PRepresentation:
    """
    Validate H and construct its polynomial representation.

    Args:
        H: H-representation of a simple polytope.
        rho_mode: ``"exact"`` or ``"dimension"``; defaults to POLYREP_RHO_MODE.
        eps_bar: Optional epsilon to use instead of the computed one.
        diam_upper: Optional diameter bound to use instead of the computed one.

    Returns:
        The PRepresentation with ``mu_count(d)`` polynomials.

    Raises:
        ValidationError: If H is not a bounded irredundant simple polytope.
        ResourceGuardError: If a size limit is exceeded.
        ConstructionError: If eps_bar or diam_upper is inadmissible.
    """
    vertices = require_simple_polytope(H)
    lattice = build_face_lattice(H, vertices)
    weights = {k: weight_sets(H.dim, k) for k in range(H.dim)}
    metrics = compute_metrics(H, lattice, weights, rho_mode=rho_mode, eps_bar=eps_bar,
                              diam_upper=diam_upper)
    prep = assemble_prep(H, lattice, metrics)
    logger.info(f"Constructed {prep.count} polynomials for a {H.dim}-polytope with {H.m} facets")
    return prep
