"""
Projective transformation of pointed polyhedra.

With a simple vertex v moved to the origin and a vector c that is 1 on the
d extreme rays of the vertex cone, the map ``f(x) = x / (<c,x> + 1)`` sends
P to a bounded set whose closure is the polytope

    {y : <a^i + b_i c, y> <= b_i} ∩ {<c,y> <= 1}.

A representation of that polytope pulls back to P by composing with f and
clearing the denominators ``(<c,x> + 1)^t``; the last inequality is replaced
by ``<c, x - v> >= 0``.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from polyrep.construction.forms import LinearForm, ProductPoly
from polyrep.construction.prep import PRepresentation, construct_prep
from polyrep.construction.sparse import SparsePoly
from polyrep.exact.linalg import kernel_basis, mat_vec, solve_square_system
from polyrep.exact.rational import RatVec, dot, format_vec, scale, sub, unit_vec
from polyrep.lattice.hpolytope import (
    HPolytope,
    Vertex,
    enumerate_vertices,
    find_unbounded_directions,
    is_redundant_row,
)
from polyrep.utils.errors import (
    BoundedInputError,
    ConstructionError,
    NotPointedError,
    ValidationError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjectiveImage:
    """
    The polytope ``cl(f(P))`` together with the data of f.

    ``image`` lives in coordinates centred at ``vertex``; ``c_row_kept`` tells
    whether ``<c,y> <= 1`` is a facet of the image (it is the last row then).
    """
    image: HPolytope
    c: RatVec
    vertex: RatVec
    c_row_kept: bool

    @property
    def dim(self) -> int:
        return len(self.c)

    def denominator(self) -> LinearForm:
        """``<c, x - v> + 1`` in the caller's coordinates."""
        return LinearForm(1 - dot(self.c, self.vertex), self.c)

    def final_inequality(self) -> LinearForm:
        """``<c, x - v>``, required to be nonnegative."""
        return LinearForm(-dot(self.c, self.vertex), self.c)

    def map_point(self, x: Sequence[Fraction]) -> Optional[RatVec]:
        """``f(x)`` in image coordinates, or None where ``<c, x - v> + 1 <= 0``."""
        shifted = sub(x, self.vertex)
        denominator = dot(self.c, shifted) + 1
        if denominator <= 0:
            return None
        return scale(shifted, 1 / denominator)


def recession_rays(H: HPolytope) -> List[RatVec]:
    """Extreme rays of ``{r : A r <= 0}`` for a pointed polyhedron."""
    d = H.dim
    rays: List[RatVec] = []
    for subset in combinations(range(H.m), d - 1):
        kernel = kernel_basis([H.normals[i] for i in subset], columns=d)
        if len(kernel) != 1:
            continue
        for direction in (kernel[0], scale(kernel[0], Fraction(-1))):
            if all(v <= 0 for v in mat_vec(H.normals, direction)):
                lead = next(abs(c) for c in direction if c != 0)
                ray = scale(direction, 1 / lead)
                if ray not in rays:
                    rays.append(ray)
    return rays


def projectivize_pointed(H: HPolytope, vertex_index: int = 0) -> ProjectiveImage:
    """
    Map an unbounded pointed polyhedron to a polytope.

    Args:
        H: H-representation of a pointed, unbounded polyhedron.
        vertex_index: Which vertex (in canonical order) goes to the origin.

    Returns:
        The projective image and the data needed to pull back.

    Raises:
        NotPointedError: If H contains a line.
        BoundedInputError: If H is bounded.
        ValidationError: If the chosen vertex is not simple.
        ConstructionError: If c fails to be positive on P minus the vertex.
    """
    d = H.dim
    lineality = kernel_basis(H.normals, columns=d)
    if lineality:
        raise NotPointedError(
            f"polyhedron contains the line through {format_vec(lineality[0])}; quotient it out first"
        )
    vertices: List[Vertex] = enumerate_vertices(H)
    if not find_unbounded_directions(H):
        raise BoundedInputError("input bounded; projectivization not needed")
    if not 0 <= vertex_index < len(vertices):
        raise ValueError(f"vertex index {vertex_index} out of range (0..{len(vertices) - 1})")
    chosen = vertices[vertex_index]
    if len(chosen.facet_set) != d:
        raise ValidationError(f"vertex {format_vec(chosen.coords)} is not simple")

    v = chosen.coords
    shifted = H.translated(v)
    active = [shifted.normals[i] for i in chosen.facet_set]
    cone_rays = []
    for j in range(d):
        ray = solve_square_system(active, unit_vec(d, j, -1))
        if ray is None:
            raise ConstructionError(f"active rows at {format_vec(v)} are dependent")
        cone_rays.append(ray)
    c = solve_square_system(cone_rays, [Fraction(1)] * d)
    if c is None:
        raise ConstructionError("vertex cone rays are dependent")

    for other in vertices:
        if other.coords != v and dot(c, sub(other.coords, v)) <= 0:
            raise ConstructionError(f"c is not positive on vertex {format_vec(other.coords)}")
    for ray in recession_rays(H):
        if dot(c, ray) <= 0:
            raise ConstructionError(f"c is not positive on recession ray {format_vec(ray)}")

    normals = tuple(
        tuple(ai + b * ci for ai, ci in zip(a, c)) for a, b in shifted.rows()
    )
    image = HPolytope(normals + (c,), shifted.rhs + (Fraction(1),))
    c_row_kept = not is_redundant_row(image, image.m - 1)
    if not c_row_kept:
        image = image.without_row(image.m - 1)
    logger.info(f"Projectivized at vertex {format_vec(v)} with c = {format_vec(c)}")
    return ProjectiveImage(image=image, c=c, vertex=v, c_row_kept=c_row_kept)


def _pullback_sparse(p: SparsePoly, image: ProjectiveImage) -> SparsePoly:
    d = image.dim
    denominator = SparsePoly.linear(1, image.c)
    degree = p.degree
    powers: Dict[int, SparsePoly] = {}
    result = SparsePoly(d)
    for t, part in p.homogeneous_parts().items():
        gap = degree - t
        if gap not in powers:
            powers[gap] = denominator ** gap
        result = result + part * powers[gap]
    back = [SparsePoly.variable(d, i) - image.vertex[i] for i in range(d)]
    return result.compose(back)


def pullback_prep(
    polynomials: Sequence[SparsePoly],
    image: ProjectiveImage,
) -> Tuple[List[SparsePoly], LinearForm]:
    """
    Pull expanded polynomials of the image back to the polyhedron.

    Each polynomial q of total degree t becomes
    ``(<c,x'> + 1)^t q(x' / (<c,x'> + 1))`` with ``x' = x - v``.

    Returns:
        The pulled-back polynomials and the final form ``<c, x - v>`` (>= 0).
    """
    pulled = [_pullback_sparse(p, image) for p in polynomials]
    return pulled, image.final_inequality()


def _pullback_form(form: LinearForm, image: ProjectiveImage) -> LinearForm:
    # c0 + <g, y> at y = x'/(<c,x'>+1), times (<c,x'>+1)
    coeffs = tuple(g + form.c0 * ci for g, ci in zip(form.coeffs, image.c))
    return LinearForm(form.c0, coeffs).translated(tuple(-vi for vi in image.vertex))


@dataclass(frozen=True)
class PolyhedronPRep:
    """
    Polynomial representation of an unbounded polyhedron.

    Membership: ``final >= 0``, every pulled-back product ``>= 0`` and the
    image's approximating polynomial ``<= 1`` at ``f(x)``.
    """
    image: ProjectiveImage
    image_prep: PRepresentation
    products: Tuple[ProductPoly, ...]
    final: LinearForm

    @property
    def count(self) -> int:
        return len(self.products) + 2


def pullback_structured(prep: PRepresentation, image: ProjectiveImage) -> PolyhedronPRep:
    """Pull back a factored representation of the image without expanding it."""
    products = tuple(
        ProductPoly(
            k=p.k,
            w=p.w,
            factors=tuple(_pullback_form(f, image) for f in p.factors),
            faces=p.faces,
        )
        for p in prep.products
    )
    return PolyhedronPRep(image=image, image_prep=prep, products=products, final=image.final_inequality())


def construct_polyhedron_prep(
    H: HPolytope,
    vertex_index: int = 0,
    rho_mode: Optional[str] = None,
    eps_bar: Optional[Fraction] = None,
    diam_upper: Optional[Fraction] = None,
) -> PolyhedronPRep:
    """Projectivize, construct the image's representation and pull it back."""
    image = projectivize_pointed(H, vertex_index)
    prep = construct_prep(image.image, rho_mode=rho_mode, eps_bar=eps_bar, diam_upper=diam_upper)
    result = pullback_structured(prep, image)
    logger.info(f"Pulled back {result.count} polynomials to the {H.dim}-polyhedron")
    return result
