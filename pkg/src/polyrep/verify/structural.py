"""
Structural checks of a constructed representation.

    facet-factor     every facet form b_i - <a^i,x> is a factor of the facet product
    face-vanishing   for a k-face F, every product of dimension j >= k vanishes on aff(F)
    support          every factor is >= 0 on the vertices and 0 exactly on its face
    epsilon          the approximating polynomial is <= 1 on every vertex
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

import numpy as np

from polyrep.construction.forms import LinearForm
from polyrep.construction.prep import PRepresentation
from polyrep.exact.rational import RatVec, format_vec, linear_combination
from polyrep.lattice.faces import Face, FaceLattice
from polyrep.lattice.hpolytope import HPolytope
from polyrep.verify.evaluate import compare_epsilon

logger = logging.getLogger(__name__)

CHECKS = ("facet-factor", "face-vanishing", "support", "epsilon")
AFFINE_SAMPLES = 3


@dataclass
class StructuralReport:
    failures: Dict[str, List[str]] = field(default_factory=lambda: {name: [] for name in CHECKS})

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def failed_checks(self) -> List[str]:
        return [name for name in CHECKS if self.failures[name]]

    def summary(self) -> str:
        if self.passed:
            return f"all structural checks passed ({', '.join(CHECKS)})"
        return "; ".join(f"{name}: {len(self.failures[name])} failure(s)" for name in self.failed_checks())

    def to_dict(self) -> Dict:
        return {"passed": self.passed, "failures": {k: list(v) for k, v in self.failures.items()}}


def _affine_points(lattice: FaceLattice, face: Face, seed: int) -> List[RatVec]:
    """The barycenter plus a few random affine combinations of the face's vertices."""
    points = [lattice.barycenter(face)]
    coords = lattice.vertex_coords(face)
    if len(coords) < 2:
        return points
    for i in range(AFFINE_SAMPLES):
        rng = np.random.default_rng(seed + i)
        weights = [Fraction(int(w)) for w in rng.integers(-3, 4, size=len(coords) - 1)]
        weights.append(1 - sum(weights))
        points.append(linear_combination(weights, coords))
    return points


def check_facet_factors(H: HPolytope, prep: PRepresentation) -> List[str]:
    failures = []
    top = prep.products_of_dim(H.dim - 1)
    factors = {f for p in top for f in p.factors}
    for i, (a, b) in enumerate(H.rows()):
        form = LinearForm(b, tuple(-c for c in a))
        if form not in factors:
            failures.append(f"facet form of row {i + 1} {form} is not a factor")
    return failures


def check_face_vanishing(lattice: FaceLattice, prep: PRepresentation, seed: int = 0) -> List[str]:
    failures = []
    d = lattice.dim
    for k in range(d):
        for n, face in enumerate(lattice.faces(k)):
            points = _affine_points(lattice, face, seed + 1000 * k + 10 * n)
            for j in range(k, d):
                for product in prep.products_of_dim(j):
                    for x in points:
                        if product.evaluate(x) != 0:
                            failures.append(
                                f"{product.id} does not vanish at {format_vec(x)} on face {face.facet_indices}"
                            )
                            break
    return failures


def check_support_property(lattice: FaceLattice, prep: PRepresentation) -> List[str]:
    failures = []
    vertices = lattice.vertices
    for product in prep.products:
        for factor, facets in zip(product.factors, product.faces):
            face = lattice.face(facets)
            members = set(face.vertex_ids) if face is not None else set()
            for vid, v in enumerate(vertices):
                value = factor.evaluate(v.coords)
                if value < 0 or (value == 0) != (vid in members):
                    failures.append(f"{product.id} factor {factor} at vertex {format_vec(v.coords)} is {value}")
    return failures


def check_epsilon_on_vertices(lattice: FaceLattice, prep: PRepresentation) -> List[str]:
    return [
        f"{prep.epsilon.id} exceeds 1 at vertex {format_vec(v.coords)}"
        for v in lattice.vertices
        if compare_epsilon(prep.epsilon, v.coords) > 0
    ]


def structural_checks(H: HPolytope, lattice: FaceLattice, prep: PRepresentation, seed: int = 0) -> StructuralReport:
    """Run every structural check; failures are collected, not raised."""
    report = StructuralReport()
    report.failures["facet-factor"] = check_facet_factors(H, prep)
    report.failures["face-vanishing"] = check_face_vanishing(lattice, prep, seed)
    report.failures["support"] = check_support_property(lattice, prep)
    report.failures["epsilon"] = check_epsilon_on_vertices(lattice, prep)
    for message in (m for name in CHECKS for m in report.failures[name]):
        logger.debug(message)
    logger.info(f"Structural checks: {report.summary()}")
    return report
