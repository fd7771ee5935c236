"""Polynomial representations: face products, epsilon polynomial, lifts and projective pullbacks."""
from polyrep.construction.closed_forms import (
    PyramidLift,
    closed_form_hrep,
    closed_form_rep,
    prism_hrep,
    prism_lift,
    pyramid_hrep,
    pyramid_lift,
)
from polyrep.construction.epsilon import EPSILON_ID, EpsilonPoly, EpsilonTerm, epsilon_poly
from polyrep.construction.forms import (
    LinearForm,
    ProductPoly,
    face_product_poly,
    face_support_form,
    polynomial_id,
)
from polyrep.construction.prep import CONVENTION, PRepMetadata, PRepresentation, assemble_prep, construct_prep
from polyrep.construction.projective import (
    PolyhedronPRep,
    ProjectiveImage,
    construct_polyhedron_prep,
    projectivize_pointed,
    pullback_prep,
    pullback_structured,
)
from polyrep.construction.sparse import SparsePoly
from polyrep.construction.weights import WeightVector, mu_count, weight_sets

__all__ = [
    'WeightVector',
    'weight_sets',
    'mu_count',
    'SparsePoly',
    'LinearForm',
    'ProductPoly',
    'polynomial_id',
    'face_support_form',
    'face_product_poly',
    'EPSILON_ID',
    'EpsilonTerm',
    'EpsilonPoly',
    'epsilon_poly',
    'CONVENTION',
    'PRepMetadata',
    'PRepresentation',
    'assemble_prep',
    'construct_prep',
    'closed_form_rep',
    'closed_form_hrep',
    'prism_lift',
    'prism_hrep',
    'PyramidLift',
    'pyramid_lift',
    'pyramid_hrep',
    'ProjectiveImage',
    'PolyhedronPRep',
    'projectivize_pointed',
    'pullback_prep',
    'pullback_structured',
    'construct_polyhedron_prep',
]
