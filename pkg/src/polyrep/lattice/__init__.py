"""H-representations, validation and face lattices."""
from polyrep.lattice.faces import Face, FaceLattice, build_face_lattice
from polyrep.lattice.hpolytope import (
    HPolytope,
    ValidationReport,
    Vertex,
    Violation,
    ViolationKind,
    enumerate_vertices,
    raise_if_invalid,
    require_simple_polytope,
    validate_hrep,
)

__all__ = [
    'HPolytope',
    'Vertex',
    'Violation',
    'ViolationKind',
    'ValidationReport',
    'enumerate_vertices',
    'validate_hrep',
    'raise_if_invalid',
    'require_simple_polytope',
    'Face',
    'FaceLattice',
    'build_face_lattice',
]
