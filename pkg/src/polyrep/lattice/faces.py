"""Face lattice of a simple polytope."""
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from polyrep.exact.rational import RatVec, centroid
from polyrep.lattice.hpolytope import HPolytope, Vertex
from polyrep.utils.errors import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Face:
    """A k-face, named by the increasing indices of the d-k facets containing it."""
    k: int
    facet_indices: Tuple[int, ...]
    vertex_ids: Tuple[int, ...]

    def support_vector(self, H: HPolytope, w: Sequence[int]) -> Tuple[RatVec, Fraction]:
        """
        Weighted sum of the facet normals containing this face.

        Args:
            H: The H-representation the face belongs to.
            w: Positive weights aligned with ``facet_indices``.

        Returns:
            Tuple ``(a, h)`` with ``a = sum w_j a^{F_j}`` and ``h = sum w_j b_{F_j}``,
            which equals the support value of ``a`` since every facet attains its
            maximum on the whole face.

        Raises:
            ValueError: If ``len(w)`` differs from the number of facets.
        """
        if len(w) != len(self.facet_indices):
            raise ValueError(
                f"weight vector of length {len(w)} for a face in {len(self.facet_indices)} facets"
            )
        a = [Fraction(0)] * H.dim
        h = Fraction(0)
        for weight, i in zip(w, self.facet_indices):
            for j, c in enumerate(H.normals[i]):
                a[j] += weight * c
            h += weight * H.rhs[i]
        return tuple(a), h


@dataclass
class FaceLattice:
    dim: int
    faces_by_dim: Dict[int, List[Face]]
    vertices: List[Vertex]

    def __post_init__(self):
        self._by_facets = {
            face.facet_indices: face for faces in self.faces_by_dim.values() for face in faces
        }

    @property
    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(self.faces_by_dim[k]) for k in range(self.dim))

    def faces(self, k: int) -> List[Face]:
        return self.faces_by_dim[k]

    def face(self, facet_indices: Sequence[int]) -> Optional[Face]:
        return self._by_facets.get(tuple(sorted(facet_indices)))

    def vertex_coords(self, face: Face) -> List[RatVec]:
        return [self.vertices[i].coords for i in face.vertex_ids]

    def barycenter(self, face: Face) -> RatVec:
        return centroid(self.vertex_coords(face))

    def superface(self, face: Face, k: int) -> Face:
        """
        The first k-face (in canonical order) containing ``face``.

        Raises:
            ValueError: If k is below the face's own dimension or out of range.
        """
        if not face.k <= k < self.dim:
            raise ValueError(f"no {k}-face can contain a {face.k}-face")
        for facets in combinations(face.facet_indices, self.dim - k):
            candidate = self._by_facets.get(facets)
            if candidate is not None:
                return candidate
        raise ValueError(f"face {face.facet_indices} has no {k}-dimensional superface")

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * f for k, f in enumerate(self.f_vector))


def build_face_lattice(H: HPolytope, vertices: Sequence[Vertex]) -> FaceLattice:
    """
    Build all k-faces, k = 0 ... d-1, of a validated simple polytope.

    Each (d-k)-subset of a vertex's facet set names a k-face through that
    vertex; the face's vertices are exactly those whose facet set contains
    the subset.

    Raises:
        ValidationError: If some vertex is not simple.
    """
    d = H.dim
    for v in vertices:
        if len(v.facet_set) != d:
            raise ValidationError(f"vertex {v.coords} is not simple; no face lattice built")

    faces_by_dim: Dict[int, List[Face]] = {}
    for k in range(d):
        members: Dict[Tuple[int, ...], List[int]] = defaultdict(list)
        for vid, v in enumerate(vertices):
            for subset in combinations(v.facet_set, d - k):
                members[subset].append(vid)
        faces_by_dim[k] = [
            Face(k=k, facet_indices=facets, vertex_ids=tuple(ids))
            for facets, ids in sorted(members.items())
        ]

    lattice = FaceLattice(dim=d, faces_by_dim=faces_by_dim, vertices=list(vertices))
    logger.info(f"Face lattice f-vector: {lattice.f_vector}")
    return lattice
