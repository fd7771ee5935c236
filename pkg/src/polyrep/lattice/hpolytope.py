"""
H-representations, vertex enumeration and validation.

A polytope is given as rows ``<a^i, x> <= b_i``. Vertices are found by
solving every d-subset of rows and keeping the feasible solutions; the
validator then checks boundedness, irredundancy and simplicity exactly.
"""
import hashlib
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from polyrep.exact.linalg import affine_rank, solve_square_system
from polyrep.exact.rational import RatVec, dot, format_rat, format_vec, unit_vec, vec
from polyrep.exact.simplex import LPStatus, lp_solve
from polyrep.utils import config
from polyrep.utils.errors import NoVerticesError, ResourceGuardError, ValidationError
from polyrep.utils.work_tracker import work_tracker

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HPolytope:
    """The system ``<normals[i], x> <= rhs[i]``; row indices are 0-based."""
    normals: Tuple[RatVec, ...]
    rhs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.normals) != len(self.rhs):
            raise ValueError("normals and right-hand sides differ in length")
        if not self.normals:
            raise ValueError("an H-representation needs at least one row")
        d = len(self.normals[0])
        if d == 0 or any(len(a) != d for a in self.normals):
            raise ValueError("all normals must share one positive dimension")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "HPolytope":
        """Build from rows ``(a_1, ..., a_d, b)`` of ints, Fractions or ``"p/q"`` strings."""
        parsed = [vec(row) for row in rows]
        return cls(tuple(r[:-1] for r in parsed), tuple(r[-1] for r in parsed))

    @property
    def dim(self) -> int:
        return len(self.normals[0])

    @property
    def m(self) -> int:
        return len(self.normals)

    def rows(self) -> List[Tuple[RatVec, Fraction]]:
        return list(zip(self.normals, self.rhs))

    def slack(self, i: int, x: Sequence[Fraction]) -> Fraction:
        """``b_i - <a^i, x>``; nonnegative exactly when row i holds at x."""
        return self.rhs[i] - dot(self.normals[i], x)

    def contains(self, x: Sequence[Fraction]) -> bool:
        return all(self.slack(i, x) >= 0 for i in range(self.m))

    def translated(self, t: Sequence[Fraction]) -> "HPolytope":
        """The same set expressed in coordinates ``x' = x - t``."""
        return HPolytope(self.normals, tuple(b - dot(a, t) for a, b in self.rows()))

    def with_row(self, a: Sequence[Fraction], b: Fraction) -> "HPolytope":
        return HPolytope(self.normals + (tuple(a),), self.rhs + (Fraction(b),))

    def without_row(self, i: int) -> "HPolytope":
        keep = [j for j in range(self.m) if j != i]
        return HPolytope(tuple(self.normals[j] for j in keep), tuple(self.rhs[j] for j in keep))

    def fingerprint(self) -> str:
        """sha256 over the canonical text of the rows."""
        text = "\n".join(
            " ".join(format_rat(c) for c in a) + " " + format_rat(b) for a, b in self.rows()
        )
        return hashlib.sha256(f"{self.dim} {self.m}\n{text}\n".encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class Vertex:
    coords: RatVec
    facet_set: Tuple[int, ...]


def enumerate_vertices(H: HPolytope, show_progress: Optional[bool] = None) -> List[Vertex]:
    """
    Enumerate the vertices of ``H`` by solving all d-subsets of rows.

    Args:
        H: The H-representation.
        show_progress: Show a tqdm bar; defaults to the POLYREP_PROGRESS setting.

    Returns:
        Vertices sorted by their facet sets.

    Raises:
        ResourceGuardError: If d or the number of row subsets exceeds the configured limits.
        NoVerticesError: If no feasible vertex exists.
    """
    d, m = H.dim, H.m
    max_dim = config.setting('MAX_DIMENSION')
    if d > max_dim:
        raise ResourceGuardError(f"dimension {d} exceeds the limit of {max_dim}")
    subsets = comb(m, d)
    max_subsets = config.setting('MAX_VERTEX_SUBSETS')
    if subsets > max_subsets:
        raise ResourceGuardError(f"{subsets} row subsets exceed the limit of {max_subsets}")
    if show_progress is None:
        show_progress = config.SHOW_PROGRESS

    found: Dict[RatVec, Tuple[int, ...]] = {}
    for subset in tqdm(combinations(range(m), d), total=subsets, desc="Vertex subsets",
                       disable=not show_progress or subsets < 1000, leave=False):
        work_tracker.track("vertex_subsets")
        point = solve_square_system([H.normals[i] for i in subset], [H.rhs[i] for i in subset])
        if point is None or point in found:
            continue
        slacks = [H.slack(i, point) for i in range(m)]
        if any(s < 0 for s in slacks):
            continue
        found[point] = tuple(i for i, s in enumerate(slacks) if s == 0)

    if not found:
        raise NoVerticesError("no vertices: no d rows meet in a feasible point")

    vertices = sorted((Vertex(p, f) for p, f in found.items()), key=lambda v: (v.facet_set, v.coords))
    logger.debug(f"Enumerated {len(vertices)} vertices from {subsets} row subsets")
    return vertices


class ViolationKind(str, Enum):
    UNBOUNDED_DIRECTION = "unbounded-direction"
    REDUNDANT_ROW = "redundant-row"
    NON_SIMPLE_VERTEX = "non-simple-vertex"
    LOW_DIMENSIONAL = "low-dimensional"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    message: str
    index: Optional[int] = None
    witness: Optional[RatVec] = None
    active: Optional[Tuple[int, ...]] = None


@dataclass
class ValidationReport:
    dim: int
    rows: int
    vertex_count: int
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def bounded(self) -> bool:
        return not self.of_kind(ViolationKind.UNBOUNDED_DIRECTION)

    @property
    def simple(self) -> bool:
        return not self.of_kind(ViolationKind.NON_SIMPLE_VERTEX)

    def of_kind(self, kind: ViolationKind) -> List[Violation]:
        return [v for v in self.violations if v.kind == kind]

    def summary(self) -> str:
        if self.valid:
            return f"valid simple {self.dim}-polytope: {self.rows} rows, {self.vertex_count} vertices"
        return "; ".join(v.message for v in self.violations)


def find_unbounded_directions(H: HPolytope) -> List[RatVec]:
    """Rays returned by maximizing ``±x_j`` over H, one per unbounded direction."""
    rays = []
    for j in range(H.dim):
        for sign in (1, -1):
            result = lp_solve(unit_vec(H.dim, j, sign), H.normals, H.rhs, sense="max")
            if result.status == LPStatus.UNBOUNDED and result.witness not in rays:
                rays.append(result.witness)
    return rays


def is_redundant_row(H: HPolytope, i: int) -> bool:
    """Row i is redundant when max <a^i, x> over the other rows stays <= b_i."""
    others = H.without_row(i)
    result = lp_solve(H.normals[i], others.normals, others.rhs, sense="max")
    return result.status == LPStatus.OPTIMAL and result.optimum <= H.rhs[i]


def validate_hrep(H: HPolytope, vertices: Sequence[Vertex]) -> ValidationReport:
    """
    Check that H describes a bounded, irredundant, simple, full-dimensional polytope.

    Args:
        H: The H-representation.
        vertices: Output of ``enumerate_vertices(H)``.

    Returns:
        A report listing every violation with its witness. Row numbers in
        messages are 1-based; ``Violation.index`` is 0-based.
    """
    report = ValidationReport(dim=H.dim, rows=H.m, vertex_count=len(vertices))

    for ray in find_unbounded_directions(H):
        report.violations.append(Violation(
            ViolationKind.UNBOUNDED_DIRECTION,
            f"unbounded in direction {format_vec(ray)}",
            witness=ray,
        ))

    for i in range(H.m):
        if is_redundant_row(H, i):
            report.violations.append(Violation(
                ViolationKind.REDUNDANT_ROW, f"row {i + 1} is redundant", index=i,
            ))

    for v in vertices:
        if len(v.facet_set) != H.dim:
            report.violations.append(Violation(
                ViolationKind.NON_SIMPLE_VERTEX,
                f"vertex {format_vec(v.coords)} lies in {len(v.facet_set)} facets "
                f"(rows {', '.join(str(i + 1) for i in v.facet_set)})",
                witness=v.coords,
                active=v.facet_set,
            ))

    if vertices and report.bounded:
        span = affine_rank([v.coords for v in vertices])
        if span < H.dim:
            report.violations.append(Violation(
                ViolationKind.LOW_DIMENSIONAL,
                f"vertices span only a {span}-dimensional affine subspace",
            ))

    if report.valid:
        logger.debug(report.summary())
    else:
        logger.debug(f"Validation found {len(report.violations)} violation(s)")
    return report


def raise_if_invalid(report: ValidationReport):
    """Raise ``ValidationError`` carrying the report unless it is clean."""
    if not report.valid:
        raise ValidationError(report.summary(), report)


def require_simple_polytope(H: HPolytope) -> List[Vertex]:
    """Enumerate and validate; return the vertices of a valid simple polytope."""
    vertices = enumerate_vertices(H)
    raise_if_invalid(validate_hrep(H, vertices))
    logger.info(f"Validated {H.dim}-polytope with {H.m} facets and {len(vertices)} vertices")
    return vertices
