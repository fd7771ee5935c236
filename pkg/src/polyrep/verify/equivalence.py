"""
Randomized comparison of the two membership oracles.

Points are drawn from five classes: convex combinations of vertices, face
barycenters, points just outside faces, far points and uniform points in
the doubled bounding box. Every coordinate is an exact rational; the random
draws for sample i come from ``default_rng(seed + i)``.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from polyrep.construction.prep import PRepresentation
from polyrep.exact.rational import RatVec, add, format_vec, linear_combination, norm_sq, scale, sqrt_upper
from polyrep.lattice.faces import FaceLattice, build_face_lattice
from polyrep.lattice.hpolytope import HPolytope, enumerate_vertices
from polyrep.utils import config as settings
from polyrep.utils.work_tracker import work_tracker
from polyrep.verify.evaluate import member_hrep, member_prep

logger = logging.getLogger(__name__)

CLASSES = ("interior", "boundary", "near-outside", "far-outside", "box")
NEAR_STEPS = (Fraction(1, 4), Fraction(1, 2), Fraction(2), Fraction(4))
BOX_RESOLUTION = 1 << 10
WEIGHT_RANGE = 1000


@dataclass
class EquivalenceConfig:
    seed: int = 0
    samples: int = 10000


@dataclass(frozen=True)
class Sample:
    index: int
    kind: str
    point: RatVec


@dataclass(frozen=True)
class Disagreement:
    index: int
    kind: str
    point: RatVec
    hrep_inside: bool
    prep_inside: bool
    violated: Sequence[str] = ()

    def describe(self) -> str:
        return (f"sample {self.index} ({self.kind}) at {format_vec(self.point)}: "
                f"H-rep {'inside' if self.hrep_inside else 'outside'}, "
                f"P-rep {'inside' if self.prep_inside else 'outside'}")


@dataclass
class EquivalenceReport:
    seed: int
    counts: Dict[str, int] = field(default_factory=lambda: {kind: 0 for kind in CLASSES})
    inside: Dict[str, int] = field(default_factory=lambda: {kind: 0 for kind in CLASSES})
    disagreements: List[Disagreement] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def passed(self) -> bool:
        return not self.disagreements

    def summary(self) -> str:
        per_class = ", ".join(f"{kind}: {self.counts[kind]}" for kind in CLASSES)
        return f"{self.total} samples ({per_class}), {len(self.disagreements)} disagreement(s)"

    def to_dict(self) -> Dict:
        return {
            "seed": self.seed,
            "samples": dict(self.counts),
            "inside": dict(self.inside),
            "disagreements": [
                {
                    "index": d.index,
                    "class": d.kind,
                    "point": [str(c) for c in d.point],
                    "member_hrep": d.hrep_inside,
                    "member_prep": d.prep_inside,
                    "violated": list(d.violated),
                }
                for d in self.disagreements
            ],
        }


def _bounding_box(points: Sequence[RatVec]):
    lo = tuple(min(c) for c in zip(*points))
    hi = tuple(max(c) for c in zip(*points))
    return lo, hi


def _interior_point(rng: np.random.Generator, vertices: Sequence[RatVec], d: int) -> RatVec:
    size = int(rng.integers(1, min(d + 1, len(vertices)) + 1))
    chosen = rng.choice(len(vertices), size=size, replace=False)
    weights = [Fraction(int(w)) for w in rng.integers(1, WEIGHT_RANGE, size=size)]
    total = sum(weights)
    return linear_combination([w / total for w in weights], [vertices[int(i)] for i in chosen])


def _box_point(rng: np.random.Generator, lo: RatVec, hi: RatVec) -> RatVec:
    steps = rng.integers(0, BOX_RESOLUTION + 1, size=len(lo))
    return tuple(l + (h - l) * Fraction(int(s), BOX_RESOLUTION) for l, h, s in zip(lo, hi, steps))


def sample_points(
    H: HPolytope,
    lattice: FaceLattice,
    eps_bar: Fraction,
    config: Optional[EquivalenceConfig] = None,
) -> List[Sample]:
    """
    Draw the deterministic sample set for H.

    Boundary, near-outside and far-outside points are enumerated in full; the
    remaining budget is split between interior and box points.
    """
    config = config or EquivalenceConfig()
    d = H.dim
    vertices = [v.coords for v in lattice.vertices]
    samples: List[Sample] = []

    def push(kind: str, point: RatVec):
        samples.append(Sample(len(samples), kind, point))

    for k in range(d):
        for face in lattice.faces(k):
            push("boundary", lattice.barycenter(face))
    lengths = [sqrt_upper(norm_sq(a)) for a in H.normals]
    for k in range(d):
        for face in lattice.faces(k):
            center = lattice.barycenter(face)
            for i in face.facet_indices:
                for step in NEAR_STEPS:
                    push("near-outside", add(center, scale(H.normals[i], step * eps_bar / lengths[i])))

    lo, hi = _bounding_box(vertices)
    middle = tuple((l + h) / 2 for l, h in zip(lo, hi))
    for corner_bits in range(2 ** d):
        corner = tuple(hi[j] if corner_bits >> j & 1 else lo[j] for j in range(d))
        push("far-outside", tuple(m + 2 * (c - m) for m, c in zip(middle, corner)))

    remaining = max(config.samples - len(samples), 0)
    interior = remaining // 2
    box_lo = tuple(m - (h - l) for m, l, h in zip(middle, lo, hi))
    box_hi = tuple(m + (h - l) for m, l, h in zip(middle, lo, hi))
    for _ in range(interior):
        rng = np.random.default_rng(config.seed + len(samples))
        push("interior", _interior_point(rng, vertices, d))
    for _ in range(remaining - interior):
        rng = np.random.default_rng(config.seed + len(samples))
        push("box", _box_point(rng, box_lo, box_hi))
    return samples


def compare_oracles(
    samples: Sequence[Sample],
    hrep_oracle: Callable[[RatVec], bool],
    prep_oracle: Callable[[RatVec], Tuple[bool, Sequence[str]]],
    seed: int = 0,
    show_progress: Optional[bool] = None,
) -> EquivalenceReport:
    """
    Run both oracles on every sample.

    Args:
        samples: Points to test.
        hrep_oracle: Returns True for points of the polytope.
        prep_oracle: Returns ``(inside, violated_ids)``.
    """
    if show_progress is None:
        show_progress = settings.SHOW_PROGRESS
    report = EquivalenceReport(seed=seed)
    for sample in tqdm(samples, desc="Equivalence samples", disable=not show_progress, leave=False):
        work_tracker.track("samples")
        report.counts[sample.kind] += 1
        expected = hrep_oracle(sample.point)
        actual, violated = prep_oracle(sample.point)
        if expected:
            report.inside[sample.kind] += 1
        if expected != actual:
            disagreement = Disagreement(sample.index, sample.kind, sample.point, expected, actual, tuple(violated))
            logger.warning(f"Disagreement: {disagreement.describe()}")
            report.disagreements.append(disagreement)
    report.disagreements.sort(key=lambda d: d.index)
    return report


def equivalence_test(
    H: HPolytope,
    prep: PRepresentation,
    config: Optional[EquivalenceConfig] = None,
    lattice: Optional[FaceLattice] = None,
    mode: str = "guarded",
) -> EquivalenceReport:
    """
    Compare ``member_hrep`` and ``member_prep`` on the sample classes.

    Args:
        H: The validated H-representation.
        prep: A representation constructed from H.
        config: Seed and sample budget.
        lattice: Face lattice of H; built when omitted.
        mode: Epsilon evaluation mode for ``member_prep``.

    Returns:
        Report with per-class counts and all disagreements.
    """
    config = config or EquivalenceConfig(seed=settings.setting('DEFAULT_SEED'),
                                         samples=settings.setting('DEFAULT_SAMPLES'))
    if lattice is None:
        lattice = build_face_lattice(H, enumerate_vertices(H))
    eps_bar = prep.metadata.eps_bar or Fraction(1)
    samples = sample_points(H, lattice, eps_bar, config)

    def prep_oracle(x):
        verdict = member_prep(prep, x, mode=mode, exhaustive=False)
        return verdict.inside, verdict.violated_ids

    report = compare_oracles(samples, lambda x: member_hrep(H, x).inside, prep_oracle, seed=config.seed)
    logger.info(f"Equivalence: {report.summary()}")
    return report
