"""Shared fixtures: the skew dodecahedron, the square, cubes and random polygons."""
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

import numpy as np
import pytest

from polyrep.construction.closed_forms import closed_form_hrep
from polyrep.construction.prep import assemble_prep, construct_prep
from polyrep.construction.weights import weight_sets
from polyrep.formats.hrep import load_hrep
from polyrep.lattice.faces import build_face_lattice
from polyrep.lattice.hpolytope import HPolytope, enumerate_vertices, require_simple_polytope
from polyrep.metrics.bundle import compute_metrics
from polyrep.metrics.wedge import convex_hull_2d
from polyrep.utils import config

DATA_DIR = Path(__file__).resolve().parents[1] / "data"

# Values published for the skew dodecahedron
DODECAHEDRON_EPS_BAR = Fraction(3, 100)
DODECAHEDRON_DIAM_UPPER = Fraction(4)


@pytest.fixture(autouse=True, scope="session")
def quiet_progress():
    previous = config.SHOW_PROGRESS
    config.SHOW_PROGRESS = False
    yield
    config.SHOW_PROGRESS = previous


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def dodecahedron() -> HPolytope:
    return load_hrep(str(DATA_DIR / "dodecahedron.hrep"))


@pytest.fixture(scope="session")
def dodecahedron_lattice(dodecahedron):
    return build_face_lattice(dodecahedron, require_simple_polytope(dodecahedron))


@pytest.fixture(scope="session")
def dodecahedron_metrics(dodecahedron, dodecahedron_lattice):
    weights = {k: weight_sets(3, k) for k in range(3)}
    return compute_metrics(
        dodecahedron,
        dodecahedron_lattice,
        weights,
        rho_mode="dimension",
        eps_bar=DODECAHEDRON_EPS_BAR,
        diam_upper=DODECAHEDRON_DIAM_UPPER,
    )


@pytest.fixture(scope="session")
def dodecahedron_prep(dodecahedron, dodecahedron_lattice, dodecahedron_metrics):
    return assemble_prep(dodecahedron, dodecahedron_lattice, dodecahedron_metrics)


@pytest.fixture(scope="session")
def square() -> HPolytope:
    return load_hrep(str(DATA_DIR / "square.hrep"))


@pytest.fixture(scope="session")
def square_lattice(square):
    return build_face_lattice(square, enumerate_vertices(square))


@pytest.fixture(scope="session")
def square_prep(square):
    return construct_prep(square, rho_mode="exact")


@pytest.fixture(scope="session")
def cube3() -> HPolytope:
    return closed_form_hrep("cube", 3)


@pytest.fixture(scope="session")
def cube3_prep(cube3):
    return construct_prep(cube3)


@pytest.fixture(scope="session")
def cube4() -> HPolytope:
    return closed_form_hrep("cube", 4)


@pytest.fixture(scope="session")
def cube4_prep(cube4):
    return construct_prep(cube4)


@pytest.fixture(scope="session")
def orthant2() -> HPolytope:
    return load_hrep(str(DATA_DIR / "orthant.hrep"))


def random_polygon(seed: int, points: int = 12, radius: int = 6) -> Optional[HPolytope]:
    """Integer hull of random lattice points; None unless it has 6 to 12 edges."""
    rng = np.random.default_rng(seed)
    raw = rng.integers(-radius, radius + 1, size=(points, 2))
    hull = convex_hull_2d([(Fraction(int(x)), Fraction(int(y))) for x, y in raw])
    if not 6 <= len(hull) <= 12:
        return None
    rows = []
    # hull is counter-clockwise, so (dy, -dx) points outwards
    for p, q in zip(hull, hull[1:] + hull[:1]):
        normal = (q[1] - p[1], -(q[0] - p[0]))
        rows.append(normal + (normal[0] * p[0] + normal[1] * p[1],))
    return HPolytope.from_rows(rows)


@pytest.fixture(scope="session")
def random_polygons() -> List[HPolytope]:
    polygons = []
    seed = 0
    while len(polygons) < 5:
        polygon = random_polygon(seed)
        if polygon is not None:
            polygons.append(polygon)
        seed += 1
    return polygons


def random_box_points(seed: int, lo, hi, count: int, resolution: int = 64):
    """Rational points on a regular grid of the box, drawn with numpy."""
    rng = np.random.default_rng(seed)
    steps = rng.integers(0, resolution + 1, size=(count, len(lo)))
    return [
        tuple(Fraction(l) + (Fraction(h) - Fraction(l)) * Fraction(int(s), resolution)
              for l, h, s in zip(lo, hi, row))
        for row in steps
    ]


@pytest.fixture
def box_points():
    return random_box_points
