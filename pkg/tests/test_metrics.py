import math
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from polyrep.construction.weights import weight_sets
from polyrep.exact.rational import vec
from polyrep.lattice.faces import build_face_lattice
from polyrep.lattice.hpolytope import HPolytope, require_simple_polytope
from polyrep.metrics.bundle import (
    choose_eps_bar,
    choose_exponent,
    compute_metrics,
    eps_bar_is_admissible,
    exponent_float_bound,
)
from polyrep.metrics.support import diameter_sq, diameter_upper, recenter, support_value
from polyrep.metrics.wedge import (
    INFINITY,
    Wedge,
    convex_hull_2d,
    face_epsilon_sq,
    reduced_distance_sq,
    wedge_distance_sq,
)
from polyrep.utils.errors import ConstructionError


def test_support_value_of_dodecahedron(dodecahedron_lattice):
    vertices = dodecahedron_lattice.vertices
    assert support_value(vertices, vec([0, -3, -2])) == 6
    assert support_value(vertices, vec([6, 0, 0])) == 11
    assert support_value(vertices, vec([0, 0, 0])) == 0


def test_recentering_a_centered_square(square, square_lattice):
    shifted, t = recenter(square, square_lattice.vertices)
    assert t == (0, 0)
    assert shifted == square


def test_recentering_dodecahedron_keeps_rhs_positive(dodecahedron, dodecahedron_lattice):
    shifted, t = recenter(dodecahedron, dodecahedron_lattice.vertices)
    assert all(b > 0 for b in shifted.rhs)
    assert t == tuple(sum(c) / 20 for c in zip(*(v.coords for v in dodecahedron_lattice.vertices)))


def test_square_diameter(square_lattice):
    d_sq = diameter_sq(square_lattice.vertices)
    assert d_sq == 8
    upper = diameter_upper(d_sq)
    assert upper * upper >= 8
    assert float(upper) == pytest.approx(math.sqrt(8), abs=1e-4)


def test_dodecahedron_diameter_is_at_most_four(dodecahedron_lattice):
    assert diameter_sq(dodecahedron_lattice.vertices) <= 16


def test_square_wedge_between_vertex_supports(square, square_lattice):
    W = Wedge(vec([1, 1]), Fraction(2), vec([1, -1]), Fraction(2))
    assert wedge_distance_sq(square, square_lattice, W) == 1


def test_wedge_through_a_vertex_has_distance_zero(square, square_lattice):
    # both hyperplanes pass through (1, 1)
    W = Wedge(vec([1, 1]), Fraction(2), vec([1, 0]), Fraction(1))
    assert wedge_distance_sq(square, square_lattice, W) == 0


def test_empty_wedge_is_infinitely_far(square, square_lattice):
    W = Wedge(vec([1, 0]), Fraction(1), vec([-1, 0]), Fraction(1))
    assert wedge_distance_sq(square, square_lattice, W) == INFINITY


def test_parallel_wedge_with_same_direction(square, square_lattice):
    W = Wedge(vec([1, 0]), Fraction(3), vec([2, 0]), Fraction(4))
    assert wedge_distance_sq(square, square_lattice, W) == 4


def test_square_face_epsilons(square, square_lattice):
    assert face_epsilon_sq(square, square_lattice, 0, weight_sets(2, 0)) == 1
    assert face_epsilon_sq(square, square_lattice, 1, weight_sets(2, 1)) == INFINITY


def test_wedge_zero_exactly_when_facets_meet_in_a_vertex(dodecahedron, dodecahedron_lattice):
    vertices = dodecahedron_lattice.vertices
    for i, j in combinations(range(dodecahedron.m), 2):
        W = Wedge(dodecahedron.normals[i], dodecahedron.rhs[i], dodecahedron.normals[j], dodecahedron.rhs[j])
        meet = any(i in v.facet_set and j in v.facet_set for v in vertices)
        value = wedge_distance_sq(dodecahedron, dodecahedron_lattice, W)
        assert (value == 0) == meet, (i, j)


def test_wedge_zero_criterion_on_square_vertex_pairs(square, square_lattice):
    faces = square_lattice.faces(0)
    for F, G in combinations(faces, 2):
        a, h_a = F.support_vector(square, (1, 1))
        b, h_b = G.support_vector(square, (1, 1))
        value = wedge_distance_sq(square, square_lattice, Wedge(a, h_a, b, h_b))
        meet = any(
            sum(x * y for x, y in zip(a, v.coords)) == h_a and sum(x * y for x, y in zip(b, v.coords)) == h_b
            for v in square_lattice.vertices
        )
        assert (value == 0) == meet


def _boundary_minimum(slacks, gram):
    """Float minimum of u^T G^-1 u sampled along the boundary of conv(slacks) + R^2_+."""
    G = np.array([[float(gram[0]), float(gram[1])], [float(gram[1]), float(gram[2])]])
    inverse = np.linalg.inv(G)
    pts = np.array([[float(s), float(t)] for s, t in slacks])
    hull = np.array([[float(s), float(t)] for s, t in convex_hull_2d(slacks)])
    lam = np.linspace(0.0, 1.0, 2001)[:, None]
    candidates = [pts]
    for p, q in zip(hull, np.roll(hull, -1, axis=0)):
        candidates.append(p + lam * (q - p))
    tau = np.linspace(0.0, 100.0, 40001)[:, None]
    for p in hull:
        candidates.append(p + tau * np.array([1.0, 0.0]))
        candidates.append(p + tau * np.array([0.0, 1.0]))
    u = np.vstack(candidates)
    return float(np.min(np.einsum("ij,jk,ik->i", u, inverse, u)))


@pytest.mark.parametrize("seed", range(8))
def test_reduced_distance_matches_float_oracle(seed):
    rng = np.random.default_rng(seed)
    slacks = [(Fraction(int(s)), Fraction(int(t))) for s, t in rng.integers(0, 10, size=(6, 2))]
    slacks = [p for p in slacks if p != (0, 0)] or [(Fraction(1), Fraction(2))]
    a, b = rng.integers(-3, 4, size=(2, 2))
    while a[0] * b[1] == a[1] * b[0]:
        a, b = rng.integers(-3, 4, size=(2, 2))
    gram = (Fraction(int(a @ a)), Fraction(int(a @ b)), Fraction(int(b @ b)))
    exact = reduced_distance_sq(slacks, gram)
    approx = _boundary_minimum(slacks, gram)
    assert float(exact) <= approx + 1e-9
    assert approx == pytest.approx(float(exact), rel=1e-3, abs=1e-3)


def test_choose_eps_bar():
    assert choose_eps_bar([Fraction(1), INFINITY]) == Fraction(1, 2)
    assert choose_eps_bar([INFINITY, INFINITY]) == 1
    tiny = Fraction(1, 10 ** 12)
    q = choose_eps_bar([tiny])
    assert 0 < q and q * q < tiny


def test_eps_bar_admissibility():
    assert eps_bar_is_admissible(Fraction(3, 100), [Fraction(1, 100), INFINITY])
    assert not eps_bar_is_admissible(Fraction(1, 10), [Fraction(1, 100)])
    assert not eps_bar_is_admissible(Fraction(0), [INFINITY])


def test_exponent_for_dodecahedron_values():
    p = choose_exponent(12, 3, Fraction(3, 100), Fraction(4), rho_mode="dimension")
    assert p == 332
    base = 1 + 2 * Fraction(3, 100) * Fraction(1, 4) / 4
    assert base ** (2 * p) > 12
    assert base ** (2 * (p - 1)) <= 12


def test_exponent_with_a_single_facet():
    assert choose_exponent(1, 2, Fraction(1, 2), Fraction(3), rho_mode="dimension") == 1


def test_square_exponent_in_dimension_mode():
    p = choose_exponent(4, 2, Fraction(1, 2), Fraction(23, 8), rho_mode="dimension")
    assert p == 7
    assert exponent_float_bound(4, Fraction(1, 2), Fraction(23, 8), Fraction(1, 3)) <= p


def test_exponent_rejects_bad_input():
    with pytest.raises(ValueError):
        choose_exponent(4, 2, Fraction(0), Fraction(1), rho_mode="dimension")
    with pytest.raises(ValueError):
        choose_exponent(4, 2, Fraction(1, 2), Fraction(1), rho_mode="exact")
    with pytest.raises(ConstructionError):
        choose_exponent(4, 2, Fraction(1, 2), Fraction(1), rho_mode="dimension", r_min=Fraction(1, 5))


def test_dodecahedron_epsilons_respect_published_bounds(dodecahedron_metrics):
    eps = dodecahedron_metrics.eps_k_sq
    assert eps[2] > Fraction(1, 100)
    assert eps[1] > Fraction(9, 2500)
    assert eps[0] > Fraction(9, 10000)
    assert dodecahedron_metrics.exponent_p == 332
    assert dodecahedron_metrics.rho == Fraction(1, 4)
    assert dodecahedron_metrics.r_min >= Fraction(1, 4)


def test_dodecahedron_slab_widths(dodecahedron, dodecahedron_metrics):
    h_minus = dodecahedron_metrics.h_minus_original
    assert h_minus[0] == 6
    for a, b, hm in zip(dodecahedron.normals, dodecahedron.rhs, h_minus):
        assert b + hm > 0


def test_square_metrics_in_exact_mode(square, square_lattice):
    weights = {k: weight_sets(2, k) for k in range(2)}
    metrics = compute_metrics(square, square_lattice, weights, rho_mode="exact")
    assert metrics.eps_bar == Fraction(1, 2)
    assert metrics.r_min == Fraction(1, 2)
    assert metrics.exponent_p == 5


def test_inadmissible_overrides_are_refused(square, square_lattice):
    weights = {k: weight_sets(2, k) for k in range(2)}
    with pytest.raises(ConstructionError, match="eps_bar"):
        compute_metrics(square, square_lattice, weights, eps_bar=Fraction(1))
    with pytest.raises(ConstructionError, match="diam_upper"):
        compute_metrics(square, square_lattice, weights, diam_upper=Fraction(2))


def test_dimension_mode_is_refused_for_lopsided_polytopes():
    # pentagon whose vertex barycenter sits low: (0,0) (6,0) (7,1) (3,12) (-1,1)
    H = HPolytope.from_rows([[0, -1, 0], [1, -1, 6], [11, 4, 81], [-11, 4, 15], [-1, -1, 0]])
    lattice = build_face_lattice(H, require_simple_polytope(H))
    weights = {k: weight_sets(2, k) for k in range(2)}
    metrics = compute_metrics(H, lattice, weights, rho_mode="exact")
    assert metrics.r_min < Fraction(1, 3)
    assert metrics.rho == metrics.r_min
    with pytest.raises(ConstructionError, match="dimension"):
        compute_metrics(H, lattice, weights, rho_mode="dimension")


def _random_exponent_inputs(seed):
    rng = np.random.default_rng(seed)
    m = int(rng.integers(2, 50))
    d = int(rng.integers(2, 6))
    eps_bar = Fraction(int(rng.integers(1, 21)), 20)
    diam_upper = Fraction(int(rng.integers(4, 17)), 4)
    return m, d, eps_bar, diam_upper


@pytest.mark.parametrize("seed", range(25))
def test_exponent_is_monotone(seed):
    m, d, eps_bar, diam_upper = _random_exponent_inputs(seed)
    p = choose_exponent(m, d, eps_bar, diam_upper, rho_mode="dimension")
    assert choose_exponent(m, d, eps_bar * 2, diam_upper, rho_mode="dimension") <= p
    assert choose_exponent(m, d, eps_bar + Fraction(1, 100), diam_upper, rho_mode="dimension") <= p
    assert choose_exponent(m, d, eps_bar, diam_upper * 2, rho_mode="dimension") >= p


@pytest.mark.parametrize("seed", range(25))
def test_float_bound_is_within_one_of_the_exponent(seed):
    m, d, eps_bar, diam_upper = _random_exponent_inputs(seed)
    p = choose_exponent(m, d, eps_bar, diam_upper, rho_mode="dimension")
    bound = exponent_float_bound(m, eps_bar, diam_upper, Fraction(1, d + 1))
    assert abs(p - bound) <= 1 + 1e-9


def test_float_bound_for_the_dodecahedron():
    bound = exponent_float_bound(12, Fraction(3, 100), Fraction(4), Fraction(1, 4))
    assert 331 <= bound <= 332
