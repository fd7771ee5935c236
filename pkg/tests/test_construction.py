from dataclasses import replace
from fractions import Fraction
from itertools import permutations

import pytest

from polyrep.construction.epsilon import EPSILON_ID, EpsilonPoly, EpsilonTerm
from polyrep.construction.forms import LinearForm, polynomial_id
from polyrep.construction.prep import construct_prep
from polyrep.construction.sparse import SparsePoly
from polyrep.construction.weights import mu_count, weight_sets
from polyrep.exact.rational import vec
from polyrep.lattice.faces import build_face_lattice
from polyrep.lattice.hpolytope import enumerate_vertices
from polyrep.utils import config
from polyrep.utils.errors import ConstructionError, ResourceGuardError, ValidationError
from polyrep.verify.evaluate import eval_product


def test_reduced_weight_set_in_codimension_three():
    assert weight_sets(3, 0) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]


def test_full_weight_sets():
    assert weight_sets(3, 2) == [(1,)]
    assert weight_sets(3, 1) == [(1, 1)]
    vectors = weight_sets(4, 0)
    assert len(vectors) == 81
    assert vectors == sorted(vectors)
    assert set(x for w in vectors for x in w) == {1, 2, 4}
    with pytest.raises(ValueError):
        weight_sets(3, 3)


@pytest.mark.parametrize("d, mu", [(2, 3), (3, 6), (4, 87), (5, 1111)])
def test_mu_count(d, mu):
    assert mu_count(d) == mu


def test_mu_count_stays_below_d_to_the_d():
    for d in range(2, 7):
        assert mu_count(d) < d ** d
    with pytest.raises(ValueError):
        mu_count(1)


def test_linear_form_rendering():
    assert LinearForm(Fraction(10), vec([-2, -3, -5])).render() == "10-2x1-3x2-5x3"
    assert LinearForm(Fraction(9), vec([6, 0, 0])).render() == "9+6x1"
    assert LinearForm(Fraction(1), vec([0, 6, 4])).render(constant_last=True) == "6x2+4x3+1"
    assert LinearForm(Fraction(0), vec(["-3/2", 1])).render() == "-3/2*x1+x2"
    assert str(LinearForm(Fraction(1), vec([-1, 0]))) == "(1-x1)"


def test_polynomial_ids():
    assert polynomial_id(0, (1, 1, 2)) == "p_0_1-1-2"
    assert polynomial_id(2, (1,)) == "p_2_1"


def test_square_representation(square_prep):
    assert square_prep.count == 3
    assert square_prep.polynomial_ids() == ["p_1_1", "p_0_1-1", EPSILON_ID]
    p1 = square_prep.product(1, (1,))
    assert p1.render() == "(1-x1)(1+x1)(1-x2)(1+x2)"
    assert square_prep.epsilon.two_p == 10
    assert square_prep.metadata.mu == 3


def test_square_products_evaluate(square_prep):
    p1 = square_prep.product(1, (1,))
    assert eval_product(p1, vec([0, 0])) == 1
    assert eval_product(p1, vec(["3/2", 0])) == Fraction(-5, 4)
    p0 = square_prep.product(0, (1, 1))
    assert p0.render() == "(2-x1-x2)(2-x1+x2)(2+x1-x2)(2+x1+x2)"


def test_cube_representation(cube3_prep):
    assert cube3_prep.count == 6
    p2 = cube3_prep.product(2, (1,))
    assert p2.render() == "(1-x1)(1+x1)(1-x2)(1+x2)(1-x3)(1+x3)"
    assert [p.k for p in cube3_prep.products] == [2, 1, 0, 0, 0]


def test_dodecahedron_polynomial_count(dodecahedron_prep):
    assert dodecahedron_prep.count == 6
    assert dodecahedron_prep.polynomial_ids() == [
        "p_2_1", "p_1_1-1", "p_0_1-1-2", "p_0_1-2-1", "p_0_2-1-1", "p_eps",
    ]


def test_dodecahedron_facet_product_lists_every_row(dodecahedron, dodecahedron_prep):
    p2 = dodecahedron_prep.product(2, (1,))
    rows = [LinearForm(b, tuple(-c for c in a)) for a, b in dodecahedron.rows()]
    assert list(p2.factors) == rows


def test_dodecahedron_edge_product_factors(dodecahedron_prep):
    rendered = {f.render() for f in dodecahedron_prep.product(1, (1, 1)).factors}
    assert len(rendered) == 30
    for factor in ["10-2x1-3x2-5x3", "10-6x2", "11-6x1", "9+6x1", "10+6x3", "12+6x2"]:
        assert factor in rendered


def test_dodecahedron_vertex_product_factor(dodecahedron_prep):
    rendered = {f.render() for f in dodecahedron_prep.product(0, (1, 1, 2)).factors}
    assert len(rendered) == 20
    assert "20-8x1-7x2-5x3" in rendered


def test_dodecahedron_epsilon_polynomial(dodecahedron_prep):
    ep = dodecahedron_prep.epsilon
    assert ep.two_p == 664
    assert ep.exponent_p == 332
    assert ep.weight == Fraction(1, 12)
    first = ep.terms[0]
    assert (first.a, first.b, first.h_minus) == (vec([0, 3, 2]), 5, 6)
    assert first.render() == "(6x2+4x3+1)/11"
    assert ep.render().startswith("1/12*[(6x2+4x3+1)/11]^664 + ")
    assert dodecahedron_prep.metadata.exponent_p == 332
    assert dodecahedron_prep.metadata.f_vector == (20, 30, 12)


def test_epsilon_poly_rejects_odd_exponent():
    term = EpsilonTerm(vec([1]), Fraction(1), Fraction(1))
    with pytest.raises(ConstructionError):
        EpsilonPoly((term,), Fraction(1), 3, vec([0]))
    with pytest.raises(ConstructionError):
        EpsilonPoly((EpsilonTerm(vec([1]), Fraction(1), Fraction(-1)),), Fraction(1), 2, vec([0]))


def test_construction_is_deterministic(square):
    first = construct_prep(square, rho_mode="exact")
    second = construct_prep(square, rho_mode="exact")
    assert first == second


def test_construct_refuses_invalid_input(orthant2):
    with pytest.raises(ValidationError):
        construct_prep(orthant2)


def test_without_drops_one_product(square_prep):
    dropped = square_prep.without("p_1_1")
    assert dropped.polynomial_ids() == ["p_0_1-1", EPSILON_ID]
    with pytest.raises(KeyError):
        square_prep.without("p_9_9")


def test_sparse_arithmetic_and_rendering():
    x1 = SparsePoly.variable(2, 0)
    x2 = SparsePoly.variable(2, 1)
    p = 1 - x1 * x1 + Fraction(3, 2) * x1 * x2
    assert p.render() == "1-x1^2+3/2*x1*x2"
    assert p.degree == 2
    assert p.evaluate(vec([2, 1])) == 0
    assert (x1 + x2) ** 2 == x1 * x1 + 2 * x1 * x2 + x2 * x2
    assert (x1 - x1).is_zero()


def test_sparse_composition_and_embedding():
    x = SparsePoly.variable(1, 0)
    p = 1 - x * x
    shifted = p.compose([SparsePoly.linear(1, vec([2]))])
    assert shifted.evaluate(vec([1])) == p.evaluate(vec([3]))
    assert p.embed(3).evaluate(vec([Fraction(1, 2), 7, 9])) == Fraction(3, 4)
    assert set(p.homogeneous_parts()) == {0, 2}


def test_expanded_product_matches_factored(square_prep):
    p1 = square_prep.product(1, (1,))
    expanded = p1.to_sparse()
    assert expanded.degree == 4
    for point in [vec([0, 0]), vec(["3/2", 0]), vec(["1/3", "-5/4"])]:
        assert expanded.evaluate(point) == p1.evaluate(point)


def test_expansion_guard(monkeypatch, dodecahedron_prep):
    monkeypatch.setattr(config, "MAX_EXPANSION_DEGREE", 16)
    with pytest.raises(ResourceGuardError):
        dodecahedron_prep.product(1, (1, 1)).to_sparse()
    x = SparsePoly.variable(1, 0)
    with pytest.raises(ResourceGuardError):
        x ** 17


def test_corrupted_product_changes_membership(square_prep):
    p1 = square_prep.product(1, (1,))
    broken = replace(p1, factors=(LinearForm(Fraction(2), vec([-1, 0])),) + p1.factors[1:])
    assert broken.evaluate(vec(["3/2", 0])) > 0


def _merge_cases(prep, lattice, points):
    """
    Check every pair of factors of one product that are both nonpositive at y,
    one strictly, and whose faces meet: the factor of their common face must be
    strictly negative in some product of that face's dimension.
    """
    factors_of_face = {}
    for product in prep.products:
        for face, factor in zip(product.faces, product.factors):
            factors_of_face.setdefault(face, []).append(factor)
    checked = 0
    for y in points:
        for product in prep.products:
            if product.k == 0:
                continue
            values = product.factor_values(y)
            for (F, f_value), (G, g_value) in permutations(zip(product.faces, values), 2):
                if not (f_value < 0 and g_value <= 0):
                    continue
                meet = lattice.face(set(F) | set(G))
                if meet is None:
                    continue
                checked += 1
                assert any(f.evaluate(y) < 0 for f in factors_of_face[meet.facet_indices]), (y, product.id, F, G)
    return checked


@pytest.mark.parametrize("name, count", [("square", 1000), ("cube3", 300), ("dodecahedron", 300)])
def test_negative_factors_merge_into_a_lower_face(name, count, request, box_points):
    H = request.getfixturevalue(name)
    prep = request.getfixturevalue(f"{name}_prep")
    lattice = build_face_lattice(H, enumerate_vertices(H))
    points = box_points(13, (-3,) * H.dim, (3,) * H.dim, count)
    assert _merge_cases(prep, lattice, points) > 0
