from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from polyrep.exact.linalg import affine_rank, kernel_basis, mat_vec, rank, solve_square_system
from polyrep.exact.rational import dot, format_rat, sqrt_lower, sqrt_upper, to_rat, vec
from polyrep.exact.simplex import LPStatus, is_feasible, lp_solve
from polyrep.utils.work_tracker import work_tracker


def test_to_rat_parses_integers_and_fractions():
    assert to_rat("3/100") == Fraction(3, 100)
    assert to_rat("-7") == Fraction(-7)
    assert to_rat(" 4/6 ") == Fraction(2, 3)
    assert to_rat(5) == Fraction(5)


def test_to_rat_keeps_fractions_reduced_with_positive_denominator():
    q = to_rat("-6/4")
    assert (q.numerator, q.denominator) == (-3, 2)
    assert q.denominator > 0


@pytest.mark.parametrize("bad", ["1/0", "abc", "1.5", "", "2/3/4"])
def test_to_rat_rejects_malformed_strings(bad):
    with pytest.raises(ValueError):
        to_rat(bad)


def test_to_rat_rejects_floats_and_bools():
    with pytest.raises(ValueError, match="inexact"):
        to_rat(0.5)
    with pytest.raises(ValueError):
        to_rat(True)


def test_zero_denominator_message():
    with pytest.raises(ValueError, match="zero denominator"):
        to_rat("3/0")


def test_format_rat():
    assert format_rat(Fraction(4)) == "4"
    assert format_rat(Fraction(-3, 2)) == "-3/2"


def test_dyadic_square_root_bounds():
    lower = sqrt_lower(Fraction(8))
    upper = sqrt_upper(Fraction(8))
    assert lower * lower <= 8 <= upper * upper
    assert upper - lower <= Fraction(1, 2 ** 16)
    assert sqrt_upper(Fraction(4)) == 2
    assert sqrt_lower(Fraction(4)) == 2
    with pytest.raises(ValueError):
        sqrt_lower(Fraction(-1))


def test_kernel_of_identity_is_empty():
    assert kernel_basis([vec([1, 0]), vec([0, 1])]) == []


def test_kernel_of_coordinate_row():
    basis = kernel_basis([vec([1, 0, 0])])
    assert len(basis) == 2
    assert all(v[0] == 0 for v in basis)
    assert rank(basis) == 2


def test_kernel_of_full_rank_rows(dodecahedron):
    assert kernel_basis(dodecahedron.normals) == []
    assert rank(dodecahedron.normals) == 3


def test_solve_square_system():
    x = solve_square_system([vec([2, 1]), vec([1, 3])], vec([3, 5]))
    assert x == (Fraction(4, 5), Fraction(7, 5))
    assert solve_square_system([vec([1, 2]), vec([2, 4])], vec([1, 2])) is None


@pytest.mark.parametrize("seed", range(20))
def test_solve_square_system_recovers_random_solutions(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 6))
    M = [vec(int(v) for v in row) for row in rng.integers(-5, 6, size=(n, n))]
    while rank(M) < n:
        M = [vec(int(v) for v in row) for row in rng.integers(-5, 6, size=(n, n))]
    y = tuple(Fraction(int(p), int(q)) for p, q in zip(rng.integers(-9, 10, size=n), rng.integers(1, 7, size=n)))
    assert solve_square_system(M, mat_vec(M, y)) == y


def test_affine_rank_of_collinear_points():
    assert affine_rank([vec([0, 0]), vec([1, 1]), vec([2, 2])]) == 1
    assert affine_rank([vec([0, 0]), vec([1, 0]), vec([0, 1])]) == 2


def test_lp_max_x1_over_dodecahedron(dodecahedron):
    result = lp_solve(vec([1, 0, 0]), dodecahedron.normals, dodecahedron.rhs)
    assert result.status == LPStatus.OPTIMAL
    assert result.optimum == Fraction(11, 6)
    assert result.witness[0] == Fraction(11, 6)
    assert dodecahedron.contains(result.witness)


def test_lp_min_sense(square):
    result = lp_solve(vec([1, 1]), square.normals, square.rhs, sense="min")
    assert result.is_optimal
    assert result.optimum == -2


def test_lp_unbounded_returns_ray():
    result = lp_solve(vec([1]), [vec([-1])], vec([0]))
    assert result.status == LPStatus.UNBOUNDED
    assert result.witness == (Fraction(1),)


def test_lp_infeasible():
    A = [vec([1, 0]), vec([-1, 0])]
    b = vec([-1, -1])
    assert lp_solve(vec([0, 1]), A, b).status == LPStatus.INFEASIBLE
    assert not is_feasible(A, b)


def test_lp_negative_right_hand_sides_use_phase_one():
    # 1 <= x <= 2
    result = lp_solve(vec([1]), [vec([1]), vec([-1])], vec([2, -1]), sense="min")
    assert result.optimum == 1


def test_lp_terminates_on_degenerate_cycling_example():
    # Beale's example, which cycles under the textbook pivot rule
    A = [
        vec(["1/4", -8, -1, 9]),
        vec(["1/2", -12, "-1/2", 3]),
        vec([0, 0, 1, 0]),
        vec([-1, 0, 0, 0]),
        vec([0, -1, 0, 0]),
        vec([0, 0, -1, 0]),
        vec([0, 0, 0, -1]),
    ]
    b = vec([0, 0, 1, 0, 0, 0, 0])
    result = lp_solve(vec(["3/4", -20, "1/2", -6]), A, b)
    assert result.is_optimal
    assert result.optimum == Fraction(5, 4)


def test_lp_rejects_bad_input():
    with pytest.raises(ValueError):
        lp_solve(vec([1]), [vec([1, 0])], vec([1]))
    with pytest.raises(ValueError):
        lp_solve(vec([1]), [vec([1])], vec([1]), sense="sideways")


def test_lp_work_is_tracked():
    work_tracker.reset()
    lp_solve(vec([1]), [vec([1])], vec([1]))
    summary = work_tracker.get_work_summary()
    assert summary["lp_solves"] == 1
    assert "lp solves: 1" in work_tracker.format_work_summary()


def test_lp_max_over_the_square(square):
    result = lp_solve(vec([1, 0]), square.normals, square.rhs)
    assert result.is_optimal
    assert result.optimum == 1
    assert result.witness[0] == 1


def test_lp_bounded_interval():
    # -3 <= x <= 2
    result = lp_solve(vec([1]), [vec([1]), vec([-1])], vec([2, 3]))
    assert result.is_optimal
    assert result.optimum == 2
    assert result.witness == (Fraction(2),)


def test_lp_minimum_below_zero():
    result = lp_solve(vec([1]), [vec([-1])], vec([3]), sense="min")
    assert result.is_optimal
    assert result.optimum == -3
    assert result.witness == (Fraction(-3),)


def _basic_feasible_points(A, b, d):
    points = []
    for rows in combinations(range(len(A)), d):
        x = solve_square_system([A[i] for i in rows], [b[i] for i in rows])
        if x is not None and all(dot(a, x) <= bi for a, bi in zip(A, b)):
            points.append(x)
    return points


@pytest.mark.parametrize("seed", range(40))
def test_lp_witness_on_random_programs(seed):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(1, 4))
    m = int(rng.integers(d + 1, 7))
    A = [vec(int(v) for v in row) for row in rng.integers(-4, 5, size=(m, d))]
    b = vec(int(v) for v in rng.integers(-3, 6, size=m))
    c = vec(int(v) for v in rng.integers(-3, 4, size=d))
    sense = "max" if seed % 2 == 0 else "min"
    sign = 1 if sense == "max" else -1

    result = lp_solve(c, A, b, sense=sense)
    # with full column rank a nonempty feasible set has a vertex
    pointed = rank(A) == d
    basics = _basic_feasible_points(A, b, d) if pointed else None

    if result.status == LPStatus.OPTIMAL:
        x = result.witness
        assert all(dot(a, x) <= bi for a, bi in zip(A, b))
        assert dot(c, x) == result.optimum
        if pointed:
            best = max(sign * dot(c, v) for v in basics)
            assert sign * result.optimum == best
    elif result.status == LPStatus.UNBOUNDED:
        ray = result.witness
        assert all(v <= 0 for v in mat_vec(A, ray))
        assert sign * dot(c, ray) > 0
        if pointed:
            assert basics
    elif pointed:
        assert basics == []
