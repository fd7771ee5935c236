import csv
import io
import json
from fractions import Fraction

import numpy as np
import pytest

from polyrep.construction.prep import CONVENTION, construct_prep
from polyrep.formats.grid import grid_eval_csv, grid_rows
from polyrep.formats.hrep import emit_hrep, parse_hrep
from polyrep.formats.prep_document import emit_prep, parse_prep, prep_to_dict
from polyrep.lattice.hpolytope import HPolytope
from polyrep.utils import config
from polyrep.utils.errors import ParseError, ResourceGuardError
from polyrep.verify.evaluate import member_prep


def test_parse_dodecahedron_document(data_dir):
    doc = parse_hrep((data_dir / "dodecahedron.hrep").read_text())
    assert doc.dim == 3
    assert doc.m == 12
    assert doc.rows[0] == (0, 3, 2, 5)
    H = doc.to_hpolytope()
    assert H.normals[11] == (3, -2, 0)
    assert H.rhs[11] == 6


def test_comments_and_blank_lines_are_ignored():
    doc = parse_hrep("# header comment\n\n1 2   # d m\n1 1/2\n\n-1 3 # trailing\n")
    assert doc.rows == ((1, Fraction(1, 2)), (-1, 3))


@pytest.mark.parametrize(
    "text, line, column, reason",
    [
        ("", None, None, "empty document"),
        ("3\n", 1, 1, "header must be 'd m'"),
        ("2 0\n", 1, 3, "row count must be a positive integer"),
        ("x 1\n", 1, 1, "dimension must be a positive integer"),
        ("2 1\n1 0\n", 2, 4, "dimension mismatch"),
        ("2 1\n1 0 1 7\n", 2, 7, "dimension mismatch"),
        ("2 1\n1 0 1/0\n", 2, 5, "zero denominator"),
        ("2 1\n1 0.5 1\n", 2, 3, "not a rational number"),
        ("2 2\n1 0 1\n", 2, None, "expected 2 rows, found 1"),
        ("2 1\n1 0 1\n0 1 1\n", 3, 1, "unexpected data after 1 rows"),
    ],
)
def test_parse_errors_carry_positions(text, line, column, reason):
    with pytest.raises(ParseError) as info:
        parse_hrep(text)
    assert info.value.line == line
    assert info.value.column == column
    assert reason in info.value.reason


def test_emit_hrep(square):
    assert emit_hrep(square) == "2 4\n1 0 1\n-1 0 1\n0 1 1\n0 -1 1\n"
    text = emit_hrep(square, comment="the square\n[-1, 1]^2")
    assert text.startswith("# the square\n# [-1, 1]^2\n2 4\n")
    assert parse_hrep(text).to_hpolytope() == square


def test_prep_json_round_trip(dodecahedron_prep):
    text = emit_prep(dodecahedron_prep)
    data = json.loads(text)
    assert data["convention"] == CONVENTION
    assert [p["id"] for p in data["products"]] == dodecahedron_prep.polynomial_ids()[:-1]
    assert data["epsilon"]["two_p"] == 664
    assert data["metadata"]["eps_bar"] == "3/100"
    parsed = parse_prep(text)
    assert parsed == dodecahedron_prep
    assert parsed.polynomial_ids() == dodecahedron_prep.polynomial_ids()
    point = (Fraction(1, 2), Fraction(-1, 3), Fraction(1, 5))
    assert member_prep(parsed, point).inside == member_prep(dodecahedron_prep, point).inside


@pytest.mark.parametrize("seed", range(15))
def test_hrep_round_trip_on_random_systems(seed):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(1, 5))
    m = int(rng.integers(1, 8))
    numerators = rng.integers(-20, 21, size=(m, d + 1))
    denominators = rng.integers(1, 9, size=(m, d + 1))
    numerators[:, 0] = np.where(numerators[:, 0] == 0, 1, numerators[:, 0])
    H = HPolytope.from_rows(
        [[Fraction(int(p), int(q)) for p, q in zip(row, den)] for row, den in zip(numerators, denominators)]
    )
    text = emit_hrep(H)
    assert parse_hrep(text).to_hpolytope() == H
    assert emit_hrep(parse_hrep(text).to_hpolytope()) == text


def test_prep_round_trip_on_random_polygons(random_polygons):
    for polygon in random_polygons:
        prep = construct_prep(polygon)
        text = emit_prep(prep)
        parsed = parse_prep(text)
        assert parsed == prep
        assert emit_prep(parsed) == text


def test_prep_text_format(square_prep):
    lines = emit_prep(square_prep, fmt="text").splitlines()
    assert lines[0].startswith("#")
    assert "p_1_1: (1-x1)(1+x1)(1-x2)(1+x2) >= 0" in lines
    assert "p_0_1-1: (2-x1-x2)(2-x1+x2)(2+x1-x2)(2+x1+x2) >= 0" in lines
    assert lines[-1] == "p_eps: 1/4*[(x1)]^10 + 1/4*[(-x1)]^10 + 1/4*[(x2)]^10 + 1/4*[(-x2)]^10 <= 1"


def test_unknown_output_format(square_prep):
    with pytest.raises(ValueError):
        emit_prep(square_prep, fmt="yaml")


def test_parse_prep_rejects_bad_documents(square_prep):
    with pytest.raises(ParseError) as info:
        parse_prep("{not json")
    assert info.value.line == 1
    with pytest.raises(ParseError):
        parse_prep("[1, 2]")
    data = prep_to_dict(square_prep)
    data["convention"] = "p > 0"
    with pytest.raises(ParseError, match="convention"):
        parse_prep(json.dumps(data))
    data = prep_to_dict(square_prep)
    data["products"][0]["factors"][0]["c0"] = "1/0"
    with pytest.raises(ParseError, match="products\\[0\\]"):
        parse_prep(json.dumps(data))
    data = prep_to_dict(square_prep)
    data["epsilon"]["two_p"] = 9
    with pytest.raises(ParseError):
        parse_prep(json.dumps(data))


def _read_csv(text):
    return list(csv.reader(io.StringIO(text)))


def test_square_grid(square, square_prep):
    rows = _read_csv(grid_eval_csv(square, square_prep, (-2, -2), (2, 2), Fraction(1, 2)))
    header, body = rows[0], rows[1:]
    assert header == ["x1", "x2", "p_1_1", "p_0_1-1", "p_eps", "member_prep", "member_hrep"]
    assert len(body) == 81
    assert body[0][:2] == ["-2", "-2"]
    assert body[1][:2] == ["-2", "-3/2"]
    assert all(row[-2] == row[-1] for row in body)
    assert sum(int(row[-1]) for row in body) == 25


def test_dodecahedron_grid(dodecahedron, dodecahedron_prep):
    rows = grid_rows(dodecahedron, dodecahedron_prep, (-2, -2, -2), (2, 2, 2), Fraction(1, 2))
    assert len(rows) == 729
    inside = [row for row in rows if row[-1] == "1"]
    assert inside
    assert all(row[-2] == row[-1] for row in rows)


def test_grid_guards(monkeypatch, square, square_prep, cube3):
    with pytest.raises(ValueError):
        grid_rows(square, square_prep, (-1, -1), (1, 1), Fraction(0))
    with pytest.raises(ValueError):
        grid_rows(cube3, square_prep, (-1, -1), (1, 1), Fraction(1))
    monkeypatch.setattr(config, "MAX_GRID_CELLS", 10)
    with pytest.raises(ResourceGuardError):
        grid_rows(square, square_prep, (-2, -2), (2, 2), Fraction(1, 2))
