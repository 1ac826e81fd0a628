import itertools

import pytest

from theta_forge.gf import make_field
from theta_forge.projgeom import (
    ProjectivePoint,
    collinear,
    enumerate_lines,
    enumerate_points,
    line_count,
    line_through,
    normalize_point,
    on_line,
    point_count,
    points_on_line,
    read_point_set,
    write_point_set,
)


def P(*c):
    return ProjectivePoint(tuple(c))


def test_normalize_examples():
    assert normalize_point(make_field(3), (0, 2, 1)) == P(0, 1, 2)
    assert normalize_point(make_field(7), (1, 5, 3)) == P(1, 5, 3)
    with pytest.raises(ValueError):
        normalize_point(make_field(3), (0, 0, 0))


def test_normalize_scalar_invariant_and_idempotent():
    F = make_field(3)
    for v in itertools.product(range(3), repeat=3):
        if not any(v):
            continue
        p = normalize_point(F, v)
        assert normalize_point(F, p.coords) == p
        for lam in (1, 2):
            assert normalize_point(F, [F.mul(lam, x) for x in v]) == p


def test_line_through_basis_vectors():
    F = make_field(2)
    line = line_through(F, P(1, 0, 0), P(0, 1, 0))
    assert set(points_on_line(F, line)) == {P(1, 0, 0), P(0, 1, 0), P(1, 1, 0)}
    with pytest.raises(ValueError):
        line_through(F, P(1, 0, 0), P(1, 0, 0))


def test_line_through_symmetric_pg23():
    F = make_field(3)
    pts = enumerate_points(2, F)
    for a, b in itertools.combinations(pts, 2):
        assert line_through(F, a, b) == line_through(F, b, a)


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3)])
def test_counts_and_unique_line_per_pair(n, q):
    F = make_field(q)
    pts = enumerate_points(n, F)
    lines = list(enumerate_lines(n, F))
    assert len(pts) == point_count(n, q) == len(set(pts))
    assert len(lines) == line_count(n, q) == len(set(lines))
    covered = {}
    for line in lines:
        on = points_on_line(F, line)
        assert len(on) == q + 1 and len(set(on)) == q + 1
        for a, b in itertools.combinations(on, 2):
            assert (a, b) not in covered  # at most one line per pair
            covered[a, b] = line
            assert line_through(F, a, b) == line
    assert len(covered) == len(pts) * (len(pts) - 1) // 2  # exactly one


def test_pg22_has_seven_points_and_lines():
    F = make_field(2)
    assert len(enumerate_points(2, F)) == 7
    assert len(list(enumerate_lines(2, F))) == 7


@pytest.mark.parametrize("n,q,expected", [(1, 2, 3), (3, 3, 40), (4, 4, 341)])
def test_enumerate_points_counts(n, q, expected):
    pts = enumerate_points(n, make_field(q))
    assert len(pts) == expected
    assert pts == sorted(pts)
    assert all(p == normalize_point(make_field(q), p.coords) for p in pts)


def test_enumerate_points_cap():
    with pytest.raises(ValueError):
        enumerate_points(4, make_field(4), cap=100)


def test_collinear_examples():
    F = make_field(2)
    assert collinear(F, P(1, 0, 0), P(0, 1, 0), P(1, 1, 0))
    assert not collinear(F, P(1, 0, 0), P(0, 1, 0), P(0, 0, 1))


def test_collinear_agrees_with_line_membership():
    F = make_field(3)
    pts = enumerate_points(2, F)
    for a, b, c in itertools.combinations(pts, 3):
        line = line_through(F, a, b)
        assert collinear(F, a, b, c) == (c in points_on_line(F, line)) == on_line(F, c, line)


def test_point_set_round_trip(tmp_path):
    F = make_field(4)
    pts = [P(1, 2, 3, 0), P(0, 1, 1, 1), P(0, 0, 0, 1)]
    path = tmp_path / "s.txt"
    write_point_set(path, 3, F, pts, ["hello"])
    first = path.read_bytes()
    n, F2, pts2, comments = read_point_set(path)
    assert (n, F2, pts2, comments) == (3, F, pts, ["hello"])
    write_point_set(path, 3, F2, pts2, comments)
    assert path.read_bytes() == first


def test_point_set_reader_canonicalizes(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("PG 2 3 3 1 0 1\n0,2,1\n2,2,2\n")
    _, _, pts, _ = read_point_set(path)
    assert pts == [P(0, 1, 2), P(1, 1, 1)]


@pytest.mark.parametrize("text", ["", "PG 2 4 3 1 0 1\n1,0,0\n", "PG 2 3 3 1 0 1\n1,0\n", "PG 2 3 3 1 0 1\n1,5,0\n"])
def test_point_set_reader_rejects_bad_input(tmp_path, text):
    path = tmp_path / "s.txt"
    path.write_text(text)
    with pytest.raises(ValueError):
        read_point_set(path)
