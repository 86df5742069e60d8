import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from witt12.projgeom import (
    CONIC,
    LINE_CROSS,
    REPEATED_LINE,
    PlaneQuadric,
    apply_pairing,
    canonical,
    classify_plane_quadric,
    conic_through,
    diagonal_triangle,
    elliptic_involutions,
    enumerate_points,
    harmonic_homology,
    homology_center,
    hyperplanes_through,
    incidence_matrix,
    involution_matrix,
    line_conic_relation,
    line_points,
    lines_of_plane,
    pairings,
    quadrangle_of_triangle,
    span,
)

GAMMA_INF = [(0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1), (0, 0, 0, 1, 1, 1), (0, 0, 0, 1, 2, 1)]
DELTA_INF = [(0, 0, 0, 1, 0, 1), (0, 0, 0, 2, 1, 1), (0, 0, 0, 2, 2, 1)]
STANDARD_CONIC = [(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)]


def brute_points(n, p):
    """Canonical representatives by scanning every nonzero vector."""
    return sorted({canonical(v, p) for v in itertools.product(range(p), repeat=n + 1) if any(v)})


@pytest.mark.parametrize("n,p,count", [(2, 3, 13), (5, 3, 364), (1, 3, 4), (2, 2, 7), (2, 5, 31)])
def test_point_counts(n, p, count):
    pts = enumerate_points(n, p)
    assert len(pts) == count
    assert list(pts) == brute_points(n, p)


def test_canonical_form():
    assert canonical((0, 2, 1)) == (0, 1, 2)
    assert canonical((2, 2, 2)) == (1, 1, 1)
    with pytest.raises(ValueError):
        canonical((0, 0, 0))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=6, max_size=6).filter(any), st.sampled_from([1, 2]))
def test_canonical_is_scale_invariant(v, k):
    assert canonical(v) == canonical([k * x for x in v])
    assert next(c for c in canonical(v) if c) == 1


def test_span_dimensions(K):
    assert span([(1, 0, 0, 0, 0, 0)]).dim == 0
    assert span(GAMMA_INF).dim == 2
    for five in itertools.combinations(K.points[:8], 5):
        assert span(five).dim == 4


def test_hyperplanes_through_counts():
    plane = span(GAMMA_INF)
    assert len(hyperplanes_through(plane)) == 13
    assert len(hyperplanes_through(span(np.eye(6, dtype=np.int64)[:5]))) == 1
    assert len(hyperplanes_through(span(np.eye(6, dtype=np.int64)[:4]))) == 4
    # oracle: scan all 364 hyperplanes
    inc = incidence_matrix(5, 3)
    hs = enumerate_points(5, 3)
    cols = [enumerate_points(5, 3).index(x) for x in plane.points()]
    brute = [hs[i] for i in np.flatnonzero(inc[:, cols].all(axis=1))]
    assert sorted(hyperplanes_through(plane)) == sorted(brute)


def test_line_points():
    pts = line_points((1, 0, 0), (0, 1, 0))
    assert set(pts) == {(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 2, 0)}
    with pytest.raises(ValueError):
        line_points((1, 0, 0), (2, 0, 0))


def test_no_three_points_of_K_collinear(K):
    for a, b in itertools.combinations(K.points, 2):
        on = line_points(a, b)
        assert len(on) == 4
        assert sum(x in K.points for x in on) == 2


def test_lines_of_plane():
    lines = lines_of_plane(3)
    assert len(lines) == 13 and all(len(l) == 4 for l in lines)
    for a, b in itertools.combinations(enumerate_points(2, 3), 2):
        assert sum(a in l and b in l for l in lines) == 1


def test_quadric_kinds():
    kind, pts = classify_plane_quadric(PlaneQuadric.from_matrix(np.diag([0, 1, 0])))
    assert kind == REPEATED_LINE and len(pts) == 4
    x1x2 = PlaneQuadric.from_coefficients((0, 0, 0, 0, 1, 0))
    kind, pts = classify_plane_quadric(x1x2)
    assert kind == LINE_CROSS and len(pts) == 7
    kind, pts = classify_plane_quadric(PlaneQuadric.from_matrix(np.eye(3, dtype=np.int64)))
    brute = [x for x in enumerate_points(2, 3) if sum(c * c for c in x) % 3 == 0]
    assert kind == CONIC and sorted(pts) == sorted(brute) and len(pts) == 4


def test_every_rank_three_form_has_four_zeros():
    for coeffs in itertools.product(range(3), repeat=6):
        q = PlaneQuadric.from_coefficients(coeffs)
        if q.rank == 3:
            assert len(q.zeros()) == 4


def test_quadrangle_of_coordinate_triangle():
    tri = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert sorted(quadrangle_of_triangle(tri)) == STANDARD_CONIC
    brute = [x for x in enumerate_points(2, 3) if all(x)]
    assert sorted(brute) == STANDARD_CONIC


def test_triangle_and_conic_at_infinity():
    assert sorted(quadrangle_of_triangle(DELTA_INF)) == sorted(canonical(x) for x in GAMMA_INF)
    assert sorted(diagonal_triangle(GAMMA_INF)) == sorted(canonical(x) for x in DELTA_INF)


def test_diagonal_triangle_of_standard_quadrangle():
    quad = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
    assert sorted(diagonal_triangle(quad)) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]


def test_round_trip_over_all_quadrangles():
    pts = enumerate_points(2, 3)
    seen = 0
    for quad in itertools.combinations(pts, 4):
        if any(not span(t).dim == 2 for t in itertools.combinations(quad, 3)):
            continue
        seen += 1
        assert sorted(quadrangle_of_triangle(diagonal_triangle(quad))) == sorted(quad)
    assert seen == 234


def test_conic_through_standard():
    q = conic_through(STANDARD_CONIC)
    assert q.rank == 3 and sorted(q.zeros()) == STANDARD_CONIC


def test_line_conic_relations():
    conic = STANDARD_CONIC
    diag = diagonal_triangle(conic)
    for a, b in itertools.combinations(diag, 2):
        rel, internal = line_conic_relation(line_points(a, b), conic)
        assert rel == "external" and len(internal) == 2
    counts = {"external": 0, "tangent": 0, "bisecant": 0}
    for line in lines_of_plane(3):
        rel, internal = line_conic_relation(line, conic)
        counts[rel] += 1
        assert len(internal) == {"external": 2, "tangent": 0, "bisecant": 1}[rel]
    assert counts == {"external": 3, "tangent": 4, "bisecant": 6}


@pytest.mark.parametrize("line", lines_of_plane(3)[:4])
def test_elliptic_involutions(line):
    invs = elliptic_involutions(line)
    assert len(invs) == 3
    for sigma in invs:
        for x in line:
            assert apply_pairing(sigma, apply_pairing(sigma, x)) == x
            assert apply_pairing(sigma, x) != x
        assert involution_matrix(line, sigma) is not None


def test_homology_centres_of_conic_at_infinity():
    centers = [homology_center(GAMMA_INF, s) for s in pairings(sorted(canonical(x) for x in GAMMA_INF))]
    assert len(set(centers)) == 3
    assert set(centers) == {canonical(x) for x in DELTA_INF}


def test_standard_conic_chord_meet():
    sigma = (((1, 1, 1), (1, 1, 2)), ((1, 2, 1), (1, 2, 2)))
    c = homology_center(STANDARD_CONIC, sigma)
    assert c in line_points((1, 1, 1), (1, 1, 2)) and c in line_points((1, 2, 1), (1, 2, 2))
    assert c == (0, 0, 1)


def test_harmonic_homology_fixes_conic():
    for sigma in pairings(STANDARD_CONIC):
        h = harmonic_homology(STANDARD_CONIC, sigma)
        assert {h[x] for x in STANDARD_CONIC} == set(STANDARD_CONIC)
        assert all(h[h[x]] == x for x in h)
        assert h[homology_center(STANDARD_CONIC, sigma)] == homology_center(STANDARD_CONIC, sigma)
