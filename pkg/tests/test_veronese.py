import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from witt12 import gf
from witt12.design import hyperplane_spectrum
from witt12.projgeom import canonical, enumerate_points, span
from witt12.veronese import (
    VeroneseConfig,
    apply,
    canonical_matrix,
    construct_K,
    equivalence_to_veronese,
    find_projectivity,
    find_setwise_projectivity,
    hyperplane_preimage_quadric,
    maps_setwise,
    pgl3,
    reverse_construct,
    sym_square,
    veronese_point,
    veronese_surface,
)

DELTA_INF = {(0, 0, 0, 1, 0, 1), (0, 0, 0, 1, 1, 2), (0, 0, 0, 1, 2, 2)}

invertible3 = st.lists(st.integers(0, 2), min_size=9, max_size=9).map(
    lambda v: np.array(v, dtype=np.int64).reshape(3, 3)
).filter(lambda A: gf.rank(A, 3) == 3)


def test_veronese_point_examples():
    assert veronese_point((1, 0, 0)) == (1, 0, 0, 0, 0, 0)
    assert veronese_point((0, 1, 2)) == (0, 0, 0, 1, 2, 1)
    assert veronese_point((1, 1, 1)) == (1, 1, 1, 1, 1, 1)


def test_surface():
    V = veronese_surface()
    assert len(set(V)) == 13
    assert span(V).dim == 5
    line = [x for x in enumerate_points(2, 3) if x[0] == 0]
    img = [veronese_point(x) for x in line]
    assert span(img).dim == 2


def test_sym_square_examples():
    assert np.array_equal(sym_square(np.eye(3, dtype=np.int64)), np.eye(6))
    assert np.array_equal(sym_square(np.diag([1, 1, 2])), np.diag([1, 1, 2, 1, 2, 1]))
    with pytest.raises(ValueError):
        sym_square(np.ones((3, 3), dtype=np.int64))


@settings(max_examples=100, deadline=None)
@given(invertible3)
def test_sym_square_intertwines_veronese_map(A):
    S = sym_square(A)
    for x in enumerate_points(2, 3):
        assert apply(S, veronese_point(x)) == veronese_point(gf.matmul(A, x, 3))


@settings(max_examples=100, deadline=None)
@given(invertible3, invertible3)
def test_sym_square_is_functorial(A, B):
    lhs = canonical_matrix(sym_square(gf.matmul(A, B, 3)))
    rhs = canonical_matrix(gf.matmul(sym_square(A), sym_square(B), 3))
    assert np.array_equal(lhs, rhs)


def test_preimage_quadric():
    q = hyperplane_preimage_quadric((1, 0, 0, 0, 0, 0))
    assert sorted(q.zeros()) == sorted(x for x in enumerate_points(2, 3) if x[0] == 0)
    # a hyperplane through the plane of the conic at infinity
    q = hyperplane_preimage_quadric((1, 1, 2, 0, 0, 0))
    assert {x for x in enumerate_points(2, 3) if x[0] == 0} <= set(q.zeros())


def test_preimage_quadric_is_linear_bijection():
    forms = set()
    for h in enumerate_points(5, 3):
        q = hyperplane_preimage_quadric(h)
        forms.add(tuple(canonical(np.array(q.form).reshape(-1))))
        for x in enumerate_points(2, 3):
            assert (q.value(x) == 0) == (sum(a * b for a, b in zip(h, veronese_point(x))) % 3 == 0)
    assert len(forms) == 364


def test_default_K(K):
    assert len(K.points) == 12
    assert DELTA_INF <= set(K.points)
    assert set(K.delta) == DELTA_INF
    assert hyperplane_spectrum(K.points).support <= {0, 3, 6}


@pytest.mark.parametrize("line", enumerate_points(2, 3))
def test_K_for_every_line_at_infinity(line):
    K = construct_K(VeroneseConfig(line))
    assert len(K.points) == 12
    assert hyperplane_spectrum(K.points).histogram == {0: 12, 3: 220, 6: 132}


def test_reverse_construct_at_infinity(K):
    assert sorted(reverse_construct(K.points, K.delta)) == sorted(veronese_surface())


@pytest.mark.parametrize("tri", [(0, 1, 3), (3, 4, 5), (5, 8, 11), (1, 6, 10)])
def test_reverse_construct_spectrum(K, tri):
    V = reverse_construct(K.points, [K.points[i] for i in tri])
    rep = hyperplane_spectrum(V)
    assert len(V) == 13 and rep.support <= {1, 4, 7} and 7 in rep.support


def test_find_projectivity_frames():
    frame = [tuple(int(c) for c in r) for r in np.eye(6, dtype=np.int64)] + [(1,) * 6]
    assert np.array_equal(find_projectivity(frame, frame), np.eye(6))
    A = np.array([[1, 2, 0], [0, 1, 1], [1, 0, 2]])
    S = sym_square(A)
    img = [apply(S, x) for x in frame]
    assert np.array_equal(find_projectivity(frame, img), canonical_matrix(S))
    with pytest.raises(ValueError):
        find_projectivity(frame, [x[:3] for x in frame[:5]])


def test_equivalence_identity():
    M = equivalence_to_veronese(veronese_surface())
    assert maps_setwise(M, veronese_surface(), veronese_surface())


def test_equivalence_for_triangle_at_infinity(K):
    V = reverse_construct(K.points, K.delta)
    M = equivalence_to_veronese(V)
    assert maps_setwise(M, V, veronese_surface())


def test_equivalence_under_random_lift():
    rng = random.Random(5)
    G = pgl3()
    assert len(G) == 5616
    lifts = {canonical_matrix(sym_square(B)).tobytes() for B in G}
    for _ in range(3):
        A = G[rng.randrange(len(G))]
        S = sym_square(A)
        V = [apply(S, x) for x in veronese_surface()]
        kappa = equivalence_to_veronese(V)
        assert maps_setwise(kappa, V, veronese_surface())
        # kappa composed with S stabilizes the surface, so it is itself a lift
        stab = canonical_matrix(gf.matmul(kappa, S, 3))
        assert stab.tobytes() in lifts


def test_setwise_search_rejects_inequivalent(K):
    other = sorted(K.points)[:-1] + [next(x for x in enumerate_points(5, 3) if x not in K.points)]
    assert find_setwise_projectivity(K.points, other) is None


def test_config_rejects_zero_line():
    with pytest.raises(ValueError):
        VeroneseConfig((0, 0, 0))
