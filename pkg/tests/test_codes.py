from math import comb

import numpy as np
import pytest

from witt12 import gf
from witt12.codes import (
    ALLOWED_QUADRUPLES,
    LinearCode,
    characteristic_vector,
    chi_identity_check,
    code_C_from_quadratic_forms,
    code_C_from_veronese,
    complement_code,
    diff_code,
    golay_from_K,
    hamming_weight,
    hyperplane_code,
    hyperplane_dots,
    identify_C,
    line_code,
    macwilliams,
    quadruple_patterns,
    weight7_word,
    weight7_word_check,
)
from witt12.projgeom import enumerate_points
from witt12.veronese import VeroneseConfig, veronese_surface

PG53 = enumerate_points(5, 3)


def paley_golay() -> LinearCode:
    """Extended ternary Golay code from the textbook generator [I | B], B bordered Paley over GF(3)."""
    squares = {1, 4, 9 % 5, 16 % 5}
    chi = lambda a: 0 if a % 5 == 0 else (1 if a % 5 in squares else 2)
    B = np.zeros((6, 6), dtype=np.int64)
    B[0, 1:] = 1
    B[1:, 0] = 1
    for i in range(5):
        for j in range(5):
            B[i + 1, j + 1] = chi(j - i)
    return LinearCode.span(np.hstack([np.eye(6, dtype=np.int64), B]), 3)


def test_characteristic_vectors(K):
    assert not characteristic_vector([], PG53).any()
    assert hamming_weight(characteristic_vector(K.points, PG53)) == 12
    assert hamming_weight(characteristic_vector(veronese_surface(), PG53)) == 13
    with pytest.raises(ValueError):
        characteristic_vector([(1, 0, 0)], PG53)


def test_chi_identity():
    assert chi_identity_check()


@pytest.mark.parametrize("line", enumerate_points(2, 3))
def test_chi_identity_and_weight7_for_every_line(line):
    cfg = VeroneseConfig(line)
    assert chi_identity_check(cfg)
    assert weight7_word_check(cfg)


def test_chi_identity_detects_perturbation(K):
    other = next(x for x in PG53 if x not in K.points)
    assert not chi_identity_check(K=list(K.points[1:]) + [other])


def test_hyperplane_code():
    H = hyperplane_code()
    # p-rank of the hyperplanes of PG(5,3): C(n+p-1, n) + 1 with n = 5, p = 3
    assert H.dimension == 22 == comb(7, 5) + 1
    assert H.length == 364


def test_K_and_surface_against_hyperplanes(K):
    assert not hyperplane_dots(K.points).any()
    assert (hyperplane_dots(veronese_surface()) == 1).all()


def test_weight7_word():
    w = weight7_word()
    assert hamming_weight(w) == 7
    # 1 + 2 = 0: the surface dots to 1, the difference to 2, and K to 0
    assert ((hyperplane_dots(veronese_surface()) + 2) % 3 == 0).all()


def test_golay(K):
    G = golay_from_K(K.points)
    assert (G.length, G.dimension, G.minimum_weight()) == (12, 6, 6)
    assert G == G.dual()
    wd = G.weight_distribution()
    assert wd == {0: 1, 6: 264, 9: 440, 12: 24}
    assert wd == paley_golay().weight_distribution()


def test_macwilliams_fixes_self_dual_enumerator():
    wd = {0: 1, 6: 264, 9: 440, 12: 24}
    assert macwilliams(wd, 12, 3) == wd
    # [3,1] repetition code over GF(3): dual is the [3,2] zero-sum code
    assert macwilliams({0: 1, 3: 2}, 3, 3) == {0: 1, 2: 6, 3: 2}


def test_code_C(K):
    C = code_C_from_veronese()
    assert (C.length, C.dimension, C.minimum_weight()) == (13, 6, 6)
    assert C.issubset(C.dual())
    assert C == code_C_from_quadratic_forms()
    assert identify_C()
    assert C == line_code(3).dual()


def test_quadruples():
    patterns = quadruple_patterns()
    assert set(patterns) <= ALLOWED_QUADRUPLES
    assert sum(patterns.values()) == 13 * 729
    assert all(sum(q) % 3 == 0 for q in ALLOWED_QUADRUPLES)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_plane_codes(p):
    C = line_code(p)
    D = C.dual()
    assert C.dimension == (p * p + p + 2) // 2
    assert D.issubset(C) and C.dimension - D.dimension == 1
    assert diff_code(p) == D == complement_code(p)


def test_plane_code_dimension_by_brute_rank():
    # oracle: rank of the full incidence matrix computed independently of LinearCode
    from witt12.projgeom import lines_of_plane, point_index

    where = point_index(2, 2)
    M = np.zeros((7, 7), dtype=np.int64)
    for r, line in enumerate(lines_of_plane(2)):
        for x in line:
            M[r, where[x]] = 1
    assert gf.rank(M, 2) == 4 == line_code(2).dimension


def test_linear_code_basics():
    rep = LinearCode.span([[1, 1, 1]], 3)
    assert rep.dual().dimension == 2
    assert rep.contains([2, 2, 2]) and not rep.contains([1, 0, 0])
    assert rep.weight_distribution() == {0: 1, 3: 2}
    big = LinearCode.span(np.eye(8, dtype=np.int64), 3)
    with pytest.raises(ValueError):
        big.codewords()
