"""Linear codes attached to K, the Veronese surface and the planes PG(2,p)."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from witt12 import gf
from witt12.projgeom import (
    Point,
    canonical,
    enumerate_points,
    incidence_matrix,
    lines_of_plane,
    point_index,
)
from witt12.veronese import VeroneseConfig, construct_K, veronese_point, veronese_vector

MAX_ENUMERATION_DIM = 7


@dataclass(frozen=True, eq=False)
class LinearCode:
    generators: np.ndarray  # rref, no zero rows
    p: int
    length: int

    @classmethod
    def span(cls, rows, p: int, length: int | None = None) -> "LinearCode":
        rows = np.atleast_2d(np.array(rows, dtype=np.int64))
        n = rows.shape[1] if length is None else length
        if rows.size == 0:
            return cls(np.zeros((0, n), dtype=np.int64), p, n)
        return cls(gf.row_space(rows, p), p, n)

    @property
    def dimension(self) -> int:
        return self.generators.shape[0]

    def dual(self) -> "LinearCode":
        if self.dimension == 0:
            return LinearCode.span(np.eye(self.length, dtype=np.int64), self.p)
        return LinearCode.span(gf.nullspace(self.generators, self.p), self.p, self.length)

    def contains(self, word) -> bool:
        word = np.asarray(word, dtype=np.int64) % self.p
        if self.dimension == 0:
            return not word.any()
        return gf.rank(np.vstack([self.generators, word]), self.p) == self.dimension

    def issubset(self, other: "LinearCode") -> bool:
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.p == other.p
            and self.length == other.length
            and np.array_equal(self.generators, other.generators)
        )

    __hash__ = None

    def codewords(self) -> np.ndarray:
        if self.dimension > MAX_ENUMERATION_DIM:
            raise ValueError(f"refusing to enumerate a code of dimension {self.dimension}")
        msgs = np.array(list(itertools.product(range(self.p), repeat=self.dimension)), dtype=np.int64)
        if self.dimension == 0:
            return np.zeros((1, self.length), dtype=np.int64)
        return (msgs @ self.generators) % self.p

    def weight_distribution(self) -> dict[int, int]:
        weights = (self.codewords() != 0).sum(axis=1)
        return dict(sorted(Counter(int(w) for w in weights).items()))

    def minimum_weight(self) -> int:
        return min(w for w in self.weight_distribution() if w > 0)


def macwilliams(distribution: dict[int, int], n: int, q: int) -> dict[int, Fraction]:
    """Weight distribution of the dual code, via Krawtchouk polynomials."""
    size = sum(distribution.values())

    def kraw(j, i):
        return sum(
            (-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s) for s in range(j + 1)
        )

    out = {}
    for j in range(n + 1):
        a = Fraction(sum(c * kraw(j, i) for i, c in distribution.items()), size)
        if a:
            out[j] = a
    return out


def hamming_weight(word) -> int:
    return int((np.asarray(word) % 3 != 0).sum())


def characteristic_vector(S: Sequence[Sequence[int]], ambient: Sequence[Point], p: int = 3) -> np.ndarray:
    where = {pt: i for i, pt in enumerate(ambient)}
    word = np.zeros(len(ambient), dtype=np.int64)
    for x in S:
        x = canonical(x, p)
        if x not in where:
            raise ValueError(f"{x} is not a point of the ambient enumeration")
        word[where[x]] = 1
    return word


def _pg5() -> tuple[Point, ...]:
    return enumerate_points(5, 3)


def chi_identity_check(cfg: VeroneseConfig | None = None, K: Sequence[Point] | None = None) -> bool:
    """chi(Veronese) - chi(conic at infinity) + chi(diagonal triangle) == chi(K)."""
    cfg = cfg or VeroneseConfig()
    ks = construct_K(cfg)
    K = ks.points if K is None else K
    amb = _pg5()
    surface = [veronese_point(x) for x in enumerate_points(2, 3)]
    lhs = (
        characteristic_vector(surface, amb)
        - characteristic_vector(ks.gamma, amb)
        + characteristic_vector(ks.delta, amb)
    ) % 3
    return bool(np.array_equal(lhs, characteristic_vector(K, amb)))


def hyperplane_matrix() -> np.ndarray:
    """Rows: characteristic vectors of the 364 hyperplanes of PG(5,3)."""
    return incidence_matrix(5, 3).astype(np.int64)


def hyperplane_code() -> LinearCode:
    return LinearCode.span(hyperplane_matrix(), 3)


def hyperplane_dots(S: Sequence[Point]) -> np.ndarray:
    """chi(S) . chi(H) mod 3 for every hyperplane H."""
    return (hyperplane_matrix() @ characteristic_vector(S, _pg5())) % 3


def weight7_word(cfg: VeroneseConfig | None = None) -> np.ndarray:
    ks = construct_K(cfg or VeroneseConfig())
    amb = _pg5()
    return (characteristic_vector(ks.delta, amb) - characteristic_vector(ks.gamma, amb)) % 3


def weight7_word_check(cfg: VeroneseConfig | None = None) -> bool:
    w = weight7_word(cfg)
    dots = (hyperplane_matrix() @ w) % 3
    return hamming_weight(w) == 7 and bool((dots == 2).all())


def golay_from_K(K) -> LinearCode:
    """Words (f(w_1), ..., f(w_12)) for linear functionals f; w_i the canonical vectors of K."""
    W = np.array(tuple(K), dtype=np.int64)
    return LinearCode.span(W.T, 3)


def code_C_from_veronese() -> LinearCode:
    """Evaluation code of the 13 vectors v_i v v_i (PG(2,3) order)."""
    V = np.array([veronese_vector(x) for x in enumerate_points(2, 3)], dtype=np.int64)
    return LinearCode.span(V.T, 3)


def quadratic_form_words() -> np.ndarray:
    """(q(v_1), ..., q(v_13)) for all 729 quadratic forms q on GF(3)^3."""
    V = np.array([veronese_vector(x) for x in enumerate_points(2, 3)], dtype=np.int64)
    coeffs = np.array(list(itertools.product(range(3), repeat=6)), dtype=np.int64)
    return (coeffs @ V.T) % 3


def code_C_from_quadratic_forms() -> LinearCode:
    return LinearCode.span(quadratic_form_words(), 3)


def _plane_line_vectors(p: int) -> np.ndarray:
    gf.check_modulus(p)
    pts = enumerate_points(2, p)
    where = point_index(2, p)
    M = np.zeros((len(pts), len(pts)), dtype=np.int64)
    for r, line in enumerate(lines_of_plane(p)):
        for x in line:
            M[r, where[x]] = 1
    return M


def line_code(p: int) -> LinearCode:
    """C(p): span of the line characteristic vectors of PG(2,p)."""
    return LinearCode.span(_plane_line_vectors(p), p)


def diff_code(p: int) -> LinearCode:
    """E(p): span of differences of line characteristic vectors."""
    L = _plane_line_vectors(p)
    return LinearCode.span((L[1:] - L[0]) % p, p)


def complement_code(p: int) -> LinearCode:
    """C'(p): span of characteristic vectors of line complements."""
    return LinearCode.span((1 - _plane_line_vectors(p)) % p, p)


def identify_C() -> bool:
    """C equals C(3)^perp, both indexed by the PG(2,3) enumeration."""
    C = code_C_from_veronese()
    Cp = line_code(3).dual()
    return C.issubset(Cp) and C.dimension == Cp.dimension and C == Cp


ALLOWED_QUADRUPLES = {(0, 0, 0, 0), (0, 1, 1, 1), (0, 2, 2, 2), (0, 0, 1, 2), (1, 1, 2, 2)}


def quadruple_patterns() -> Counter:
    """Sorted value patterns of every quadratic form on every line of PG(2,3)."""
    words = quadratic_form_words()
    where = point_index(2, 3)
    out: Counter = Counter()
    for line in lines_of_plane(3):
        cols = [where[x] for x in line]
        for w in words:
            out[tuple(sorted(int(w[c]) for c in cols))] += 1
    return out
