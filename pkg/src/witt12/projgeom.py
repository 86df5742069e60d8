"""Projective spaces PG(n, p) for small primes p, plus the plane-of-order-3
toolkit: quadrics, conics as quadrangles, diagonal triangles, elliptic
involutions and harmonic homologies.

Points and hyperplanes are canonical tuples of ints (first nonzero entry 1),
so set membership is plain tuple equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from witt12 import gf

Point = tuple[int, ...]


def canonical(v, p: int = 3) -> Point:
    """Scale ``v`` so its first nonzero entry is 1."""
    v = [int(x) % p for x in v]
    for x in v:
        if x:
            s = pow(x, -1, p)
            return tuple((y * s) % p for y in v)
    raise ValueError("the zero vector is not a projective point")


def dot(u: Sequence[int], v: Sequence[int], p: int = 3) -> int:
    return sum(a * b for a, b in zip(u, v)) % p


def incident(point: Point, hyperplane: Point, p: int = 3) -> bool:
    return dot(point, hyperplane, p) == 0


@lru_cache(maxsize=None)
def enumerate_points(n: int, p: int = 3) -> tuple[Point, ...]:
    """All (p^(n+1) - 1)/(p - 1) points of PG(n, p), lexicographically sorted."""
    gf.check_modulus(p)
    if not 0 <= n <= 5:
        raise ValueError(f"unsupported projective dimension {n}")
    pts = []
    for v in itertools.product(range(p), repeat=n + 1):
        if any(v) and v[next(i for i, x in enumerate(v) if x)] == 1:
            pts.append(v)
    return tuple(pts)


# hyperplanes are dual points, so they share the enumeration
enumerate_hyperplanes = enumerate_points


@lru_cache(maxsize=None)
def point_index(n: int, p: int = 3) -> dict[Point, int]:
    return {pt: i for i, pt in enumerate(enumerate_points(n, p))}


@lru_cache(maxsize=None)
def incidence_matrix(n: int, p: int = 3) -> np.ndarray:
    """Boolean matrix I[h, x]: point x lies on hyperplane h."""
    pts = np.array(enumerate_points(n, p), dtype=np.int64)
    inc = (pts @ pts.T) % p == 0
    inc.setflags(write=False)
    return inc


@dataclass(frozen=True)
class Subspace:
    """Projective subspace stored by the rref basis of its vector space."""

    basis: tuple[Point, ...]
    p: int = 3

    @classmethod
    def from_vectors(cls, vectors, p: int = 3) -> "Subspace":
        vectors = np.atleast_2d(np.array(vectors, dtype=np.int64))
        R = gf.row_space(vectors, p)
        return cls(tuple(tuple(int(x) for x in row) for row in R), p)

    @property
    def ambient_dim(self) -> int:
        return len(self.basis[0]) - 1 if self.basis else -1

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis) - 1

    def contains(self, point: Sequence[int]) -> bool:
        return gf.rank(list(self.basis) + [list(point)], self.p) == self.rank

    def points(self) -> list[Point]:
        out = set()
        B = np.array(self.basis, dtype=np.int64)
        for coeffs in itertools.product(range(self.p), repeat=self.rank):
            if any(coeffs):
                out.add(canonical(np.array(coeffs) @ B, self.p))
        return sorted(out)

    def annihilator(self) -> np.ndarray:
        """Dual coordinates spanning the hyperplanes through this subspace."""
        return gf.nullspace(np.array(self.basis, dtype=np.int64), self.p)


def span(points: Iterable[Sequence[int]], p: int = 3) -> Subspace:
    points = [tuple(pt) for pt in points]
    if not points:
        raise ValueError("span of an empty point set")
    if len({len(pt) for pt in points}) != 1:
        raise ValueError("points live in different ambient spaces")
    return Subspace.from_vectors(points, p)


def hyperplanes_through(S: Subspace) -> list[Point]:
    """All hyperplanes (as canonical dual coordinates) containing ``S``."""
    ann = S.annihilator()
    if ann.shape[0] == 0:
        return []
    return Subspace.from_vectors(ann, S.p).points()


def is_independent(points: Sequence[Sequence[int]], p: int = 3) -> bool:
    return gf.rank(list(points), p) == len(points)


def line_points(P: Sequence[int], Q: Sequence[int], p: int = 3) -> list[Point]:
    """The p+1 points of the line PQ, ordered P, Q, P+Q, P+2Q, ..."""
    P, Q = canonical(P, p), canonical(Q, p)
    if P == Q:
        raise ValueError("line_points needs two distinct points")
    out = [P, Q]
    for c in range(1, p):
        out.append(canonical([a + c * b for a, b in zip(P, Q)], p))
    return out


@lru_cache(maxsize=None)
def lines_of_plane(p: int = 3) -> tuple[tuple[Point, ...], ...]:
    """Lines of PG(2, p) in dual-coordinate order, each as a sorted point tuple."""
    pts = enumerate_points(2, p)
    return tuple(
        tuple(x for x in pts if incident(x, l, p)) for l in enumerate_points(2, p)
    )


def intersect_lines(P, Q, R, S, p: int = 3) -> Point:
    """Common point of the coplanar lines PQ and RS."""
    M = np.array([P, Q, R, S], dtype=np.int64).T
    ker = gf.nullspace(M, p)
    if ker.shape[0] != 1:
        raise ValueError("lines coincide or are skew")
    a, b = ker[0][:2]
    return canonical(a * np.array(P) + b * np.array(Q), p)


# ---------------------------------------------------------------------------
# quadrics of PG(2,3)

REPEATED_LINE = "repeated-line"
LINE_CROSS = "line-cross"
SINGLE_POINT = "single-point"
CONIC = "conic"
ZERO = "zero"


def _form_matrix(coefficients: Sequence[int]) -> np.ndarray:
    """Symmetric matrix of c00 x0^2 + c01 x0x1 + c02 x0x2 + c11 x1^2 + c12 x1x2 + c22 x2^2."""
    c00, c01, c02, c11, c12, c22 = (int(c) % 3 for c in coefficients)
    h = 2  # 1/2 in GF(3)
    return np.array(
        [[c00, h * c01, h * c02], [h * c01, c11, h * c12], [h * c02, h * c12, c22]],
        dtype=np.int64,
    ) % 3


@dataclass(frozen=True)
class PlaneQuadric:
    """A ternary quadratic form over GF(3) (up to scalar) and its zero set."""

    form: tuple[tuple[int, ...], ...]

    @classmethod
    def from_matrix(cls, A) -> "PlaneQuadric":
        A = np.array(A, dtype=np.int64) % 3
        if A.shape != (3, 3) or not np.array_equal(A, A.T):
            raise ValueError("a plane quadric needs a symmetric 3x3 matrix")
        return cls(tuple(tuple(int(x) for x in row) for row in A))

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[int]) -> "PlaneQuadric":
        return cls.from_matrix(_form_matrix(coefficients))

    def value(self, x: Sequence[int]) -> int:
        A = np.array(self.form, dtype=np.int64)
        x = np.array(x, dtype=np.int64)
        return int(x @ A @ x) % 3

    def zeros(self) -> list[Point]:
        return [x for x in enumerate_points(2, 3) if self.value(x) == 0]

    def bilinear(self, x, y) -> int:
        return int(np.array(x) @ np.array(self.form) @ np.array(y)) % 3

    @property
    def rank(self) -> int:
        return gf.rank(self.form, 3)

    @property
    def kind(self) -> str:
        return classify_plane_quadric(self)[0]


def classify_plane_quadric(q: PlaneQuadric) -> tuple[str, list[Point]]:
    """Kind and zero set.  Rank-2 forms are split by counting their zeros."""
    pts = q.zeros()
    r = q.rank
    if r == 0:
        return ZERO, pts
    if r == 1:
        kind = REPEATED_LINE
    elif r == 2:
        kind = LINE_CROSS if len(pts) == 7 else SINGLE_POINT
    else:
        kind = CONIC
    expected = {REPEATED_LINE: 4, LINE_CROSS: 7, SINGLE_POINT: 1, CONIC: 4}[kind]
    assert len(pts) == expected, (kind, pts)
    return kind, pts


def conic_through(quadrangle: Sequence[Point]) -> PlaneQuadric:
    """The unique nondegenerate quadratic form of PG(2,3) vanishing on a quadrangle."""
    rows = [[x[0] * x[0], x[0] * x[1], x[0] * x[2], x[1] * x[1], x[1] * x[2], x[2] * x[2]]
            for x in quadrangle]
    ker = gf.nullspace(rows, 3)
    found = []
    for coeffs in itertools.product(range(3), repeat=ker.shape[0]):
        if any(coeffs):
            c = canonical(np.array(coeffs) @ ker, 3)
            q = PlaneQuadric.from_coefficients(c)
            if q.rank == 3 and c not in [f[0] for f in found]:
                found.append((c, q))
    if len(found) != 1:
        raise ValueError(f"{len(found)} nondegenerate conics through {quadrangle}")
    return found[0][1]


# ---------------------------------------------------------------------------
# quadrangles and triangles in a plane of order 3

def _plane_of(points: Sequence[Point]) -> Subspace:
    S = span(points)
    if S.dim != 2:
        raise ValueError(f"points span a {S.dim}-flat, not a plane")
    return S


def quadrangle_of_triangle(triangle: Sequence[Sequence[int]]) -> list[Point]:
    """The four points of the triangle's plane lying on none of its sides."""
    tri = [canonical(t) for t in triangle]
    if len(set(tri)) != 3 or not is_independent(tri):
        raise ValueError("input is not a triangle")
    plane = _plane_of(tri)
    on_sides = set()
    for a, b in itertools.combinations(tri, 2):
        on_sides.update(line_points(a, b))
    return [x for x in plane.points() if x not in on_sides]


def _check_quadrangle(quad: Sequence[Sequence[int]]) -> list[Point]:
    quad = [canonical(x) for x in quad]
    if len(set(quad)) != 4:
        raise ValueError("a quadrangle needs four distinct points")
    _plane_of(quad)
    for tri in itertools.combinations(quad, 3):
        if not is_independent(tri):
            raise ValueError(f"three collinear points {tri}")
    return quad


def diagonal_triangle(quadrangle: Sequence[Sequence[int]]) -> list[Point]:
    """Intersections of the three pairs of opposite sides, sorted."""
    a, b, c, d = _check_quadrangle(quadrangle)
    diag = {
        intersect_lines(a, b, c, d),
        intersect_lines(a, c, b, d),
        intersect_lines(a, d, b, c),
    }
    return sorted(diag)


EXTERNAL = "external"
TANGENT = "tangent"
BISECANT = "bisecant"


def line_conic_relation(line: Sequence[Sequence[int]], conic: Sequence[Sequence[int]]):
    """Relation of a line (given by two or more of its points) to a 4-point conic.

    Returns ``(relation, internal_points_on_line)``.
    """
    conic = _check_quadrangle(conic)
    P, Q = canonical(line[0]), canonical(line[1])
    pts = set(line_points(P, Q))
    if not all(x in _plane_of(conic).points() for x in pts):
        raise ValueError("line is not in the plane of the conic")
    meet = len(pts & set(conic))
    relation = {0: EXTERNAL, 1: TANGENT, 2: BISECANT}[meet]
    internal = [x for x in diagonal_triangle(conic) if x in pts]
    return relation, internal


# ---------------------------------------------------------------------------
# involutions on 4-point lines and conics

Pairing = tuple[tuple[Point, Point], tuple[Point, Point]]


def pairings(four: Sequence[Point]) -> list[Pairing]:
    """The three fixed-point-free pairings of four points."""
    a, b, c, d = sorted(four)
    out = [((a, x), tuple(sorted(set((b, c, d)) - {x}))) for x in (b, c, d)]
    return sorted(out)


def apply_pairing(sigma: Pairing, x: Point) -> Point:
    for u, v in sigma:
        if x == u:
            return v
        if x == v:
            return u
    raise KeyError(x)


@lru_cache(maxsize=None)
def _gl2() -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]:
    out = []
    for a, b, c, d in itertools.product(range(3), repeat=4):
        if (a * d - b * c) % 3:
            out.append(((a, b), (c, d)))
    return tuple(out)


def involution_matrix(line: Sequence[Point], sigma: Pairing):
    """A 2x2 matrix over GF(3) acting on parameters (s, t) of sP + tQ that
    realizes ``sigma``; ``None`` if the pairing is not a projectivity."""
    P, Q = line[0], line[1]

    def point(s, t):
        return canonical([s * a + t * b for a, b in zip(P, Q)])

    params = {point(s, t): (s, t) for s, t in enumerate_points(1, 3)}
    for M in _gl2():
        if all(
            point(M[0][0] * s + M[0][1] * t, M[1][0] * s + M[1][1] * t) == apply_pairing(sigma, x)
            for x, (s, t) in params.items()
        ):
            return M
    return None


def elliptic_involutions(line: Sequence[Point]) -> list[Pairing]:
    """The three elliptic involutions of a 4-point line."""
    pts = line_points(line[0], line[1])
    if len(pts) != 4:
        raise ValueError("elliptic involutions need a line with four points")
    out = pairings(pts)
    for sigma in out:
        if involution_matrix(pts, sigma) is None:
            raise AssertionError(f"pairing {sigma} is not a projectivity")
    return out


def homology_center(conic: Sequence[Point], sigma: Pairing) -> Point:
    """Centre of the harmonic homology extending ``sigma``: the meet of its two chords."""
    conic = _check_quadrangle(conic)
    flat = [x for pair in sigma for x in pair]
    if len(sigma) != 2 or sorted(flat) != sorted(conic):
        raise ValueError("sigma is not a pairing of the conic's points")
    (a, b), (c, d) = sigma
    return intersect_lines(a, b, c, d)


def harmonic_homology(conic: Sequence[Point], sigma: Pairing):
    """The harmonic homology of the conic's plane whose centre is
    ``homology_center(conic, sigma)`` and whose axis joins the other two
    diagonal points.  Returned as a map on the plane's points."""
    center = homology_center(conic, sigma)
    axis = [x for x in diagonal_triangle(conic) if x != center]
    B = np.array([center] + axis, dtype=np.int64).T
    plane_pts = _plane_of(conic).points()

    images = {}
    for x in plane_pts:
        coeffs, _ = gf.solve(B, x, 3)
        coeffs[0] = (-coeffs[0]) % 3
        images[x] = canonical(B @ coeffs)
    return images
