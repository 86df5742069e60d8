"""The Veronese map PG(2,3) -> PG(5,3), the 12-point set K obtained by
swapping the conic at infinity for its diagonal triangle, the reverse swap,
and explicit projectivity search between point sets.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from witt12 import gf
from witt12.projgeom import (
    Point,
    PlaneQuadric,
    canonical,
    diagonal_triangle,
    enumerate_points,
    incident,
    is_independent,
    quadrangle_of_triangle,
)

P = 3


def veronese_vector(x: Sequence[int]) -> tuple[int, ...]:
    x0, x1, x2 = (int(c) % P for c in x)
    return tuple(
        v % P for v in (x0 * x0, x0 * x1, x0 * x2, x1 * x1, x1 * x2, x2 * x2)
    )


def veronese_point(x: Sequence[int]) -> Point:
    return canonical(veronese_vector(x))


def veronese_surface() -> list[Point]:
    """Images of the 13 points of PG(2,3), in PG(2,3) enumeration order."""
    return [veronese_point(x) for x in enumerate_points(2, P)]


def sym_square(A) -> np.ndarray:
    """The 6x6 matrix S with veronese_vector(A x) = S veronese_vector(x).

    Columns for square monomials are the images of A's columns; columns for
    mixed monomials come from polarization of the pair of columns.
    """
    A = np.array(A, dtype=np.int64) % P
    if A.shape != (3, 3):
        raise ValueError("sym_square needs a 3x3 matrix")
    if gf.rank(A, P) != 3:
        raise ValueError("sym_square needs an invertible matrix")
    col = [A[:, k] for k in range(3)]
    S = np.zeros((6, 6), dtype=np.int64)
    j = 0
    for k in range(3):
        for l in range(k, 3):
            if k == l:
                S[:, j] = veronese_vector(col[k])
            else:
                both = np.array(veronese_vector(col[k] + col[l]))
                S[:, j] = both - veronese_vector(col[k]) - veronese_vector(col[l])
            j += 1
    return S % P


def canonical_matrix(M) -> np.ndarray:
    """Scale M so the first nonzero entry of its first nonzero column is 1."""
    M = np.array(M, dtype=np.int64) % P
    flat = M.T.reshape(-1)
    nz = np.flatnonzero(flat)
    if nz.size == 0:
        raise ValueError("zero matrix")
    return (M * pow(int(flat[nz[0]]), -1, P)) % P


def apply(M, x: Sequence[int]) -> Point:
    return canonical(np.asarray(M, dtype=np.int64) @ np.asarray(x, dtype=np.int64))


def hyperplane_preimage_quadric(h: Sequence[int]) -> PlaneQuadric:
    """Quadratic form x -> <h, veronese_vector(x)> on PG(2,3)."""
    return PlaneQuadric.from_coefficients(h)


@dataclass(frozen=True)
class VeroneseConfig:
    infinity_line: Point = (1, 0, 0)

    def __post_init__(self):
        object.__setattr__(self, "infinity_line", canonical(self.infinity_line))

    def line_at_infinity(self) -> list[Point]:
        return [x for x in enumerate_points(2, P) if incident(x, self.infinity_line)]

    def affine_points(self) -> list[Point]:
        return [x for x in enumerate_points(2, P) if not incident(x, self.infinity_line)]


@dataclass(frozen=True)
class KSet:
    """The 12 points of K in sorted order, with their provenance."""

    points: tuple[Point, ...]
    affine: tuple[Point, ...] = ()  # points of PG(2,3) off the line at infinity
    gamma: tuple[Point, ...] = ()  # conic at infinity, removed
    delta: tuple[Point, ...] = ()  # its diagonal triangle, added
    config: VeroneseConfig = field(default_factory=VeroneseConfig)

    def index(self, point: Sequence[int]) -> int:
        return self.points.index(canonical(point))

    def vectors(self) -> np.ndarray:
        return np.array(self.points, dtype=np.int64)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def construct_K(cfg: VeroneseConfig | None = None) -> KSet:
    cfg = cfg or VeroneseConfig()
    gamma = [veronese_point(x) for x in cfg.line_at_infinity()]
    delta = diagonal_triangle(gamma)
    affine = cfg.affine_points()
    pts = sorted({veronese_point(x) for x in affine} | set(delta))
    return KSet(tuple(pts), tuple(affine), tuple(sorted(gamma)), tuple(delta), cfg)


def reverse_construct(K: Sequence[Point], triangle: Sequence[Point]) -> list[Point]:
    """Replace a triangle of K by its associated conic; returns 13 sorted points."""
    K = [canonical(x) for x in K]
    tri = [canonical(x) for x in triangle]
    if len(set(tri)) != 3 or not set(tri) <= set(K):
        raise ValueError("triangle is not a 3-subset of K")
    if not is_independent(tri):
        raise ValueError("the three points are collinear")
    conic = quadrangle_of_triangle(tri)
    return sorted((set(K) - set(tri)) | set(conic))


# ---------------------------------------------------------------------------
# projectivities

def in_general_position(points: Sequence[Sequence[int]]) -> bool:
    """Every (n+1)-subset of the points in PG(n, 3) is independent."""
    n1 = len(points[0])
    if len(points) <= n1:
        return is_independent(points)
    return all(is_independent(s) for s in itertools.combinations(points, n1))


def _frame_basis(frame: Sequence[Sequence[int]]) -> np.ndarray:
    """Columns frame[i] scaled so that they sum to frame[-1]."""
    B = np.array(frame[:-1], dtype=np.int64).T
    sol = gf.solve(B, frame[-1], P)
    if sol is None:
        raise ValueError("frame is not in general position")
    mu = sol[0]
    if not mu.all():
        raise ValueError("frame is not in general position")
    return (B * mu) % P


def find_projectivity(src_frame, dst_frame) -> np.ndarray:
    """Matrix (canonical up to scalar) mapping src_frame[i] to dst_frame[i]."""
    src = [tuple(x) for x in src_frame]
    dst = [tuple(x) for x in dst_frame]
    if {len(x) for x in src} != {len(x) for x in dst} or len({len(x) for x in src}) != 1:
        raise ValueError("frames live in different ambient spaces")
    n1 = len(src[0])
    if len(src) != n1 + 1 or len(dst) != n1 + 1:
        raise ValueError(f"a frame of PG({n1 - 1},3) has {n1 + 1} points")
    if not (in_general_position(src) and in_general_position(dst)):
        raise ValueError("frames are not in general position")
    S = _frame_basis(src)
    D = _frame_basis(dst)
    return canonical_matrix(gf.matmul(D, gf.inverse(S, P), P))


def maps_setwise(M, src: Sequence[Point], dst: Sequence[Point]) -> bool:
    return sorted(apply(M, x) for x in src) == sorted(canonical(y) for y in dst)


def solve_projectivity(src: Sequence[Sequence[int]], dst: Sequence[Sequence[int]]) -> np.ndarray | None:
    """The matrix M with M src[i] proportional to dst[i] for every i.

    Solves the homogeneous system in the entries of M and one scalar per
    point.  Returns the canonical matrix when the solution is unique up to
    scalar and invertible, else None.
    """
    if len(src) != len(dst):
        raise ValueError("correspondence lists differ in length")
    n1 = len(src[0])
    m = len(src)
    A = np.zeros((m * n1, n1 * n1 + m), dtype=np.int64)
    for i, (x, y) in enumerate(zip(src, dst)):
        for r in range(n1):
            A[i * n1 + r, r * n1 : (r + 1) * n1] = x
            A[i * n1 + r, n1 * n1 + i] = -y[r]
    ker = gf.nullspace(A % P, P)
    if ker.shape[0] != 1:
        return None
    M = ker[0, : n1 * n1].reshape(n1, n1)
    if gf.rank(M, P) != n1:
        return None
    return canonical_matrix(M)


def _stabilizer_dim(points: Sequence[Sequence[int]]) -> int:
    n1 = len(points[0])
    m = len(points)
    A = np.zeros((m * n1, n1 * n1 + m), dtype=np.int64)
    for i, x in enumerate(points):
        for r in range(n1):
            A[i * n1 + r, r * n1 : (r + 1) * n1] = x
            A[i * n1 + r, n1 * n1 + i] = -x[r]
    return gf.nullspace(A % P, P).shape[0]


def determining_tuple(points: Sequence[Point]) -> tuple[Point, ...]:
    """Greedy ordered subset of ``points`` whose images determine a collineation.

    Points are taken in sorted order and kept when they raise the rank or
    shrink the space of matrices fixing every kept point up to scalar.
    """
    chosen: list[Point] = []
    dim = None
    for x in sorted(points):
        cand = chosen + [x]
        if not chosen or gf.rank(cand, P) > gf.rank(chosen, P):
            chosen = cand
            continue
        d = _stabilizer_dim(cand)
        if dim is None or d < dim:
            chosen, dim = cand, d
            if d == 1 and gf.rank(chosen, P) == len(x):
                return tuple(chosen)
    if gf.rank(chosen, P) == len(chosen[0]) and _stabilizer_dim(chosen) == 1:
        return tuple(chosen)
    raise ValueError("points do not determine a collineation")


def first_frame(points: Sequence[Point]) -> tuple[Point, ...]:
    """Lexicographically first (n+2)-subset in general position."""
    n1 = len(points[0])
    for combo in itertools.combinations(sorted(points), n1 + 1):
        if in_general_position(combo):
            return combo
    raise ValueError("point set contains no frame")


def _annihilator(points) -> np.ndarray:
    return gf.nullspace(np.array(points, dtype=np.int64), P)


def _span_count(points, ann: np.ndarray) -> int:
    if ann.shape[0] == 0:
        return len(points)
    return int((((points @ ann.T) % P) == 0).all(axis=1).sum())


def _subset_invariants(arr: np.ndarray, max_size: int) -> dict[tuple[int, ...], tuple[int, int]]:
    """(rank, points of the set on the span) for every subset of up to max_size points."""
    out = {}
    n1 = arr.shape[1]
    for size in range(1, max_size + 1):
        for sub in itertools.combinations(range(len(arr)), size):
            ann = _annihilator(arr[list(sub)])
            out[sub] = (n1 - ann.shape[0], _span_count(arr, ann))
    return out


def find_setwise_projectivity(src: Sequence[Point], dst: Sequence[Point]) -> np.ndarray | None:
    """Backtracking search for a collineation mapping ``src`` onto ``dst``.

    A determining tuple is fixed inside ``src``; ordered tuples of ``dst`` are
    tried as its image.  A partial assignment survives only if every subset
    of at most five assigned points keeps its rank and the number of set
    points on its span.  Returns the canonical matrix of the first match, or
    None.
    """
    src = sorted(canonical(x) for x in src)
    dst = sorted(canonical(x) for x in dst)
    if len(src) != len(dst):
        return None
    base = determining_tuple(src)
    src_arr = np.array(src, dtype=np.int64)
    dst_arr = np.array(dst, dtype=np.int64)
    depth = min(5, len(base))
    inv_src = _subset_invariants(src_arr, depth)
    inv_dst = _subset_invariants(dst_arr, depth)
    if Counter(inv_src.values()) != Counter(inv_dst.values()):
        return None
    base_idx = [src.index(x) for x in base]

    chosen: list[int] = []

    def consistent(y: int) -> bool:
        k = len(chosen)
        for size in range(0, depth):
            for T in itertools.combinations(range(k), size):
                s_key = tuple(sorted([base_idx[i] for i in T] + [base_idx[k]]))
                d_key = tuple(sorted([chosen[i] for i in T] + [y]))
                if inv_src[s_key] != inv_dst[d_key]:
                    return False
        return True

    def extend(k: int):
        for y in range(len(dst)):
            if y in chosen or not consistent(y):
                continue
            chosen.append(y)
            if k == len(base) - 1:
                M = solve_projectivity(base, [dst[i] for i in chosen])
                if M is not None and maps_setwise(M, src, dst):
                    return M
            else:
                found = extend(k + 1)
                if found is not None:
                    return found
            chosen.pop()
        return None

    return extend(0)


def equivalence_to_veronese(V: Sequence[Point]) -> np.ndarray:
    """A collineation matrix mapping V onto the Veronese surface."""
    M = find_setwise_projectivity(V, veronese_surface())
    if M is None:
        raise ValueError("no projectivity onto the Veronese surface exists")
    return M


def pgl3() -> list[np.ndarray]:
    """One canonical representative of each element of PGL(3,3) (5616 of them)."""
    out = {}
    for entries in itertools.product(range(P), repeat=9):
        A = np.array(entries, dtype=np.int64).reshape(3, 3)
        if round(np.linalg.det(A)) % P == 0:
            continue
        C = canonical_matrix(A)
        out.setdefault(C.tobytes(), C)
    return list(out.values())
