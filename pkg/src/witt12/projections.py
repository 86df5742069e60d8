"""Projections of K from points, bisecants and triangles, and the affine
model of the design: nine affine points plus three elliptic involutions.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from witt12 import gf
from witt12.design import extract_blocks
from witt12.projgeom import (
    Pairing,
    Point,
    Subspace,
    canonical,
    conic_through,
    elliptic_involutions,
    enumerate_points,
    harmonic_homology,
    homology_center,
    incident,
    is_independent,
    line_points,
    lines_of_plane,
    span,
)
from witt12.veronese import KSet, VeroneseConfig, construct_K, veronese_point

P = 3


@dataclass(frozen=True)
class ProjectionSetup:
    center: Subspace
    screen: Subspace

    def __post_init__(self):
        n1 = len(self.center.basis[0])
        both = list(self.center.basis) + list(self.screen.basis)
        if len(both) != n1 or gf.rank(both, P) != n1:
            raise ValueError("centre and screen are not complementary")


def default_screen(center: Subspace) -> Subspace:
    """Coordinate flat spanned by the unit vectors at the non-pivot columns of the centre."""
    _, _, pivots = gf.rref(np.array(center.basis), P)
    n1 = len(center.basis[0])
    units = [tuple(int(i == j) for j in range(n1)) for i in range(n1) if i not in pivots]
    return Subspace.from_vectors(units, P)


def setup_for(center_points: Sequence[Point], screen: Subspace | None = None) -> ProjectionSetup:
    c = span(center_points)
    return ProjectionSetup(c, screen if screen is not None else default_screen(c))


def project(points: Sequence[Point], setup: ProjectionSetup) -> list[Point]:
    """Image of each point: the meet of span(centre, point) with the screen."""
    C = np.array(setup.center.basis, dtype=np.int64)
    S = np.array(setup.screen.basis, dtype=np.int64)
    A = np.vstack([C, S]).T
    out = []
    for x in points:
        if setup.center.contains(x):
            raise ValueError(f"point {tuple(x)} lies in the centre of projection")
        coeffs, _ = gf.solve(A, x, P)
        out.append(canonical(coeffs[C.shape[0]:] @ S))
    return out


def local_coordinates(points: Sequence[Point]) -> tuple[list[Point], np.ndarray]:
    """Coordinates of the points relative to the rref basis of their span."""
    basis = np.array(span(points).basis, dtype=np.int64)
    out = []
    for x in points:
        coeffs, _ = gf.solve(basis.T, x, P)
        out.append(canonical(coeffs))
    return out, basis


@dataclass
class Certificate:
    ok: bool
    data: dict = field(default_factory=dict)


def certify_cap(points: Sequence[Point]) -> Certificate:
    pts = [canonical(x) for x in points]
    for triple in itertools.combinations(pts, 3):
        if not is_independent(triple):
            return Certificate(False, {"collinear": [list(x) for x in triple]})
    return Certificate(True, {"size": len(pts), "span_dim": span(pts).dim})


def certify_affine_plane(points: Sequence[Point]) -> Certificate:
    """Nine distinct points of a plane whose complement in that plane is a line."""
    pts = sorted({canonical(x) for x in points})
    plane = span(pts)
    if len(pts) != 9 or plane.dim != 2:
        return Certificate(False, {"distinct": len(pts), "span_dim": plane.dim})
    rest = sorted(set(plane.points()) - set(pts))
    ok = len(rest) == 4 and span(rest).dim == 1
    return Certificate(ok, {"missing_line": [list(x) for x in rest]})


def _monomials(x: Sequence[int]) -> list[int]:
    n = len(x)
    return [x[i] * x[j] % P for i in range(n) for j in range(i, n)]


def _form_matrix(coeffs: Sequence[int], n: int) -> np.ndarray:
    A = np.zeros((n, n), dtype=np.int64)
    k = 0
    for i in range(n):
        for j in range(i, n):
            if i == j:
                A[i, i] = coeffs[k]
            else:
                A[i, j] = A[j, i] = 2 * coeffs[k]  # 2 = 1/2 in GF(3)
            k += 1
    return A % P


def certify_elliptic_quadric(points: Sequence[Point]) -> Certificate:
    """Find the quadratic form vanishing on a point set spanning a solid and
    check that its zero set is exactly the set, nondegenerate, and line-free."""
    loc, basis = local_coordinates(points)
    n = len(loc[0])
    if n != 4:
        return Certificate(False, {"reason": f"points span a {n - 1}-flat, not a solid"})
    ker = gf.nullspace([_monomials(x) for x in loc], P)
    if ker.shape[0] != 1:
        return Certificate(False, {"reason": f"{ker.shape[0]} independent forms vanish on the set"})
    coeffs = canonical(ker[0])
    A = _form_matrix(coeffs, n)
    zeros = [x for x in enumerate_points(3, P) if int(np.array(x) @ A @ np.array(x)) % P == 0]
    data = {
        "form": list(coeffs),
        "zero_count": len(zeros),
        "rank": gf.rank(A, P),
    }
    if sorted(zeros) != sorted(set(loc)):
        data["reason"] = "zero set differs from the point set"
        return Certificate(False, data)
    if data["rank"] != 4:
        data["reason"] = "degenerate form"
        return Certificate(False, data)
    zs = set(zeros)
    for a, b in itertools.combinations(zeros, 2):
        line = line_points(a, b)
        if all(x in zs for x in line):
            data["reason"] = "zero set contains a line"
            data["line"] = [list(x) for x in line]
            return Certificate(False, data)
    return Certificate(len(zeros) == 10, data)


def point_projection(K: KSet, i: int) -> tuple[list[Point], ProjectionSetup]:
    setup = setup_for([K.points[i]])
    rest = [x for j, x in enumerate(K.points) if j != i]
    return project(rest, setup), setup


def bisecant_projection(K: KSet, i: int, j: int) -> tuple[list[Point], ProjectionSetup]:
    setup = setup_for([K.points[i], K.points[j]])
    rest = [x for k, x in enumerate(K.points) if k not in (i, j)]
    return project(rest, setup), setup


def triangle_projection(K: KSet, tri: Sequence[int]) -> tuple[list[Point], ProjectionSetup]:
    setup = setup_for([K.points[i] for i in tri])
    rest = [x for k, x in enumerate(K.points) if k not in tri]
    return project(rest, setup), setup


def cap_solid_blocks(images: Sequence[Point]) -> list[tuple[int, ...]]:
    """5-subsets of a point set in a 4-flat that lie in a common solid."""
    return [
        s for s in itertools.combinations(range(len(images)), 5)
        if gf.rank([images[i] for i in s], P) == 4
    ]


def certify_affinity(cfg: VeroneseConfig | None = None) -> Certificate:
    """Projecting K from span(delta) onto x3=x4=x5=0 fixes every affine point F(1,a,b)."""
    cfg = cfg or VeroneseConfig()
    if cfg.infinity_line != (1, 0, 0):
        raise ValueError("the coordinate affinity needs the line x0 = 0 at infinity")
    K = construct_K(cfg)
    setup = setup_for(K.delta)
    screen = Subspace.from_vectors(np.eye(6, dtype=np.int64)[:3], P)
    if setup.screen != screen:
        raise AssertionError("default screen is not x3 = x4 = x5 = 0")
    affine = list(K.affine)
    images = project([veronese_point(x) for x in affine], setup)
    as_plane = [canonical(y[:3]) for y in images]
    mismatches = [(list(x), list(y)) for x, y in zip(affine, as_plane) if x != y]
    lines = [
        [x for x in line if not incident(x, cfg.infinity_line)] for line in lines_of_plane(P)
        if line != tuple(cfg.line_at_infinity())
    ]
    where = dict(zip(affine, as_plane))
    collinear = all(not is_independent([where[x] for x in ln]) for ln in lines)
    ok = not mismatches and collinear and all(y[3:] == (0, 0, 0) for y in images)
    return Certificate(ok, {"mismatches": mismatches, "affine_lines": len(lines), "lines_preserved": collinear})


# ---------------------------------------------------------------------------
# the affine model

@dataclass
class AffineModel:
    config: VeroneseConfig
    K: KSet
    affine_points: list[Point]
    involutions: list[Pairing]
    center_of: dict  # pairing -> point of delta
    point_map: list  # index into K.points -> ("affine", pt) or ("involution", pairing)


def transport_pairing(sigma: Pairing) -> Pairing:
    (a, b), (c, d) = sigma
    return ((veronese_point(a), veronese_point(b)), (veronese_point(c), veronese_point(d)))


def involution_correspondence(cfg: VeroneseConfig | None = None) -> dict:
    """Elliptic involution on the line at infinity -> homology centre in delta."""
    K = construct_K(cfg or VeroneseConfig())
    line = (cfg or VeroneseConfig()).line_at_infinity()
    gamma = list(K.gamma)
    out = {}
    for sigma in elliptic_involutions(line):
        tau = transport_pairing(sigma)
        center = homology_center(gamma, tau)
        h = harmonic_homology(gamma, tau)
        if sorted(h[x] for x in gamma) != sorted(gamma):
            raise AssertionError("homology does not preserve the conic")
        if any(h[x] != _pair_image(tau, x) for x in gamma):
            raise AssertionError("homology does not induce the involution")
        out[sigma] = center
    if sorted(out.values()) != sorted(K.delta):
        raise AssertionError("homology centres are not the diagonal triangle")
    return out


def _pair_image(sigma: Pairing, x: Point) -> Point:
    for u, v in sigma:
        if x == u:
            return v
        if x == v:
            return u
    raise KeyError(x)


def affine_model(cfg: VeroneseConfig | None = None) -> AffineModel:
    cfg = cfg or VeroneseConfig()
    K = construct_K(cfg)
    centers = involution_correspondence(cfg)
    by_center = {c: s for s, c in centers.items()}
    by_image = {veronese_point(x): x for x in K.affine}
    point_map = []
    for x in K.points:
        if x in by_image:
            point_map.append(("affine", by_image[x]))
        else:
            point_map.append(("involution", by_center[x]))
    return AffineModel(cfg, K, list(K.affine), sorted(centers), centers, point_map)


LINE_3INV = "line+3inv"
ELLIPSE_2INV = "ellipse+2inv"
PARALLEL_PAIR = "parallel-pair"
CROSS_1INV = "cross+1inv"
BLOCK_TYPES = (LINE_3INV, ELLIPSE_2INV, PARALLEL_PAIR, CROSS_1INV)


@dataclass
class BlockClassification:
    tag: str | None
    affine: list[Point]
    involutions: list[Pairing]
    rule_ok: bool
    detail: dict = field(default_factory=dict)


def _affine_lines(model: AffineModel) -> list[tuple[frozenset, Point]]:
    """Affine lines (as point sets) with their point at infinity."""
    linf = model.config.line_at_infinity()
    out = []
    for line in lines_of_plane(P):
        if set(line) == set(linf):
            continue
        aff = frozenset(x for x in line if x not in linf)
        inf = next(x for x in line if x in linf)
        out.append((aff, inf))
    return out


def conjugacy_involution(model: AffineModel, ellipse: Sequence[Point]) -> Pairing:
    """Pairs of points at infinity conjugate with respect to the ellipse's polarity."""
    q = conic_through(ellipse)
    linf = model.config.line_at_infinity()
    pairs = set()
    for x in linf:
        mates = [y for y in linf if y != x and q.bilinear(x, y) == 0]
        if len(mates) != 1:
            raise AssertionError("conjugacy on the line at infinity is not an involution")
        pairs.add(tuple(sorted((x, mates[0]))))
    return tuple(sorted(pairs))


def lueneburg_classify(model: AffineModel, block: Sequence[int]) -> BlockClassification:
    aff = sorted(model.point_map[i][1] for i in block if model.point_map[i][0] == "affine")
    inv = sorted(model.point_map[i][1] for i in block if model.point_map[i][0] == "involution")
    lines = _affine_lines(model)
    A = frozenset(aff)

    if len(aff) == 3 and any(A == ln for ln, _ in lines):
        return BlockClassification(LINE_3INV, aff, inv, len(inv) == 3)

    if len(aff) == 6:
        for (l1, i1), (l2, i2) in itertools.combinations(lines, 2):
            if l1 | l2 == A and not l1 & l2:
                return BlockClassification(
                    PARALLEL_PAIR, aff, inv, i1 == i2 and not inv, {"direction": list(i1)}
                )

    if len(aff) == 5:
        for (l1, i1), (l2, i2) in itertools.combinations(lines, 2):
            if l1 | l2 == A and len(l1 & l2) == 1:
                swap = next(s for s in model.involutions if _pair_image(s, i1) == i2)
                return BlockClassification(
                    CROSS_1INV, aff, inv, inv == [swap],
                    {"double_point": list(next(iter(l1 & l2))), "directions": [list(i1), list(i2)]},
                )

    if len(aff) == 4 and all(is_independent(t) for t in itertools.combinations(aff, 3)):
        excluded = conjugacy_involution(model, aff)
        expected = sorted(s for s in model.involutions if s != excluded)
        return BlockClassification(
            ELLIPSE_2INV, aff, inv, inv == expected, {"excluded": [list(map(list, p)) for p in excluded]}
        )

    return BlockClassification(None, aff, inv, False)


def reassemble(model: AffineModel, cls: BlockClassification) -> list[Point]:
    pts = [veronese_point(x) for x in cls.affine] + [model.center_of[s] for s in cls.involutions]
    return sorted(pts)


def classify_all(cfg: VeroneseConfig | None = None):
    """Classify every block; returns (model, design, classifications, tag histogram)."""
    model = affine_model(cfg)
    D = extract_blocks(model.K)
    result = [lueneburg_classify(model, blk) for blk in D.blocks]
    hist = Counter(c.tag for c in result)
    return model, D, result, {t: hist.get(t, 0) for t in BLOCK_TYPES}
