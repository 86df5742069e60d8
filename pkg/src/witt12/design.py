"""Hyperplane spectra, block extraction, t-design certificates, the
five-subset / hyperplane-section characterization of K, and derived designs.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

import numpy as np

from witt12.projgeom import (
    Point,
    canonical,
    enumerate_points,
    hyperplanes_through,
    incidence_matrix,
    is_independent,
    point_index,
    span,
)


@dataclass(frozen=True)
class Design:
    """A finite incidence structure: points 0..v-1 and sorted blocks."""

    v: int
    blocks: tuple[tuple[int, ...], ...]
    labels: tuple | None = None

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        if len(set(blocks)) != len(blocks):
            raise ValueError("repeated block")
        for b in blocks:
            if any(not 0 <= x < self.v for x in b):
                raise ValueError(f"block {b} has entries outside [0, {self.v})")
        object.__setattr__(self, "blocks", blocks)

    @property
    def b(self) -> int:
        return len(self.blocks)

    def block_masks(self) -> set[int]:
        return {sum(1 << x for x in blk) for blk in self.blocks}


@dataclass
class SpectrumReport:
    histogram: dict[int, int]

    @property
    def support(self) -> set[int]:
        return set(self.histogram)

    @property
    def total(self) -> int:
        return sum(self.histogram.values())


def section_sizes(points: Sequence[Point]) -> np.ndarray:
    """|H n S| for each of the 364 hyperplanes H of PG(5,3), in enumeration order."""
    idx = point_index(5, 3)
    cols = [idx[canonical(x)] for x in points]
    return incidence_matrix(5, 3)[:, cols].sum(axis=1)


def hyperplane_spectrum(points: Sequence[Point]) -> SpectrumReport:
    sizes = section_sizes(points)
    return SpectrumReport(dict(sorted(Counter(int(s) for s in sizes).items())))


def hyperplane_sections(points: Sequence[Point]) -> list[tuple[Point, tuple[int, ...]]]:
    """(hyperplane, sorted indices of points on it) for all 364 hyperplanes."""
    inc = incidence_matrix(5, 3)
    idx = point_index(5, 3)
    cols = [idx[canonical(x)] for x in points]
    sub = inc[:, cols]
    return [
        (h, tuple(int(i) for i in np.flatnonzero(sub[j])))
        for j, h in enumerate(enumerate_points(5, 3))
    ]


def extract_blocks(K) -> Design:
    """Hyperplane sections of K with more than three points, as index sets."""
    points = tuple(K)
    blocks = [sec for _, sec in hyperplane_sections(points) if len(sec) > 3]
    if len(set(blocks)) != len(blocks):
        raise AssertionError("two hyperplanes cut out the same block")
    return Design(len(points), tuple(blocks), labels=points)


def block_hyperplanes(K) -> dict[tuple[int, ...], Point]:
    return {sec: h for h, sec in hyperplane_sections(tuple(K)) if len(sec) > 3}


@dataclass
class DesignCertificate:
    ok: bool
    t: int
    k: int
    lam: int
    b: int
    r: int | None
    witness: dict = field(default_factory=dict)


def verify_t_design(D: Design, t: int, k: int, lam: int) -> DesignCertificate:
    """Exhaustively count blocks through every t-subset of points."""
    bad_block = next((blk for blk in D.blocks if len(blk) != k), None)
    if bad_block is not None:
        return DesignCertificate(False, t, k, lam, D.b, None, {"block_of_wrong_size": list(bad_block)})
    cover: Counter = Counter()
    for blk in D.blocks:
        for sub in itertools.combinations(blk, t):
            cover[sub] += 1
    for sub in itertools.combinations(range(D.v), t):
        if cover[sub] != lam:
            return DesignCertificate(
                False, t, k, lam, D.b, None, {"subset": list(sub), "count": cover[sub]}
            )
    degrees = Counter(x for blk in D.blocks for x in blk)
    reps = {degrees[x] for x in range(D.v)}
    r = reps.pop() if len(reps) == 1 else None
    return DesignCertificate(True, t, k, lam, D.b, r)


def derived_design(D: Design, point: int) -> Design:
    """Blocks through ``point`` with ``point`` removed; remaining points relabelled in order."""
    if not 0 <= point < D.v:
        raise ValueError(f"point {point} outside [0, {D.v})")
    relabel = {x: i for i, x in enumerate(x for x in range(D.v) if x != point)}
    blocks = [tuple(relabel[x] for x in blk if x != point) for blk in D.blocks if point in blk]
    labels = None
    if D.labels is not None:
        labels = tuple(lab for i, lab in enumerate(D.labels) if i != point)
    return Design(D.v - 1, tuple(blocks), labels)


# ---------------------------------------------------------------------------
# characterization by independence and section sizes

@dataclass
class CharacterizationReport:
    five_independent: bool
    big_sections_are_six: bool
    at_least_seven: bool
    spectrum_036: bool
    twelve_points: bool

    @property
    def lhs(self) -> bool:
        return self.spectrum_036 and self.twelve_points

    @property
    def rhs(self) -> bool:
        return self.five_independent and self.big_sections_are_six and self.at_least_seven

    @property
    def consistent(self) -> bool:
        return self.lhs == self.rhs


def check_lemma2(points: Sequence[Point]) -> CharacterizationReport:
    points = sorted({canonical(x) for x in points})
    sizes = section_sizes(points)
    five = all(is_independent(s) for s in itertools.combinations(points, 5))
    return CharacterizationReport(
        five_independent=five,
        big_sections_are_six=bool(np.all((sizes < 5) | (sizes == 6))),
        at_least_seven=len(points) >= 7,
        spectrum_036=set(int(s) for s in sizes) <= {0, 3, 6},
        twelve_points=len(points) == 12,
    )


def hyperplane_of_triangle(K, triangle: Sequence[Point]) -> Point:
    """The unique hyperplane meeting K in exactly the given three points."""
    K = {canonical(x) for x in K}
    tri = {canonical(x) for x in triangle}
    if len(tri) != 3 or not tri <= K:
        raise ValueError("triangle is not a 3-subset of K")
    hits = [
        h for h in hyperplanes_through(span(tri))
        if {x for x in K if sum(a * b for a, b in zip(x, h)) % 3 == 0} == tri
    ]
    if len(hits) != 1:
        raise ValueError(f"{len(hits)} hyperplanes meet K exactly in the triangle")
    return hits[0]


def triangle_and_point_counts(K) -> dict:
    """Counts of hyperplanes through triangles and points of K by section size."""
    K = tuple(K)
    sizes = section_sizes(K)
    inc = incidence_matrix(5, 3)[:, [point_index(5, 3)[x] for x in K]]
    through_triangle = Counter()
    for tri in itertools.combinations(range(len(K)), 3):
        on = inc[:, list(tri)].all(axis=1)
        through_triangle[(int(on.sum()), tuple(sorted(Counter(sizes[on].tolist()).items())))] += 1
    through_point = Counter()
    for i in range(len(K)):
        on = inc[:, i]
        through_point[(int(on.sum()), tuple(sorted(Counter(sizes[on].tolist()).items())))] += 1
    return {"triangles": dict(through_triangle), "points": dict(through_point)}


def steiner_block_count(v: int, t: int, k: int) -> int:
    return comb(v, t) // comb(k, t)


# ---------------------------------------------------------------------------
# case audits: section size through the plane of a conic / triangle

def _plane_case(h: Point, plane, conic) -> tuple[str, int]:
    """(case, |H n conic|) for the meet of hyperplane h with the given plane."""
    on_h = [x for x in plane.points() if sum(a * b for a, b in zip(x, h)) % 3 == 0]
    meet = sum(1 for x in conic if x in on_h)
    if len(on_h) == len(plane.points()):
        return "contained", meet
    return {0: "external", 1: "tangent", 2: "bisecant"}[meet], meet


def audit_construction(cfg=None) -> dict:
    """Explain every section size of K through the preimage quadric.

    For each hyperplane H: d_H = #Q - |H n conic| + |H n triangle|, where Q is
    the quadric of PG(2,3) pulled back from H.  The quadric kinds and the
    triangle counts must match the case of how H meets the plane at infinity.
    Returns per-case histograms of (quadric kind, d_H) and a list of violations.
    """
    from witt12.projgeom import classify_plane_quadric
    from witt12.veronese import VeroneseConfig, construct_K, hyperplane_preimage_quadric

    cfg = cfg or VeroneseConfig()
    K = construct_K(cfg)
    plane = span(K.gamma)
    linf = set(cfg.line_at_infinity())
    allowed_delta = {"contained": 3, "external": 2, "tangent": 0, "bisecant": 1}
    cases: dict = {c: Counter() for c in allowed_delta}
    bad = []
    for h in enumerate_points(5, 3):
        case, on_gamma = _plane_case(h, plane, K.gamma)
        kind, zeros = classify_plane_quadric(hyperplane_preimage_quadric(h))
        on_delta = sum(1 for x in K.delta if sum(a * b for a, b in zip(x, h)) % 3 == 0)
        d = sum(1 for x in K.points if sum(a * b for a, b in zip(x, h)) % 3 == 0)
        at_inf = len(set(zeros) & linf)
        ok = d == len(zeros) - on_gamma + on_delta and on_delta == allowed_delta[case]
        if case == "contained":
            ok &= linf <= set(zeros) and kind in ("repeated-line", "line-cross")
        elif case == "external":
            ok &= kind == "single-point" or (kind == "conic" and at_inf == 0)
        elif case == "tangent":
            ok &= (
                (kind == "repeated-line" and not linf <= set(zeros))
                or (kind == "line-cross" and at_inf == 1)
                or (kind == "conic" and at_inf == 1)
                # a lone point at infinity: the only source of empty sections
                or (kind == "single-point" and at_inf == 1)
            )
        else:
            ok &= (kind == "line-cross" and at_inf == 2) or (kind == "conic" and at_inf == 2)
        ok &= d in (0, 3, 6)
        cases[case][(kind, d)] += 1
        if not ok:
            bad.append({"hyperplane": list(h), "case": case, "kind": kind, "d": d})
    empty = cases["tangent"].get(("single-point", 0), 0)
    return {
        "cases": {c: dict(v) for c, v in cases.items()},
        "violations": bad,
        "empty_sections_from_point_at_infinity": empty,
    }


def audit_reverse(K, triangle: Sequence[Point]) -> dict:
    """Section sizes c_H of the 13-set obtained by swapping ``triangle`` for its conic,
    explained case by case from d_H = |H n K|."""
    from witt12.projgeom import quadrangle_of_triangle

    K = tuple(K)
    tri = [canonical(x) for x in triangle]
    conic = quadrangle_of_triangle(tri)
    V = sorted((set(K) - set(tri)) | set(conic))
    plane_pts = span(tri).points()
    d, c = section_sizes(K), section_sizes(V)
    on_tri, on_conic = section_sizes(tri), section_sizes(conic)
    contained = section_sizes(plane_pts) == len(plane_pts)
    names = np.array(["external", "tangent", "bisecant"], dtype=object)[np.minimum(on_conic, 2)]
    names[contained] = "contained"
    expected_tri = {"contained": 3, "external": 2, "tangent": 0, "bisecant": 1}
    values = {"contained": {1, 4, 7}, "external": {1, 4}, "tangent": {1, 4, 7}, "bisecant": {4, 7}}
    cases: dict = {k: Counter() for k in expected_tri}
    bad = []
    hyperplanes = enumerate_points(5, 3)
    for j, case in enumerate(names.tolist()):
        cj = int(c[j])
        ok = (
            cj == d[j] - on_tri[j] + on_conic[j]
            and on_tri[j] == expected_tri[case]
            and cj in values[case]
        )
        cases[case][cj] += 1
        if not ok:
            bad.append({"hyperplane": list(hyperplanes[j]), "case": case, "c": cj, "d": int(d[j])})
    return {"cases": {k: dict(sorted(v.items())) for k, v in cases.items()}, "violations": bad}
