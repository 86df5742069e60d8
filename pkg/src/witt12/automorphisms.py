"""Automorphisms of Steiner systems S(t, t+1, v) and their lifts to
collineations of PG(5,3).

The search runs breadth-first over all partial maps at once.  Points are
assigned in a fixed source order; a point is *forced* when t already-mapped
points together with it form a block, since the image block through the t
images then has exactly one free point left.  When nothing is forced the
lowest unmapped point branches over every unused target.  Rows that break
injectivity or send a finished block to a non-block are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

import numpy as np

from witt12 import gf
from witt12.design import Design, extract_blocks, hyperplane_spectrum
from witt12.projgeom import Point, canonical
from witt12.veronese import apply, canonical_matrix, find_setwise_projectivity, solve_projectivity

P = 3

Permutation = tuple[int, ...]


def compose(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """(a . b)(i) = a[b[i]]."""
    return tuple(a[x] for x in b)


def invert(a: Sequence[int]) -> Permutation:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


class _Steiner:
    """Lookup tables for an S(t, t+1, v) given as a Design."""

    def __init__(self, D: Design, t: int | None = None):
        sizes = {len(b) for b in D.blocks}
        if len(sizes) != 1:
            raise ValueError("blocks of mixed sizes")
        k = sizes.pop()
        t = k - 1 if t is None else t
        if k != t + 1:
            raise ValueError("the search needs block size t+1")
        if D.v > 20:
            raise ValueError("too many points for bitmask tables")
        self.D, self.t, self.v = D, t, D.v
        self.rest = np.full(1 << D.v, -1, dtype=np.int64)
        self.is_block = np.zeros(1 << D.v, dtype=bool)
        for blk in D.blocks:
            mask = sum(1 << x for x in blk)
            self.is_block[mask] = True
            for x in blk:
                if self.rest[mask ^ (1 << x)] != -1:
                    raise ValueError("a t-subset lies in two blocks")
                self.rest[mask ^ (1 << x)] = x
        covered = int((self.rest != -1).sum())
        if covered != len(list(combinations(range(D.v), t))):
            raise ValueError(f"not a Steiner {t}-design")


def _masks(rows: np.ndarray, cols: Sequence[int]) -> np.ndarray:
    m = np.zeros(rows.shape[0], dtype=np.int64)
    for c in cols:
        m |= np.left_shift(np.int64(1), rows[:, c].astype(np.int64))
    return m


def _search(S: _Steiner, seed: Mapping[int, int]) -> np.ndarray:
    v = S.v
    seed = {int(a): int(b) for a, b in seed.items()}
    if len(set(seed.values())) != len(seed) or not all(
        0 <= a < v and 0 <= b < v for a, b in seed.items()
    ):
        return np.zeros((0, v), dtype=np.int64)
    rows = np.full((1, v), -1, dtype=np.int64)
    for a, b in seed.items():
        rows[0, a] = b
    used = _masks(rows, list(seed))
    det = set(seed)
    blocks = S.D.blocks

    def prune_blocks(rows, used, newly):
        keep = np.ones(rows.shape[0], dtype=bool)
        for blk in blocks:
            if newly in blk and all(x in det for x in blk):
                keep &= S.is_block[_masks(rows, blk)]
        return rows[keep], used[keep]

    for blk in blocks:
        if all(x in det for x in blk):
            keep = S.is_block[_masks(rows, blk)]
            rows, used = rows[keep], used[keep]

    while len(det) < v and rows.shape[0]:
        forced = None
        for blk in blocks:
            inside = [x for x in blk if x in det]
            if len(inside) == S.t:
                forced = (next(x for x in blk if x not in det), inside)
                break
        if forced is not None:
            z, T = forced
            img = S.rest[_masks(rows, T)]
            ok = (img >= 0) & ((used >> np.maximum(img, 0)) & 1 == 0)
            rows, used, img = rows[ok], used[ok], img[ok]
            rows[:, z] = img
            used = used | (np.int64(1) << img)
        else:
            z = min(x for x in range(v) if x not in det)
            bits = (used[:, None] >> np.arange(v)) & 1
            r_idx, targets = np.nonzero(bits == 0)
            rows = rows[r_idx]
            rows[:, z] = targets
            used = used[r_idx] | (np.int64(1) << targets)
        det.add(z)
        rows, used = prune_blocks(rows, used, z)

    if rows.shape[0]:
        order = np.lexsort(rows.T[::-1])
        rows = rows[order]
    return rows


def automorphism_array(D: Design, t: int | None = None) -> np.ndarray:
    """All block-preserving permutations as rows of an int array, lexicographically sorted."""
    return _search(_Steiner(D, t), {})


def block_automorphisms(D: Design, t: int | None = None) -> list[Permutation]:
    return [tuple(int(x) for x in row) for row in automorphism_array(D, t)]


def completions(D: Design, partial: Mapping[int, int], t: int | None = None) -> list[Permutation]:
    """Every block-preserving permutation extending ``partial``."""
    return [tuple(int(x) for x in row) for row in _search(_Steiner(D, t), partial)]


def complete_from_5(D: Design, partial: Mapping[int, int], t: int | None = None) -> Permutation | None:
    """The block-preserving completion of a partial map, or None.

    When several completions exist (smaller groups) the lexicographically
    first one is returned; use :func:`completions` to see them all.
    """
    if len(partial) != 5 or len(set(partial.values())) != 5:
        raise ValueError("partial map must send 5 distinct points to 5 distinct points")
    found = completions(D, partial, t)
    return found[0] if found else None


def is_automorphism(D: Design, perm: Sequence[int]) -> bool:
    masks = D.block_masks()
    return all(sum(1 << perm[x] for x in blk) in masks for blk in D.blocks)


def sharply_transitive_on(perms: np.ndarray, base: Sequence[int]) -> bool:
    """The map g -> (g(base[0]), ..., g(base[-1])) is a bijection onto all
    ordered tuples of distinct points."""
    v = perms.shape[1]
    images = perms[:, list(base)]
    distinct = {tuple(r) for r in images.tolist()}
    n_tuples = 1
    for i in range(len(base)):
        n_tuples *= v - i
    return len(distinct) == perms.shape[0] == n_tuples and all(
        len(set(r)) == len(r) for r in distinct
    )


# ---------------------------------------------------------------------------
# collineations

def lift_to_collineation(K, perm: Sequence[int]) -> np.ndarray:
    """Canonical matrix of the unique collineation sending K[i] to K[perm[i]]."""
    pts = tuple(K)
    M = solve_projectivity(pts, [pts[perm[i]] for i in range(len(pts))])
    if M is None:
        raise ValueError("permutation does not lift to a unique collineation")
    return M


def induced_permutation(K, M) -> Permutation | None:
    pts = tuple(K)
    where = {x: i for i, x in enumerate(pts)}
    out = []
    for x in pts:
        y = apply(M, x)
        if y not in where:
            return None
        out.append(where[y])
    return tuple(out)


class BatchLifter:
    """Vectorized lifting of many permutations of K at once.

    A basis of six points of K is fixed; the other six points have fixed
    coordinates a_j in that basis.  For a permutation with image basis D the
    lift is D diag(y) B^-1, where y is pinned down (up to scalar) by
    requiring diag(a_j) y to be proportional to D^-1 w_{perm(j)}.  Every lift
    is then checked against all twelve points.
    """

    def __init__(self, K):
        self.points = tuple(K)
        W = np.array(self.points, dtype=np.int64)
        self.W = W
        n = len(self.points)
        basis: list[int] = []
        for i in range(n):
            if gf.rank(W[basis + [i]], P) == len(basis) + 1:
                basis.append(i)
            if len(basis) == 6:
                break
        self.basis = basis
        self.extras = [i for i in range(n) if i not in basis]
        self.B = W[basis].T
        self.Binv = gf.inverse(self.B, P)
        self.coords = {j: gf.matmul(self.Binv, W[j], P) for j in self.extras}
        # order the extras so each one overlaps indices already scaled
        known = {0}
        plan = []
        pending = list(self.extras)
        while len(known) < 6:
            for j in pending:
                supp = set(np.flatnonzero(self.coords[j]).tolist())
                anchor = supp & known
                if anchor and supp - known:
                    plan.append((j, min(anchor), sorted(supp - known)))
                    known |= supp
                    pending.remove(j)
                    break
            else:
                raise ValueError("extra points do not connect the basis")
        self.plan = plan
        self.inv = gf.inverse_table(P)

    def lift(self, perms: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Return (canonical matrices (N,6,6), ok mask (N,))."""
        perms = np.asarray(perms, dtype=np.int64)
        N = perms.shape[0]
        W, inv = self.W, self.inv
        D = np.transpose(W[perms[:, self.basis]], (0, 2, 1))
        ok = np.ones(N, dtype=bool)
        y = np.zeros((N, 6), dtype=np.int64)
        y[:, 0] = 1
        for j, anchor, fresh in self.plan:
            b, solvable = gf.solve_batch(D, W[perms[:, j]], P)
            ok &= solvable
            a = self.coords[j]
            # scale so the anchor coordinate matches the known y
            t = (y[:, anchor] * a[anchor] * inv[b[:, anchor]]) % P
            ok &= b[:, anchor] != 0
            for i in fresh:
                y[:, i] = (t * b[:, i] * inv[a[i]]) % P
        ok &= (y != 0).all(axis=1)
        M = np.einsum("nij,nj,jk->nik", D, y, self.Binv) % P
        first = M[:, :, 0]
        lead = first[np.arange(N), np.argmax(first != 0, axis=1)]
        ok &= lead != 0
        M = (M * inv[lead][:, None, None]) % P
        images = np.einsum("nij,kj->nik", M, W) % P
        target = np.transpose(W[perms], (0, 2, 1))
        match = (images == target).all(axis=1) | (images == (2 * target) % P).all(axis=1)
        ok &= match.all(axis=1)
        return M, ok


@dataclass
class ExtensionCertificate:
    matrix: np.ndarray
    permutation: Permutation
    completions: int
    pointwise_stabilizer_trivial: bool
    evidence: dict = field(default_factory=dict)

    @property
    def unique(self) -> bool:
        return self.completions == 1 and self.pointwise_stabilizer_trivial


def _check_k_conditions(points: Sequence[Point], name: str) -> None:
    if len(set(points)) != 12:
        raise ValueError(f"{name} does not have 12 points")
    support = hyperplane_spectrum(points).support
    if not support <= {0, 3, 6}:
        raise ValueError(f"{name} has hyperplane section sizes {sorted(support)}")


def theorem4_certify(K, K2, P5: Sequence[Point], Q5: Sequence[Point]) -> ExtensionCertificate:
    """The unique collineation mapping K onto K2 and P5[i] to Q5[i]."""
    K = tuple(sorted(canonical(x) for x in K))
    K2 = tuple(sorted(canonical(x) for x in K2))
    _check_k_conditions(K, "K")
    _check_k_conditions(K2, "K'")
    P5 = [canonical(x) for x in P5]
    Q5 = [canonical(x) for x in Q5]
    if len(set(P5)) != 5 or not set(P5) <= set(K):
        raise ValueError("P must be 5 distinct points of K")
    if len(set(Q5)) != 5 or not set(Q5) <= set(K2):
        raise ValueError("P' must be 5 distinct points of K'")

    tau = find_setwise_projectivity(K2, K)
    if tau is None:
        raise ValueError("K' is not projectively equivalent to K")
    D = extract_blocks(K)
    partial = {K.index(p): K.index(apply(tau, q)) for p, q in zip(P5, Q5)}
    found = completions(D, partial)
    if not found:
        raise ValueError("no block automorphism extends the 5-point map")
    perm = found[0]
    M = lift_to_collineation(K, perm)
    kappa = canonical_matrix(gf.matmul(gf.inverse(tau, P), M, P))

    ident = solve_projectivity(K, K)
    stabilizer_trivial = ident is not None and np.array_equal(ident, np.eye(6, dtype=np.int64))
    assert sorted(apply(kappa, x) for x in K) == list(K2)
    assert [apply(kappa, p) for p in P5] == Q5
    return ExtensionCertificate(
        matrix=kappa,
        permutation=perm,
        completions=len(found),
        pointwise_stabilizer_trivial=stabilizer_trivial,
        evidence={"transport": tau.tolist(), "lift": M.tolist()},
    )
