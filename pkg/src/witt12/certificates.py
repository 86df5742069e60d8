"""Machine-checkable certificates for every claim the toolkit verifies.

Each check returns a :class:`Certificate`; failures always carry a
``witness`` entry in their data.  ``REGISTRY`` fixes the claim order used by
``verify all``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from math import comb

import numpy as np

from witt12 import codes, gf
from witt12.automorphisms import (
    BatchLifter,
    automorphism_array,
    compose,
    induced_permutation,
    lift_to_collineation,
    sharply_transitive_on,
    theorem4_certify,
)
from witt12.design import (
    audit_construction,
    audit_reverse,
    block_hyperplanes,
    check_lemma2,
    derived_design,
    extract_blocks,
    hyperplane_of_triangle,
    hyperplane_spectrum,
    triangle_and_point_counts,
    verify_t_design,
)
from witt12.projections import (
    BLOCK_TYPES,
    bisecant_projection,
    cap_solid_blocks,
    certify_affinity,
    certify_cap,
    certify_elliptic_quadric,
    classify_all,
    involution_correspondence,
    point_projection,
    reassemble,
)
from witt12.projgeom import canonical, enumerate_points, lines_of_plane, span
from witt12.veronese import (
    VeroneseConfig,
    apply,
    canonical_matrix,
    construct_K,
    equivalence_to_veronese,
    find_setwise_projectivity,
    maps_setwise,
    reverse_construct,
    veronese_point,
    veronese_surface,
)

DELTA_INFINITY = [(0, 0, 0, 1, 0, 1), (0, 0, 0, 2, 1, 1), (0, 0, 0, 2, 2, 1)]
SEED = 20001


@dataclass
class Certificate:
    claim: str
    status: str
    data: dict
    statement: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return {"claim": self.claim, "status": self.status, "statement": self.statement, "data": plain(self.data)}


def plain(obj):
    """Convert numpy scalars/arrays and tuples into JSON-ready values."""
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(x) for x in obj]
    if isinstance(obj, np.ndarray):
        return plain(obj.tolist())
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return obj


def make(claim: str, statement: str, checks: dict, data: dict) -> Certificate:
    failed = [name for name, ok in checks.items() if not ok]
    data = dict(data)
    data["checks"] = {name: bool(ok) for name, ok in checks.items()}
    if failed:
        data.setdefault("witness", {"failed_checks": failed})
    return Certificate(claim, "fail" if failed else "pass", data, statement)


class Context:
    """Shared, lazily computed objects for one choice of line at infinity."""

    def __init__(self, cfg: VeroneseConfig | None = None):
        self.cfg = cfg or VeroneseConfig()

    @cached_property
    def K(self):
        return construct_K(self.cfg)

    @cached_property
    def design(self):
        return extract_blocks(self.K)

    @cached_property
    def group(self) -> np.ndarray:
        return automorphism_array(self.design)

    @cached_property
    def lifts(self):
        return BatchLifter(self.K).lift(self.group)


# ---------------------------------------------------------------------------

def construction(ctx: Context) -> Certificate:
    K = ctx.K
    eq3 = sorted(canonical(x) for x in DELTA_INFINITY)
    affine_images = sorted(veronese_point(x) for x in ctx.cfg.affine_points())
    checks = {"twelve_points": len(K.points) == 12}
    if ctx.cfg.infinity_line == (1, 0, 0):
        checks["triangle_coordinates"] = sorted(K.delta) == eq3
    checks["contains_triangle"] = set(K.delta) <= set(K.points)
    checks["nine_affine_images"] = sorted(set(K.points) - set(K.delta)) == affine_images
    return make(
        "construction.K",
        "K is the Veronese surface with the conic at infinity replaced by its diagonal triangle",
        checks,
        {"points": K.points, "triangle": K.delta, "conic_at_infinity": K.gamma},
    )


def spectrum_of_K(ctx: Context) -> Certificate:
    rep = hyperplane_spectrum(ctx.K.points)
    checks = {
        "support_0_3_6": rep.support <= {0, 3, 6},
        "histogram": rep.histogram == {0: 12, 3: 220, 6: 132},
        "total_364": rep.total == 364,
    }
    return make("theorem1.spectrum", "every hyperplane meets K in 0, 3 or 6 points", checks,
                {"histogram": rep.histogram})


def section_case_audit(ctx: Context) -> Certificate:
    audit = audit_construction(ctx.cfg)
    cases = {c: {f"{k}:{d}": n for (k, d), n in sorted(v.items())} for c, v in audit["cases"].items()}
    data = {"cases": cases, "empty_sections_from_point_at_infinity": audit["empty_sections_from_point_at_infinity"]}
    if audit["violations"]:
        data["witness"] = audit["violations"][:5]
    return make("theorem1.cases", "section sizes of K agree with the preimage-quadric case analysis",
                {"no_violations": not audit["violations"]}, data)


def characterization_of_K(ctx: Context) -> Certificate:
    rep = check_lemma2(ctx.K.points)
    counts = triangle_and_point_counts(ctx.K.points)
    tri_ok = counts["triangles"] == {(13, ((3, 1), (6, 12))): 220}
    pt_ok = counts["points"] == {(121, ((3, 55), (6, 66))): 12}
    return make(
        "lemma2.K",
        "K has independent 5-subsets, no 4- or 5-point sections, and the stated hyperplane counts",
        {
            "five_subsets_independent": rep.five_independent,
            "big_sections_have_six": rep.big_sections_are_six,
            "at_least_seven_points": rep.at_least_seven,
            "spectrum_and_size": rep.lhs,
            "through_triangle_13_eq_1_plus_12": tri_ok,
            "through_point_121_eq_66_plus_55": pt_ok,
        },
        {"through_triangle": {"hyperplanes": 13, "three_sections": 1, "six_sections": 12},
         "through_point": {"hyperplanes": 121, "three_sections": 55, "six_sections": 66}},
    )


def random_point_sets(n_sets: int = 20, seed: int = SEED, K=None) -> list[list]:
    """Uniform random 12-sets, alternating with copies of K with one to three points swapped out."""
    rng = random.Random(seed)
    pts = enumerate_points(5, 3)
    K = list(K if K is not None else construct_K(VeroneseConfig()).points)
    outside = [x for x in pts if x not in set(K)]
    out = []
    for n in range(n_sets):
        if n % 2 == 0:
            out.append(sorted(rng.sample(pts, 12)))
        else:
            swap = 1 + (n // 2) % 3
            keep = rng.sample(K, 12 - swap)
            out.append(sorted(keep + rng.sample(outside, swap)))
    return out


def characterization_random(ctx: Context) -> Certificate:
    rows = []
    for S in random_point_sets(K=ctx.K.points):
        rep = check_lemma2(S)
        rows.append({"lhs": rep.lhs, "rhs": rep.rhs, "consistent": rep.consistent})
    bad = [r for r in rows if not r["consistent"]]
    data = {"sets": len(rows), "failing_some_condition": sum(1 for r in rows if not r["rhs"])}
    if bad:
        data["witness"] = bad
    return make("lemma2.random", "the two characterizations agree on random 12-point sets",
                {"never_violated": not bad, "all_fail_some_condition": data["failing_some_condition"] == len(rows)},
                data)


def design_w12(ctx: Context) -> Certificate:
    D = ctx.design
    cert = verify_t_design(D, 5, 6, 1)
    hyperplanes = block_hyperplanes(ctx.K.points)
    return make(
        "design.w12",
        "the six-point hyperplane sections of K form a 5-(12,6,1) design",
        {"steiner_5_6_12": cert.ok, "b_132": D.b == 132, "one_hyperplane_per_block": len(hyperplanes) == 132},
        {"b": D.b, "r": cert.r, "five_subsets": comb(12, 5), "witness_if_any": cert.witness},
    )


def triangle_hyperplanes(ctx: Context) -> Certificate:
    hs = [hyperplane_of_triangle(ctx.K.points, tri) for tri in itertools.combinations(ctx.K.points, 3)]
    return make("lemma2.triangle_hyperplanes", "each triangle of K is cut out by a unique hyperplane",
                {"220_distinct": len(set(hs)) == 220}, {"triangles": len(hs)})


def swapped_spectra(ctx: Context) -> Certificate:
    bad = []
    for tri in itertools.combinations(ctx.K.points, 3):
        V = reverse_construct(ctx.K.points, tri)
        rep = hyperplane_spectrum(V)
        audit = audit_reverse(ctx.K.points, tri)
        if len(V) != 13 or not rep.support <= {1, 4, 7} or 7 not in rep.support or audit["violations"]:
            bad.append({"triangle": tri, "histogram": rep.histogram})
    data = {"triangles": comb(12, 3)}
    if bad:
        data["witness"] = bad[:3]
    return make("theorem3.spectra",
                "swapping any triangle of K for its associated conic gives sections of size 1, 4 or 7",
                {"all_triangles": not bad}, data)


def swap_sample(k: int = 5):
    tris = list(itertools.combinations(range(12), 3))
    step = len(tris) // k
    return [tris[i * step] for i in range(k)]


def swapped_projectivity(ctx: Context) -> Certificate:
    target = veronese_surface()
    found = []
    ok = True
    samples = [tuple(ctx.K.index(x) for x in ctx.K.delta)] + swap_sample()
    for tri in samples:
        V = reverse_construct(ctx.K.points, [ctx.K.points[i] for i in tri])
        M = equivalence_to_veronese(V)
        good = maps_setwise(M, V, target)
        ok &= good
        found.append({"triangle": tri, "matrix": M, "verified": good})
    return make("theorem3.projectivity", "the swapped 13-sets are projectively equivalent to the Veronese surface",
                {"all_verified": ok, "at_least_5": len(found) >= 5}, {"samples": found})


def group_order(ctx: Context) -> Certificate:
    G = ctx.group
    ident = tuple(range(12))
    stab = int((G[:, 0] == 0).sum())
    return make(
        "theorem4.group",
        "the block automorphism group has order 95040 and is sharply 5-transitive",
        {
            "order_95040": G.shape[0] == 95040,
            "identity_present": any(tuple(r) == ident for r in G[:1].tolist()),
            "sharply_5_transitive": sharply_transitive_on(G, (0, 1, 2, 3, 4)),
            "point_stabilizer_7920": stab == 7920,
        },
        {"order": G.shape[0], "point_stabilizer": stab},
    )


def group_lifts(ctx: Context) -> Certificate:
    G = ctx.group
    M, ok = ctx.lifts
    distinct = len(np.unique(M.reshape(len(M), -1), axis=0))
    rng = random.Random(SEED)
    K = ctx.K
    # homomorphism and closure spot checks
    where = {tuple(r): i for i, r in enumerate(G.tolist())}
    hom_ok = closure_ok = True
    for _ in range(50):
        a, b = rng.randrange(len(G)), rng.randrange(len(G))
        ab = compose(G[a], G[b])
        closure_ok &= ab in where
        prod = canonical_matrix(gf.matmul(M[a], M[b], 3))
        hom_ok &= bool(np.array_equal(prod, M[where[ab]])) if ab in where else False
    # independent single-element solve on a sample
    agree = all(
        np.array_equal(lift_to_collineation(K, G[i]), M[i]) for i in range(0, len(G), len(G) // 20)
    )
    hyper = block_hyperplanes(K.points)
    hset = set(hyper.values())
    sample = range(0, len(G), len(G) // 50)
    permutes_blocks = all(
        {canonical(gf.matmul(gf.inverse(M[i], 3).T, h, 3)) for h in hset} == hset for i in sample
    )
    induced = all(induced_permutation(K, M[i]) == tuple(G[i]) for i in sample)
    return make(
        "theorem4.lifts",
        "every automorphism lifts to a unique collineation of PG(5,3) stabilizing K",
        {
            "all_lift": bool(ok.all()),
            "pairwise_distinct": distinct == len(G),
            "homomorphism_50": hom_ok,
            "closure_50": closure_ok,
            "agrees_with_direct_solve": agree,
            "block_hyperplanes_permuted": permutes_blocks,
            "induces_permutation": induced,
        },
        {"lifted": int(ok.sum()), "distinct": distinct},
    )


def random_collineation(rng: random.Random) -> np.ndarray:
    while True:
        A = np.array([[rng.randrange(3) for _ in range(6)] for _ in range(6)], dtype=np.int64)
        if gf.rank(A, 3) == 6:
            return A


def unique_extension(ctx: Context) -> Certificate:
    K = ctx.K
    rng = random.Random(SEED)
    P5 = list(K.points[:5])
    runs = []
    # K' = K, P' = P: only the identity
    c0 = theorem4_certify(K.points, K.points, P5, P5)
    runs.append({"case": "identity", "unique": c0.unique,
                 "matches": bool(np.array_equal(c0.matrix, np.eye(6, dtype=np.int64)))})
    # K' = mu(K)
    mu = random_collineation(rng)
    K2 = [apply(mu, x) for x in K.points]
    c1 = theorem4_certify(K.points, K2, P5, [apply(mu, x) for x in P5])
    runs.append({"case": "random_collineation", "unique": c1.unique,
                 "matches": bool(np.array_equal(c1.matrix, canonical_matrix(mu)))})
    # K' from another line at infinity, arbitrary 5-tuple
    K3 = construct_K(VeroneseConfig((0, 1, 0))).points
    Q5 = [K3[i] for i in (7, 2, 11, 0, 5)]
    c2 = theorem4_certify(K.points, K3, P5, Q5)
    ok2 = sorted(apply(c2.matrix, x) for x in K.points) == sorted(K3) and [apply(c2.matrix, x) for x in P5] == Q5
    runs.append({"case": "other_line_at_infinity", "unique": c2.unique, "matches": ok2})
    checks = {r["case"]: r["unique"] and r["matches"] for r in runs}
    return make("theorem4.unique",
                "five points of K and five of K' determine exactly one collineation K -> K'",
                checks, {"runs": runs})


def codes_hyperplane(ctx: Context) -> Certificate:
    H = codes.hyperplane_code()
    chi_K = codes.hyperplane_dots(ctx.K.points)
    chi_V = codes.hyperplane_dots(veronese_surface())
    return make(
        "codes.hyperplane",
        "hyperplanes of PG(5,3) span a 22-dimensional ternary code of length 364",
        {
            "dimension_22": H.dimension == 22,
            "chi_K_in_dual": bool((chi_K == 0).all()),
            "chi_veronese_dots_1": bool((chi_V == 1).all()),
            "weight_K_12": codes.hamming_weight(codes.characteristic_vector(ctx.K.points, enumerate_points(5, 3))) == 12,
            "weight_veronese_13": codes.hamming_weight(codes.characteristic_vector(veronese_surface(), enumerate_points(5, 3))) == 13,
        },
        {"length": H.length, "dimension": H.dimension, "minimum_distance": "121 (cited, not verified)"},
    )


def codes_golay(ctx: Context) -> Certificate:
    G = codes.golay_from_K(ctx.K.points)
    wd = G.weight_distribution()
    mw = codes.macwilliams(wd, 12, 3)
    rng = random.Random(SEED)
    A = random_collineation(rng)
    alt = codes.LinearCode.span(gf.matmul(A, np.array(ctx.K.points).T, 3), 3)
    return make(
        "codes.golay",
        "evaluating linear functionals on K gives the self-dual [12,6,6] extended ternary Golay code",
        {
            "length_12": G.length == 12,
            "dimension_6": G.dimension == 6,
            "minimum_weight_6": G.minimum_weight() == 6,
            "self_dual": G == G.dual(),
            "weight_enumerator": wd == {0: 1, 6: 264, 9: 440, 12: 24},
            "macwilliams_invariant": {k: int(v) for k, v in mw.items()} == wd and all(v.denominator == 1 for v in mw.values()),
            "other_dual_basis_same_code": alt == G,
        },
        {"weight_distribution": wd, "generator_rref": G.generators},
    )


def codes_veronese_c(ctx: Context) -> Certificate:
    C = codes.code_C_from_veronese()
    patterns = codes.quadruple_patterns()
    return make(
        "codes.veronese_c",
        "the Veronese vectors give a self-orthogonal [13,6,6] code equal to C(3)-perp",
        {
            "length_13": C.length == 13,
            "dimension_6": C.dimension == 6,
            "minimum_weight_6": C.minimum_weight() == 6,
            "self_orthogonal": C.issubset(C.dual()),
            "quadratic_forms_same_code": C == codes.code_C_from_quadratic_forms(),
            "equals_C3_dual": codes.identify_C(),
            "line_quadruples": set(patterns) <= codes.ALLOWED_QUADRUPLES,
            "quadruples_sum_zero": all(sum(q) % 3 == 0 for q in codes.ALLOWED_QUADRUPLES),
        },
        {"weight_distribution": C.weight_distribution(), "quadruple_patterns": {",".join(map(str, k)): v for k, v in sorted(patterns.items())}},
    )


def codes_planes(ctx: Context) -> Certificate:
    checks, data = {}, {}
    for p in (2, 3, 5):
        C = codes.line_code(p)
        Cd = C.dual()
        checks[f"p{p}_dimension"] = C.dimension == (p * p + p + 2) // 2
        checks[f"p{p}_dual_inside"] = Cd.issubset(C)
        checks[f"p{p}_codimension_1"] = C.dimension - Cd.dimension == 1
        checks[f"p{p}_E_eq_dual"] = codes.diff_code(p) == Cd
        checks[f"p{p}_Cprime_eq_dual"] = codes.complement_code(p) == Cd
        checks[f"p{p}_dims_add"] = C.dimension + Cd.dimension == C.length
        data[f"p{p}"] = {"length": C.length, "dim_C": C.dimension, "dim_dual": Cd.dimension}
    return make("codes.planes", "E(p) = C(p)-perp = C'(p), of codimension 1 in C(p), for p = 2, 3, 5",
                checks, data)


def codes_identities(ctx: Context) -> Certificate:
    lines = enumerate_points(2, 3)
    chi = [codes.chi_identity_check(VeroneseConfig(l)) for l in lines]
    w7 = [codes.weight7_word_check(VeroneseConfig(l)) for l in lines]
    K = list(ctx.K.points)
    perturbed = K[:-1] + [next(x for x in enumerate_points(5, 3) if x not in K)]
    return make(
        "codes.identities",
        "chi(K) = chi(Veronese) - chi(conic) + chi(triangle), and the weight-7 difference has dot 2 with every hyperplane",
        {
            "chi_identity_13_lines": all(chi),
            "weight7_13_lines": all(w7),
            "perturbed_K_rejected": not codes.chi_identity_check(ctx.cfg, perturbed),
        },
        {"lines": len(lines)},
    )


def projections_points(ctx: Context) -> Certificate:
    results, ok = [], True
    for i in range(12):
        im, _ = point_projection(ctx.K, i)
        cap = certify_cap(im)
        good = cap.ok and len(set(im)) == 11 and span(im).dim == 4
        ok &= good
        results.append({"center": i, "cap": good})
    im, _ = point_projection(ctx.K, 0)
    derived = derived_design(ctx.design, 0)
    carries = sorted(cap_solid_blocks(im)) == list(derived.blocks)
    return make("projections.points", "projecting K from any of its points gives an 11-cap in a hyperplane",
                {"twelve_caps": ok, "carries_derived_design": carries}, {"centers": results})


def projections_bisecants(ctx: Context) -> Certificate:
    bad = []
    for i, j in itertools.combinations(range(12), 2):
        im, _ = bisecant_projection(ctx.K, i, j)
        cert = certify_elliptic_quadric(im)
        if not (cert.ok and len(set(im)) == 10):
            bad.append({"bisecant": [i, j], "certificate": cert.data})
    data = {"bisecants": comb(12, 2), "elliptic": comb(12, 2) - len(bad)}
    if bad:
        data["witness"] = bad[:3]
    return make("projections.bisecants", "projecting K from any bisecant gives a 10-point elliptic quadric",
                {"all_66_elliptic": not bad}, data)


def projections_affinity(ctx: Context) -> Certificate:
    cert = certify_affinity(VeroneseConfig())
    return make("projections.affinity",
                "projecting from the triangle onto x3=x4=x5=0 is the identity on the nine affine points",
                {"identity_affinity": cert.ok}, cert.data)


def derived_chain(ctx: Context) -> Certificate:
    D1 = derived_design(ctx.design, 0)
    D2 = derived_design(D1, 0)
    D3 = derived_design(D2, 0)
    c1, c2, c3 = verify_t_design(D1, 4, 5, 1), verify_t_design(D2, 3, 4, 1), verify_t_design(D3, 2, 3, 1)
    # the last design, read through the affine model, is AG(2,3)
    lines = [
        sorted(veronese_point(x) for x in line if x in ctx.cfg.affine_points())
        for line in lines_of_plane(3) if set(line) != set(ctx.cfg.line_at_infinity())
    ]
    # points 0, 1, 2 of K are the triangle, so D3 lives on the affine images
    ag_ok = sorted(sorted(D3.labels[i] for i in b) for b in D3.blocks) == sorted(lines)
    return make(
        "derived.chain",
        "successive derivations give 4-(11,5,1), 3-(10,4,1) and the affine plane 2-(9,3,1)",
        {"4_11_5_1": c1.ok and D1.b == 66, "3_10_4_1": c2.ok and D2.b == 30, "2_9_3_1": c3.ok and D3.b == 12,
         "affine_plane_lines": ag_ok},
        {"blocks": [D1.b, D2.b, D3.b]},
    )


def lueneburg(ctx: Context) -> Certificate:
    model, D, result, hist = classify_all(ctx.cfg)
    exclusive = all(r.tag in BLOCK_TYPES for r in result)
    rules = all(r.rule_ok for r in result)
    back = all(reassemble(model, r) == [ctx.K.points[i] for i in blk] for r, blk in zip(result, D.blocks))
    sizes = {(r.tag, len(r.affine), len(r.involutions)) for r in result}
    data = {"histogram": hist}
    if not rules:
        data["witness"] = [r.affine for r in result if not r.rule_ok][:3]
    return make(
        "lueneburg.blocks",
        "every block is an affine line, ellipse, parallel pair or cross with the matching involutions",
        {
            "histogram_12_54_12_54": [hist[t] for t in BLOCK_TYPES] == [12, 54, 12, 54],
            "each_block_one_type": exclusive,
            "involution_rules": rules,
            "reassembles": back,
            "size_audit": sizes == {("line+3inv", 3, 3), ("ellipse+2inv", 4, 2), ("parallel-pair", 6, 0), ("cross+1inv", 5, 1)},
        },
        data,
    )


def lueneburg_involutions(ctx: Context) -> Certificate:
    corr = involution_correspondence(ctx.cfg)
    return make(
        "lueneburg.involutions",
        "the three elliptic involutions at infinity correspond to the triangle via homology centres",
        {"bijective": sorted(corr.values()) == sorted(ctx.K.delta) and len(set(corr.values())) == 3},
        {"centers": [[list(map(list, s)), c] for s, c in sorted(corr.items())]},
    )


def all_lines_equivalent(ctx: Context) -> Certificate:
    base = ctx.K.points
    results = []
    for l in enumerate_points(2, 3):
        K = construct_K(VeroneseConfig(l))
        D = extract_blocks(K)
        M = find_setwise_projectivity(K.points, base)
        results.append({"line": l, "design": verify_t_design(D, 5, 6, 1).ok, "equivalent": M is not None})
    return make("construction.all_lines",
                "every choice of line at infinity gives a projectively equivalent K carrying a 5-(12,6,1) design",
                {"all_equivalent": all(r["equivalent"] for r in results), "all_designs": all(r["design"] for r in results)},
                {"lines": results})


REGISTRY = {
    "construction.K": construction,
    "construction.all_lines": all_lines_equivalent,
    "theorem1.spectrum": spectrum_of_K,
    "theorem1.cases": section_case_audit,
    "lemma2.K": characterization_of_K,
    "lemma2.random": characterization_random,
    "lemma2.triangle_hyperplanes": triangle_hyperplanes,
    "design.w12": design_w12,
    "derived.chain": derived_chain,
    "theorem3.spectra": swapped_spectra,
    "theorem3.projectivity": swapped_projectivity,
    "theorem4.group": group_order,
    "theorem4.lifts": group_lifts,
    "theorem4.unique": unique_extension,
    "codes.hyperplane": codes_hyperplane,
    "codes.golay": codes_golay,
    "codes.veronese_c": codes_veronese_c,
    "codes.planes": codes_planes,
    "codes.identities": codes_identities,
    "projections.points": projections_points,
    "projections.bisecants": projections_bisecants,
    "projections.affinity": projections_affinity,
    "lueneburg.blocks": lueneburg,
    "lueneburg.involutions": lueneburg_involutions,
}

GROUPS = {
    "construction": ["construction.K", "construction.all_lines"],
    "theorem1": ["theorem1.spectrum", "theorem1.cases"],
    "design": ["design.w12", "derived.chain"],
    "lemma2": ["lemma2.K", "lemma2.random", "lemma2.triangle_hyperplanes"],
    "theorem3": ["theorem3.spectra", "theorem3.projectivity"],
    "theorem4": ["theorem4.group", "theorem4.lifts", "theorem4.unique"],
    "codes": ["codes.hyperplane", "codes.golay", "codes.veronese_c", "codes.planes", "codes.identities"],
    "projections": ["projections.points", "projections.bisecants", "projections.affinity"],
    "lueneburg": ["lueneburg.blocks", "lueneburg.involutions"],
    "all": list(REGISTRY),
}


def run(claims, ctx: Context | None = None) -> list[Certificate]:
    ctx = ctx or Context()
    return [REGISTRY[c](ctx) for c in claims]
