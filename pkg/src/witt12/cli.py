"""Command-line front end.

Every subcommand prints a text table by default or canonical JSON with
``--format json``.  The exit status is 0 exactly when every certificate the
command produced passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from witt12 import certificates as certs
from witt12.design import hyperplane_spectrum
from witt12.projections import (
    certify_affine_plane,
    certify_affinity,
    certify_cap,
    certify_elliptic_quadric,
    classify_all,
    point_projection,
    bisecant_projection,
    triangle_projection,
)
from witt12.projgeom import canonical
from witt12.veronese import VeroneseConfig

VERIFY_TARGETS = list(certs.GROUPS)
CODE_CLAIMS = {
    "golay": "codes.golay",
    "veronese-c": "codes.veronese_c",
    "planes": "codes.planes",
    "identities": "codes.identities",
}


def parse_line(text: str) -> tuple[int, ...]:
    try:
        coords = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three comma-separated digits, got {text!r}")
    if len(coords) != 3 or any(c not in (0, 1, 2) for c in coords) or not any(coords):
        raise argparse.ArgumentTypeError(f"{text!r} is not a line of PG(2,3)")
    return canonical(coords)


def parse_indices(text: str) -> tuple[int, ...]:
    try:
        idx = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated indices, got {text!r}")
    if any(not 0 <= i < 12 for i in idx) or len(set(idx)) != len(idx):
        raise argparse.ArgumentTypeError(f"indices must be distinct and in 0..11, got {text!r}")
    return idx


def wire(point: Sequence[int]) -> str:
    return ",".join(str(int(c)) for c in point)


def emit(args, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(certs.plain(payload), sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def cert_lines(cs: list[certs.Certificate]) -> list[str]:
    width = max(len(c.claim) for c in cs)
    out = [f"{'PASS' if c.passed else 'FAIL'}  {c.claim:<{width}}  {c.statement}" for c in cs]
    n = sum(c.passed for c in cs)
    out.append(f"{n}/{len(cs)} certificates passed")
    return out


def run_claims(args, claims: list[str]) -> int:
    cs = certs.run(claims, certs.Context(VeroneseConfig(args.linf)))
    emit(args, {"certificates": [c.as_dict() for c in cs], "all_pass": all(c.passed for c in cs)}, cert_lines(cs))
    return 0 if all(c.passed for c in cs) else 1


# ---------------------------------------------------------------------------

def cmd_construct(args) -> int:
    ctx = certs.Context(VeroneseConfig(args.linf))
    K = ctx.K
    payload = {
        "line_at_infinity": list(args.linf),
        "points": K.points,
        "triangle": [K.index(x) for x in K.delta],
        "affine": [K.index(x) for x in K.points if x not in K.delta],
    }
    emit(args, payload, [wire(x) for x in K.points])
    return 0


def cmd_spectrum(args) -> int:
    ctx = certs.Context(VeroneseConfig(args.linf))
    cert = certs.spectrum_of_K(ctx)
    hist = hyperplane_spectrum(ctx.K.points).histogram
    lines = [f"{size:>2}  {count}" for size, count in hist.items()] + [f"total {sum(hist.values())}"]
    emit(args, {"histogram": hist, "certificate": cert.as_dict()}, lines)
    return 0 if cert.passed else 1


def cmd_verify(args) -> int:
    return run_claims(args, certs.GROUPS[args.target])


def cmd_aut(args) -> int:
    ctx = certs.Context(VeroneseConfig(args.linf))
    G = ctx.group
    if args.order_only:
        emit(args, {"order": G.shape[0]}, [str(G.shape[0])])
        return 0 if G.shape[0] == 95040 else 1
    chain = []
    H = G
    for i in range(6):
        chain.append(int(H.shape[0]))
        H = H[H[:, i] == i]
    cert = certs.group_order(ctx)
    lines = [f"order {G.shape[0]}", "stabilizer chain " + " > ".join(map(str, chain))]
    lines += cert_lines([cert])
    emit(args, {"order": G.shape[0], "stabilizer_chain": chain, "certificate": cert.as_dict()}, lines)
    return 0 if cert.passed else 1


def cmd_codes(args) -> int:
    return run_claims(args, [CODE_CLAIMS[args.which]])


def cmd_project(args) -> int:
    ctx = certs.Context(VeroneseConfig(args.linf))
    K = ctx.K
    if args.kind == "point":
        idx = args.center or (0,)
        if len(idx) != 1:
            raise SystemExit(usage_error("project point takes one index"))
        images, setup = point_projection(K, idx[0])
        cert = certify_cap(images)
    elif args.kind == "bisecant":
        idx = args.center or (0, 1)
        if len(idx) != 2:
            raise SystemExit(usage_error("project bisecant takes two indices"))
        images, setup = bisecant_projection(K, *idx)
        cert = certify_elliptic_quadric(images)
    else:
        idx = args.center or tuple(K.index(x) for x in K.delta)
        if len(idx) != 3:
            raise SystemExit(usage_error("project triangle takes three indices"))
        images, setup = triangle_projection(K, idx)
        if args.linf == (1, 0, 0) and set(idx) == {K.index(x) for x in K.delta}:
            cert = certify_affinity(VeroneseConfig(args.linf))
        else:
            cert = certify_affine_plane(images)
    payload = {
        "kind": args.kind,
        "center": list(idx),
        "screen": setup.screen.basis,
        "images": images,
        "certificate": {"ok": cert.ok, "data": cert.data},
    }
    lines = [wire(y) for y in images] + [f"{'PASS' if cert.ok else 'FAIL'}  {args.kind} projection"]
    emit(args, payload, lines)
    return 0 if cert.ok else 1


def cmd_classify(args) -> int:
    model, D, result, hist = classify_all(VeroneseConfig(args.linf))
    rows = [
        {"block": list(blk), "type": r.tag, "affine": r.affine, "involutions": len(r.involutions)}
        for blk, r in zip(D.blocks, result)
    ]
    ok = [hist[t] for t in hist] == [12, 54, 12, 54] and all(r.rule_ok for r in result)
    lines = [f"{','.join(map(str, r['block'])):<16} {r['type']}" for r in rows]
    lines += [f"{t:<14} {n}" for t, n in hist.items()]
    emit(args, {"blocks": rows, "histogram": hist, "ok": ok}, lines)
    return 0 if ok else 1


def cmd_report(args) -> int:
    ctx = certs.Context(VeroneseConfig(args.linf))
    cs = certs.run(certs.GROUPS["all"], ctx)
    lines = [f"K ({len(ctx.K.points)} points, line at infinity {wire(args.linf)}):"]
    lines += ["  " + wire(x) for x in ctx.K.points]
    lines += [f"blocks {ctx.design.b}, automorphisms {ctx.group.shape[0]}", ""]
    lines += cert_lines(cs)
    payload = {
        "points": ctx.K.points,
        "blocks": ctx.design.blocks,
        "automorphism_order": ctx.group.shape[0],
        "certificates": [c.as_dict() for c in cs],
        "all_pass": all(c.passed for c in cs),
    }
    emit(args, payload, lines)
    return 0 if all(c.passed for c in cs) else 1


# ---------------------------------------------------------------------------

_parser: argparse.ArgumentParser | None = None


def usage_error(message: str) -> int:
    assert _parser is not None
    _parser.print_usage(sys.stderr)
    sys.stderr.write(f"error: {message}\n")
    return 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument(
        "--linf", type=parse_line, default=(1, 0, 0), metavar="A,B,C",
        help="line at infinity a*x0 + b*x1 + c*x2 = 0 (default 1,0,0)",
    )

    parser = argparse.ArgumentParser(prog="witt12", description="Certificates for the 12-point set K in PG(5,3).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="coordinates of K")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("spectrum", parents=[common], help="hyperplane section sizes of K")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", parents=[common], help="run a group of certificates")
    p.add_argument("target", choices=VERIFY_TARGETS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("aut", parents=[common], help="automorphism group of the block design")
    p.add_argument("--order-only", action="store_true")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("codes", parents=[common], help="code certificates")
    p.add_argument("which", choices=list(CODE_CLAIMS))
    p.set_defaults(func=cmd_codes)

    p = sub.add_parser("project", parents=[common], help="project K from points of K")
    p.add_argument("kind", choices=("point", "bisecant", "triangle"))
    p.add_argument("--center", type=parse_indices, metavar="I[,J[,K]]", help="indices into the point order of construct")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("classify-blocks", parents=[common], help="affine types of the 132 blocks")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("report", parents=[common], help="everything, with a summary")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    global _parser
    _parser = build_parser()
    try:
        args = _parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
