"""Command line front end.

stdout carries data (reports, CSV, JSON, documents); stderr carries
diagnostics. Exit codes: 0 ok, 2 parse/usage, 3 validation, 4 verification
mismatch, 5 fit failure, 6 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import comb
from typing import Sequence

from .borsuk import DEFAULT_NODE_BUDGET, exact_borsuk_number, greedy_partition
from .constructions import (
    demo_chamber,
    direction_maximal_polytope,
    hardness_instance,
    hardness_lattice_points,
    hull_facets,
    slope_triangle,
    vertex_avoiding_polytope,
    verify_hardness_instance,
)
from .core import Direction, PointSet, enumerate_lattice_points
from .diameter import compute_diameter
from .dilation import chamber_decomposition, count_diameter_lines, fit_quasipolynomial
from .documents import (
    Document,
    document_for_point_set,
    document_for_polygon,
    load_document,
    point_set_from_document,
    polygon_from_document,
    render_document,
)
from .errors import (
    BudgetError,
    FitError,
    LatticeDiamError,
    ParseError,
    ValidationError,
)
from .oracle import DEFAULT_PAIR_BUDGET, brute_force_diameter
from .svg import render_diameter_svg

__all__ = ["run", "main"]


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("value must be a positive integer")
    return value


def _fmt_coords(p: Sequence[int | Fraction]) -> str:
    return "(" + ",".join(str(c) for c in p) + ")"


def _point_set_from(doc: Document) -> PointSet:
    if doc.kind == "polygon":
        return enumerate_lattice_points(polygon_from_document(doc))
    if doc.kind == "point_set":
        return point_set_from_document(doc)
    raise ValidationError(f"cannot build a point set from a {doc.kind!r} document")


def _cmd_diam2d(args: argparse.Namespace) -> int:
    P = polygon_from_document(load_document(args.input))
    report = compute_diameter(P)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_diameter_svg(P, report))
    print(
        f"ldiam={report.ldiam} directions={len(report.directions)} "
        f"lines={len(report.lines)}"
    )
    for clip in report.representative_segments:
        print(
            f"direction={_fmt_coords(clip.line.dir.vec)} "
            f"segment={_fmt_coords(clip.a)}->{_fmt_coords(clip.b)}"
        )
    if args.verify:
        oracle = brute_force_diameter(enumerate_lattice_points(P), args.budget)
        if oracle.ldiam != report.ldiam or oracle.directions != report.directions:
            print(
                f"verify: MISMATCH oracle ldiam={oracle.ldiam} "
                f"directions={len(oracle.directions)}",
                file=sys.stderr,
            )
            return 4
        print("verify: oracle agrees", file=sys.stderr)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    S = _point_set_from(load_document(args.input))
    report = brute_force_diameter(S, args.budget)
    print(
        f"ldiam={report.ldiam} segments={len(report.segments)} "
        f"directions={len(report.directions)}"
    )
    for u in report.directions:
        print(f"direction={_fmt_coords(u.vec)}")
    return 0


def _cmd_directions(args: argparse.Namespace) -> int:
    S = _point_set_from(load_document(args.input))
    report = brute_force_diameter(S, args.budget)
    print(f"directions={len(report.directions)}")
    for u in report.directions:
        print(_fmt_coords(u.vec))
    return 0


def _quasi_json(qp) -> str:
    payload = {
        "period": qp.period,
        "pieces": [[str(s), str(t)] for s, t in qp.pieces],
        "valid_from": qp.valid_from,
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def _cmd_ld(args: argparse.Namespace) -> int:
    P = polygon_from_document(load_document(args.input))
    counts = [(k, count_diameter_lines(P, k)) for k in range(1, args.k_max + 1)]
    if args.format == "json":
        print(json.dumps({"counts": counts}, sort_keys=True))
    else:
        print("k,count")
        for k, c in counts:
            print(f"{k},{c}")
    if args.fit:
        # Fit sampling is sized from the discovered period, not the table range.
        print(_quasi_json(fit_quasipolynomial(P)))
    return 0


def _cmd_ld_fit(args: argparse.Namespace) -> int:
    P = polygon_from_document(load_document(args.input))
    print(_quasi_json(fit_quasipolynomial(P, args.k_max)))
    return 0


def _cmd_borsuk(args: argparse.Namespace) -> int:
    S = _point_set_from(load_document(args.input))
    bound = 2**S.dim
    if len(S) == 1:
        print(f"parts=1 bound=2^{S.dim}={bound}")
        print(json.dumps({"labels": [0], "parts": 1}, sort_keys=True))
        print("single point: diameter 0, partition already minimal", file=sys.stderr)
        return 0
    partition = greedy_partition(S, args.budget)
    labels = [partition.labels[p] for p in S.points]
    summary = f"parts={len(partition.parts)} bound=2^{S.dim}={bound}"
    if args.exact:
        chi = exact_borsuk_number(S, args.budget, args.node_budget)
        summary += f" chi={chi}"
    print(summary)
    print(json.dumps({"labels": labels, "parts": len(partition.parts)}, sort_keys=True))
    return 0


def _verify_vertex_avoiding(m: int, pts: PointSet, verts, budget: int) -> str | None:
    report = brute_force_diameter(pts, budget)
    want = ((-(m - 1), 0, 0), (m - 1, 0, 0))
    if report.ldiam != 2 * (m - 1):
        return f"ldiam={report.ldiam}, expected {2 * (m - 1)}"
    if m >= 3:
        # vertex pairs only reach gcd 2 < 2(m-1), so the axis segment is alone
        if report.segments != (want,):
            return f"segments={report.segments}, expected the single {want}"
    elif want not in report.segments:
        # m = 2 degenerates: vertex pairs tie at gcd 2, the axis one must still appear
        return f"segments={report.segments} do not include {want}"
    facets = hull_facets(verts)
    for endpoint in want:
        if any(sum(a * b for a, b in zip(n, endpoint)) == c for n, c in facets):
            return f"endpoint {endpoint} lies on the boundary"
    return None


def _cmd_construct(args: argparse.Namespace) -> int:
    def need(*names: str) -> list[int]:
        vals = []
        for n in names:
            v = getattr(args, n)
            if v is None:
                raise ValidationError(f"construct {args.kind} needs --{n}")
            vals.append(v)
        return vals

    failure: str | None = None
    if args.kind == "vertex-avoiding":
        (m,) = need("m")
        pts, verts = vertex_avoiding_polytope(m)
        doc = document_for_point_set(pts, name=f"vertex-avoiding m={m}")
        if args.verify:
            failure = _verify_vertex_avoiding(m, pts, verts, args.budget)
    elif args.kind == "hardness":
        a, b, c = need("a", "b", "c")
        d = args.d if args.d is not None else 3
        inst = hardness_instance(a, b, c, d)
        pts = hardness_lattice_points(inst)
        doc = document_for_point_set(
            pts, name=f"hardness a={a} b={b} c={c} d={d} Z={inst.Z}"
        )
        if args.verify:
            check = verify_hardness_instance(inst, args.budget)
            if not (check.direction_ok and check.equivalence_ok):
                failure = (
                    f"direction_ok={check.direction_ok} "
                    f"equivalence_ok={check.equivalence_ok}"
                )
    elif args.kind == "slope-triangle":
        t, x = need("t", "x")
        tri = slope_triangle(t, x)
        doc = document_for_polygon(tri, name=f"slope-triangle t={t} x={x}")
        if args.verify:
            S = enumerate_lattice_points(tri)
            report = brute_force_diameter(S, args.budget)
            if len(S) != 4 or report.ldiam != 1 or len(report.directions) != 6:
                failure = (
                    f"points={len(S)} ldiam={report.ldiam} "
                    f"directions={len(report.directions)}, expected 4/1/6"
                )
    elif args.kind == "direction-maximal":
        (d,) = need("d")
        pts, _ = direction_maximal_polytope(d)
        doc = document_for_point_set(pts, name=f"direction-maximal d={d}")
        if args.verify:
            report = brute_force_diameter(pts, args.budget)
            want = comb(2**d, 2)
            if (
                len(pts) != 2**d
                or report.ldiam != 1
                or len(report.directions) != want
            ):
                failure = (
                    f"points={len(pts)} ldiam={report.ldiam} "
                    f"directions={len(report.directions)}, "
                    f"expected {2 ** d}/1/{want}"
                )
    else:  # chamber
        verts, u = demo_chamber()
        doc = document_for_polygon(verts, name="chamber q=3 w=2")
        if args.verify:
            block = chamber_decomposition(verts, u)
            want = ((1, 1, 1), (3, 0, 0), (2, 2, 2))
            if block.q != 3 or block.w != 2 or block.per_residue != want:
                failure = (
                    f"q={block.q} w={block.w} per_residue={block.per_residue}"
                )
    if failure is not None:
        print(f"verify: MISMATCH {failure}", file=sys.stderr)
        return 4
    if args.verify:
        print("verify: ok", file=sys.stderr)
    sys.stdout.write(render_document(doc))
    return 0


def _cmd_hardness_verify(args: argparse.Namespace) -> int:
    inst = hardness_instance(args.a, args.b, args.c, args.d)
    check = verify_hardness_instance(inst, args.budget)
    print(
        f"Z={check.z} min_f={check.min_f} ldiam={check.ldiam} "
        f"points={check.n_points} direction_ok={check.direction_ok} "
        f"equivalence_ok={check.equivalence_ok}"
    )
    return 0 if check.direction_ok and check.equivalence_ok else 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticediam",
        description="Exact lattice diameter computations on polygons and point sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, aliases: Sequence[str] = ()) -> argparse.ArgumentParser:
        p = sub.add_parser(name, aliases=list(aliases))
        p.set_defaults(handler=handler)
        p.add_argument(
            "--budget",
            type=_positive_int,
            default=DEFAULT_PAIR_BUDGET,
            help="pair budget for oracle scans",
        )
        return p

    p = add("diam2d", _cmd_diam2d)
    p.add_argument("input")
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--verify", action="store_true")

    p = add("oracle", _cmd_oracle)
    p.add_argument("input")

    p = add("directions", _cmd_directions)
    p.add_argument("input")

    p = add("ld-count", _cmd_ld, aliases=("ld",))
    p.add_argument("input")
    p.add_argument("--k-max", type=_positive_int, required=True)
    p.add_argument("--fit", action="store_true")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = add("ld-fit", _cmd_ld_fit)
    p.add_argument("input")
    p.add_argument("--k-max", type=_positive_int, default=None)

    p = add("borsuk", _cmd_borsuk)
    p.add_argument("input")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--node-budget", type=_positive_int, default=DEFAULT_NODE_BUDGET)

    p = add("construct", _cmd_construct)
    p.add_argument(
        "kind",
        choices=(
            "vertex-avoiding",
            "hardness",
            "slope-triangle",
            "direction-maximal",
            "chamber",
        ),
    )
    p.add_argument("--verify", action="store_true")
    for flag in ("m", "a", "b", "c", "t", "x"):
        p.add_argument(f"--{flag}", type=int, default=None)
    p.add_argument("--d", type=int, default=None)

    p = add("hardness-verify", _cmd_hardness_verify)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--d", type=int, default=3)

    return parser


def _check_thread_env() -> None:
    raw = os.environ.get("LATTICEDIAM_THREADS")
    if raw is None:
        return
    try:
        n = int(raw)
    except ValueError:
        raise ValidationError(f"LATTICEDIAM_THREADS={raw!r} is not an integer") from None
    if n < 1:
        raise ValidationError("LATTICEDIAM_THREADS must be >= 1")


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _check_thread_env()
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except FitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 6
    except LatticeDiamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
