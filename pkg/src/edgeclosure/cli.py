"""Command-line interface.

Subcommands: scan, check, closure, witness, cover, verify.  Every
subcommand accepts --json for machine-readable output; the default is
aligned text.  Exit codes: 0 all checks passed, 1 mathematical
violation found, 2 input error, 3 resource cap exceeded.

Resource caps come from the environment: EDGECLOSURE_BOX_CAP bounds the
lattice box volume per closure computation (default 10_000_000 points)
and EDGECLOSURE_TIME_CAP_S bounds wall-clock time per graph (default
30 seconds).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from .closure import (
    DEFAULT_BOX_CAP,
    closure_generators,
    is_normal_up_to,
    power_identity_certificate,
    scaling_membership,
    verify_power_identity,
)
from .covers import PathInstance, extract_cover
from .errors import (
    EdgeClosureError,
    GraphFormatError,
    InfeasibleInstanceError,
    ResourceCapError,
)
from .graphs import (
    PatternKind,
    WeightedGraph,
    edge_ideal,
    forbidden_pattern_scan,
    graph_from_jsonable,
    graph_to_jsonable,
    pattern_witness,
)
from .ideals import member
from .packing import fractional_packing
from .verify import run_equivalence_check, run_normality_check

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_CAP = 3

DEFAULT_TIME_CAP_S = 30.0

_PATTERN_NAMES = {
    "p3": PatternKind.HEAVY_P3,
    "2k2": PatternKind.HEAVY_2K2,
    "triangle": PatternKind.HEAVY_TRIANGLE,
}


def _box_cap() -> int:
    return int(os.environ.get("EDGECLOSURE_BOX_CAP", DEFAULT_BOX_CAP))


def _time_cap() -> float:
    return float(os.environ.get("EDGECLOSURE_TIME_CAP_S", DEFAULT_TIME_CAP_S))


def _deadline() -> float:
    return time.monotonic() + _time_cap()


def _jsonable(obj):
    """Recursively convert package values to JSON-safe structures."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, PatternKind):
        return obj.value
    if isinstance(obj, WeightedGraph):
        return graph_to_jsonable(obj)
    if is_dataclass(obj) and not isinstance(obj, type):
        return {k: _jsonable(v) for k, v in asdict(obj).items()}
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit_json(payload) -> None:
    print(json.dumps(_jsonable(payload), indent=2, sort_keys=True))


def _load_graph(path: str) -> WeightedGraph:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    return graph_from_jsonable(data)


def _cmd_scan(args) -> int:
    g = _load_graph(args.graph)
    witness = forbidden_pattern_scan(g)
    if args.json:
        _emit_json({"graph": g, "pattern": witness})
    elif witness is None:
        print("no forbidden pattern: edge ideal is integrally closed")
    else:
        print(f"pattern: {witness.kind.value}")
        print(f"vertices: {', '.join(map(str, witness.vertices))}")
        print(f"weights: {', '.join(map(str, witness.weights))}")
    return EXIT_OK if witness is None else EXIT_VIOLATION


def _cmd_check(args) -> int:
    g = _load_graph(args.graph)
    if not g.edges:
        raise GraphFormatError("graph has no edges: the zero ideal has no powers to probe")
    reports = is_normal_up_to(
        edge_ideal(g), args.kmax, box_cap=_box_cap(), deadline=_deadline()
    )
    all_closed = all(r.closed for r in reports)
    if args.json:
        _emit_json(
            {
                "graph": g,
                "kmax": args.kmax,
                "reports": [
                    {"k": r.k, "closed": r.closed, "witness": r.witness}
                    for r in reports
                ],
                "normal_up_to_kmax": all_closed,
            }
        )
    else:
        print(f"{'k':>3}  {'closed':<6}  witness")
        for r in reports:
            wtxt = "-" if r.witness is None else str(r.witness)
            print(f"{r.k:>3}  {str(r.closed).lower():<6}  {wtxt}")
        verdict = "all probed powers closed" if all_closed else "not integrally closed"
        print(f"result: {verdict} (k <= {reports[-1].k})")
    return EXIT_OK if all_closed else EXIT_VIOLATION


def _cmd_closure(args) -> int:
    g = _load_graph(args.graph)
    if not g.edges:
        raise GraphFormatError("graph has no edges: the zero ideal has no closure generators")
    gens = closure_generators(
        edge_ideal(g), args.k, box_cap=_box_cap(), deadline=_deadline()
    )
    if args.json:
        _emit_json({"graph": g, "k": args.k, "generators": gens})
    else:
        print(f"minimal generators of the closure of I^{args.k}:")
        for v in gens:
            print("  (" + ", ".join(map(str, v)) + ")")
    return EXIT_OK


def _cmd_witness(args) -> int:
    kind = _PATTERN_NAMES[args.pattern]
    try:
        weights = tuple(int(w) for w in args.weights.split(","))
    except ValueError as exc:
        raise GraphFormatError(f"invalid weights {args.weights!r}") from exc
    graph, w = pattern_witness(kind, weights)
    ideal = edge_ideal(graph)
    in_ideal = member(ideal, w)
    lp = fractional_packing(ideal, w)
    scaling = scaling_membership(ideal, w, 1)
    cert = power_identity_certificate(ideal, w, 1)
    cert_ok = verify_power_identity(ideal, w, 1, cert)
    transcript_ok = (not in_ideal) and lp.value >= 1 and scaling.member and cert_ok
    if args.json:
        _emit_json(
            {
                "pattern": kind,
                "graph": graph,
                "witness": w,
                "transcript": {
                    "member_of_ideal": in_ideal,
                    "lp_value": lp.value,
                    "scaling": scaling,
                    "certificate": cert,
                    "certificate_verified": cert_ok,
                    "passed": transcript_ok,
                },
            }
        )
    else:
        print(f"pattern graph: {json.dumps(graph_to_jsonable(graph))}")
        print(f"witness exponent vector: {w}")
        print(f"member of edge ideal: {in_ideal}")
        print(f"fractional packing value: {lp.value}")
        print(f"scaling membership: s = {scaling.s} ({'yes' if scaling.member else 'no'})")
        print(
            f"power identity: scale {cert.scale}, multiplicities {cert.multiplicities}, "
            f"slack {cert.slack}, verified {cert_ok}"
        )
        print(f"transcript: {'PASS' if transcript_ok else 'FAIL'}")
    return EXIT_OK if transcript_ok else EXIT_VIOLATION


def _parse_fraction(value) -> Fraction:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise GraphFormatError(f"edge values must be integers or 'p/q' strings, got {value!r}")


def _cmd_cover(args) -> int:
    try:
        if args.instance == "-":
            data = json.loads(sys.stdin.read())
        else:
            with open(args.instance, "r", encoding="utf-8") as fh:
                data = json.load(fh)
    except OSError as exc:
        raise GraphFormatError(f"cannot read {args.instance}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{args.instance}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "a" not in data or "y" not in data:
        raise GraphFormatError("cover instance needs fields 'a' and 'y'")
    a = data["a"]
    if not isinstance(a, list) or any(not isinstance(v, int) for v in a):
        raise GraphFormatError("'a' must be a list of integers")
    y = [_parse_fraction(v) for v in data["y"]]
    inst = PathInstance(len(a), tuple(a), tuple(y))
    edges = extract_cover(inst)
    if args.json:
        _emit_json(
            {
                "a": inst.a,
                "y": inst.y,
                "target_size": inst.target_size(),
                "edges": edges,
                "size": len(edges),
            }
        )
    else:
        print(f"target size: {inst.target_size()}")
        print(f"cover size:  {len(edges)}")
        print("edges: " + " ".join(f"({u},{v})" for u, v in edges))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.mode == "thm36":
        run = run_equivalence_check(
            args.n_max,
            args.weight_max,
            sample=args.sample,
            seed=args.seed,
            box_cap=_box_cap(),
            time_cap=_time_cap(),
        )
    else:
        if args.kmax is None:
            raise GraphFormatError("--kmax is required for mode normality")
        run = run_normality_check(
            args.n_max,
            args.weight_max,
            args.kmax,
            box_cap=_box_cap(),
            time_cap=_time_cap(),
        )
    if args.json:
        _emit_json(run.to_jsonable())
    else:
        print(f"mode: {run.mode}")
        print(f"graphs checked: {run.graph_count}")
        print(f"violations: {len(run.violations)}")
        for v in run.violations[:20]:
            print(f"  {v}")
        print("result: " + ("PASS" if run.passed else "FAIL"))
    return EXIT_OK if run.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgeclosure",
        description=(
            "Integral closure and normality checks for edge ideals of "
            "edge-weighted graphs."
        ),
        epilog=(
            "Exit codes: 0 ok, 1 violation found, 2 input error, 3 resource cap. "
            f"Caps: EDGECLOSURE_BOX_CAP (default {DEFAULT_BOX_CAP} lattice points), "
            f"EDGECLOSURE_TIME_CAP_S (default {DEFAULT_TIME_CAP_S}s per graph)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("scan", help="scan a graph for the three forbidden heavy patterns")
    p.add_argument("graph", help="graph JSON file, or - for stdin")
    add_json(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("check", help="probe integral closedness of I^k for k = 1..kmax")
    p.add_argument("graph", help="graph JSON file, or - for stdin")
    p.add_argument("--kmax", type=int, required=True, help="largest power to probe")
    add_json(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("closure", help="list minimal generators of the closure of I^k")
    p.add_argument("graph", help="graph JSON file, or - for stdin")
    p.add_argument("-k", type=int, required=True, help="power of the ideal")
    add_json(p)
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("witness", help="emit a pattern's standard witness with a verification transcript")
    p.add_argument("--pattern", choices=sorted(_PATTERN_NAMES), required=True)
    p.add_argument("--weights", required=True, help="comma-separated heavy weights, all >= 2")
    add_json(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("cover", help="extract a dividing edge multiset from a path instance")
    p.add_argument("instance", help="instance JSON file {'a': [...], 'y': [...]}, or - for stdin")
    add_json(p)
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("verify", help="run a desk-scale verification suite")
    p.add_argument("--mode", choices=("thm36", "normality"), required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--weight-max", type=int, required=True)
    p.add_argument("--kmax", type=int, help="largest power (mode normality)")
    p.add_argument("--seed", type=int, help="seed for sampled universes")
    p.add_argument("--sample", type=int, help="sample size instead of exhaustive enumeration")
    add_json(p)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphFormatError, InfeasibleInstanceError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EdgeClosureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
