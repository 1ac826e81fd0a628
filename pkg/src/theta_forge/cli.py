"""theta-forge command line: construct -> build -> verify -> stats.

Exit codes: 0 pass, 1 fail (witness printed), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import __version__
from .bounds import graph_bound_report
from .construct import (
    ConstructionParams,
    PointSet,
    audited,
    build_norm_set,
    max_maineq_solutions,
    search_max_bounded_secant,
)
from .gf import GF, make_field, prime_power
from .linrep import build_linear_representation, export_graph, read_graph, write_graph
from .oracle import OracleConfig, brute_c4, brute_secant_audit, brute_theta_count
from .projgeom import read_point_set, write_point_set
from .verify import find_c4, girth_report, verify_theta_free

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunManifest:
    subcommand: str
    params: dict[str, Any]
    inputs: list[str] = field(default_factory=list)
    outputs: list[str] = field(default_factory=list)
    version: str = __version__
    wall_time: float = 0.0

    def write(self, out: str | Path) -> None:
        path = Path(str(out) + ".manifest.json")
        path.write_text(json.dumps(self.__dict__, indent=2, sort_keys=True) + "\n")


def _field(q: int, seed: int) -> GF:
    if prime_power(q) is None:
        raise InputError(f"q={q} is not a prime power")
    return make_field(q, seed)


def _load_point_set(path: str) -> PointSet:
    try:
        n, F, points, comments = read_point_set(path)
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    t = None
    for c in comments:
        for tok in c.split():
            if tok.startswith("t="):
                t = int(tok[2:])
    return PointSet(n, F, tuple(points), t=t)


def _load_graph(path: str):
    try:
        return read_graph(path)
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _emit(text: str, out: str | None) -> None:
    sys.stdout.write(text)
    if out:
        Path(out).write_text(text)


# ---------------------------------------------------------------------------

def cmd_construct(args) -> int:
    F = _field(args.q, args.seed)
    try:
        params = ConstructionParams(F, args.t)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    S = audited(build_norm_set(params, args.seed))
    if args.oracle:
        brute = brute_secant_audit(S, OracleConfig(max_ambient_points=args.oracle_cap))
        print(f"oracle max_secant: {brute} ({'agree' if brute == S.max_secant else 'DISAGREE'})")
        if brute != S.max_secant:
            return EXIT_ERROR
    E = S.ext
    comments = [
        f"norm-set t={args.t} seed={args.seed} ext_modulus={','.join(map(str, E.modulus))}",
        f"max_secant={S.max_secant}",
    ]
    if args.out:
        write_point_set(args.out, S.n, F, S.points, comments)
    print(f"points: {len(S)}")
    print(f"max_secant: {S.max_secant}")
    print(f"modulus: {','.join(map(str, F.params.modulus))}")
    print(f"ext_modulus: {','.join(map(str, E.modulus))}")
    if args.maineq:
        # observed maximum only; the bound t - 2 is not assumed tight
        print(f"maineq_max: {max_maineq_solutions(E)} (bound {args.t - 2})")
    args.manifest.params.update(modulus=list(F.params.modulus), ext_modulus=list(E.modulus),
                                p=F.p, e=F.e)
    return EXIT_PASS if S.max_secant <= args.t else EXIT_FAIL


def cmd_audit(args) -> int:
    S = audited(_load_point_set(args.pointset), self_check_below=0)
    print(f"points: {len(S)}")
    print(f"max_secant: {S.max_secant}")
    if args.oracle:
        brute = brute_secant_audit(S, OracleConfig(max_ambient_points=args.oracle_cap))
        print(f"oracle max_secant: {brute} ({'agree' if brute == S.max_secant else 'DISAGREE'})")
        if brute != S.max_secant:
            return EXIT_ERROR
    if args.t is not None:
        return EXIT_PASS if S.max_secant <= args.t else EXIT_FAIL
    return EXIT_PASS


def cmd_build(args) -> int:
    S = _load_point_set(args.pointset)
    try:
        G = build_linear_representation(S)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    G.validate()
    write_graph(args.out, G)
    print(f"P: {G.P}\nL: {G.L}\nE: {G.E}")
    return EXIT_PASS


def _oracle_verdict(G, check: str, t: int | None, cap: int) -> bool:
    config = OracleConfig(max_vertices=cap)
    if check == "c4":
        return not brute_c4(G, config)
    P = G.P
    return not any(
        brute_theta_count(G, u, P + v, config) >= t for u in range(P) for v in range(G.L)
    )


def cmd_verify(args) -> int:
    G = _load_graph(args.graph)
    if args.check == "theta":
        if args.t is None:
            raise InputError("--t is required for --check theta")
        report = verify_theta_free(G, args.t, jobs=args.jobs)
    elif args.check == "c4":
        report = find_c4(G)
    else:
        report = girth_report(G)
    text = report.to_text()
    if args.oracle and args.check != "girth":
        if G.P + G.L > args.oracle_cap:
            raise InputError(f"graph has {G.P + G.L} vertices; oracle cap is {args.oracle_cap}")
        agree = _oracle_verdict(G, args.check, args.t, args.oracle_cap) == report.passed
        text += f"oracle: {'agree' if agree else 'DISAGREE'}\n"
        if not agree:
            _emit(text, args.out)
            return EXIT_ERROR
    _emit(text, args.out)
    print(f"elapsed: {report.elapsed:.3f}s", file=sys.stderr)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_stats(args) -> int:
    G = _load_graph(args.graph)
    t = args.t if args.t is not None else G.provenance.t
    if t is None:
        raise InputError("--t is required (graph header has no t)")
    try:
        report = graph_bound_report(G, t)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(report.to_text(), args.out)
    return EXIT_PASS


def cmd_export(args) -> int:
    G = _load_graph(args.graph)
    data = export_graph(G, args.format)
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.write(data.decode())
    return EXIT_PASS


def cmd_search(args) -> int:
    F = _field(args.q, args.seed)
    try:
        S = search_max_bounded_secant(args.n, F, args.t, args.mode, cap=args.cap)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.out:
        write_point_set(args.out, S.n, F, S.points, [f"search mode={args.mode} t={args.t}"])
    print(f"size: {len(S)}")
    print(f"max_secant: {S.max_secant}")
    for p in S.points:
        print(",".join(map(str, p.coords)))
    return EXIT_PASS


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="theta-forge", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build and audit the norm point set")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out")
    c.add_argument("--oracle", action="store_true")
    c.add_argument("--oracle-cap", type=int, default=OracleConfig.max_ambient_points)
    c.add_argument("--maineq", action="store_true", help="also report the largest solution count of the norm equation")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("audit", help="maximum number of points of a set on one line")
    a.add_argument("--pointset", required=True)
    a.add_argument("--t", type=int)
    a.add_argument("--oracle", action="store_true")
    a.add_argument("--oracle-cap", type=int, default=OracleConfig.max_ambient_points)
    a.set_defaults(func=cmd_audit)

    b = sub.add_parser("build", help="incidence graph of the linear representation")
    b.add_argument("--pointset", required=True)
    b.add_argument("--out", required=True)
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="C4 / theta(3,t) / girth certificates")
    v.add_argument("--graph", required=True)
    v.add_argument("--check", choices=["c4", "theta", "girth"], required=True)
    v.add_argument("--t", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--out")
    v.add_argument("--oracle", action="store_true")
    v.add_argument("--oracle-cap", type=int, default=OracleConfig.max_vertices)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("stats", help="extremal-parameter report")
    s.add_argument("--graph", required=True)
    s.add_argument("--t", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_stats)

    e = sub.add_parser("export", help="re-export a graph")
    e.add_argument("--graph", required=True)
    e.add_argument("--format", choices=["edgelist", "adjacency"], default="edgelist")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)

    r = sub.add_parser("search", help="largest set with no t+1 collinear points")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--q", type=int, required=True)
    r.add_argument("--t", type=int, required=True)
    r.add_argument("--mode", choices=["exhaustive", "greedy"], default="exhaustive")
    r.add_argument("--cap", type=int, default=50)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--out")
    r.set_defaults(func=cmd_search)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(args).items() if k not in ("func", "command")}
    args.manifest = RunManifest(args.command, params)
    for key in ("pointset", "graph"):
        if getattr(args, key, None):
            args.manifest.inputs.append(getattr(args, key))
    start = time.perf_counter()
    try:
        code = args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    out = getattr(args, "out", None)
    if out and code != EXIT_ERROR:
        args.manifest.outputs.append(out)
        args.manifest.wall_time = round(time.perf_counter() - start, 6)
        args.manifest.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
