"""Forbidden-subgraph certificates for bipartite incidence graphs.

Vertices are addressed by global id: point side 0..P-1, line side
P..P+L-1, matching the exported edge lists.  A theta graph here is two hub
vertices joined by t internally disjoint paths of three edges each; for
t = 2 it is the 6-cycle.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from .linrep import IncidenceGraph


@dataclass
class VerificationReport:
    check: str
    passed: bool
    witness: dict[str, Any] | None = None
    stats: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def outcome(self) -> str:
        return "pass" if self.passed else "fail"

    def to_text(self) -> str:
        """Stable, timing-free rendering (identical runs give identical bytes)."""
        out = [f"check: {self.check}", f"outcome: {self.outcome}"]
        for k in sorted(self.stats):
            out.append(f"{k}: {self.stats[k]}")
        if self.witness:
            for k in sorted(self.witness):
                out.append(f"witness.{k}: {_fmt(self.witness[k])}")
        return "\n".join(out) + "\n"


def _fmt(x: Any) -> str:
    if isinstance(x, (list, tuple)):
        return " ".join(_fmt(y) if not isinstance(y, (list, tuple)) else "-".join(map(str, y)) for y in x)
    return str(x)


# ---------------------------------------------------------------------------
# C4
# ---------------------------------------------------------------------------

def find_c4(G: IncidenceGraph) -> VerificationReport:
    """Look for two vertices of one side with two common neighbours.

    Scans all neighbour pairs of every vertex on whichever side makes that
    scan cheaper; a pair seen twice closes a 4-cycle.
    """
    start = time.perf_counter()
    adj = G.adj
    P = G.P
    cost_lines = sum(len(a) * (len(a) - 1) for a in G.line_adj)
    cost_points = sum(len(a) * (len(a) - 1) for a in G.point_adj)
    hubs = range(P, P + G.L) if cost_lines <= cost_points else range(P)
    first: dict[tuple[int, int], int] = {}
    examined = 0
    witness = None
    for x in hubs:
        nb = adj[x]
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                examined += 1
                key = (nb[i], nb[j])
                y = first.setdefault(key, x)
                if y != x:
                    witness = {"cycle": [nb[i], y, nb[j], x]}
                    break
            if witness:
                break
        if witness:
            break
    return VerificationReport(
        "c4", witness is None, witness, {"pairs_examined": examined},
        time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# theta(3, t)
# ---------------------------------------------------------------------------

def _max_matching(left: list[int], nbrs: dict[int, list[int]], limit: int | None = None) -> dict[int, int]:
    """Augmenting-path maximum matching; returns right -> left.

    Stops as soon as the matching reaches ``limit``.
    """
    match_r: dict[int, int] = {}

    def augment(a: int, seen: set[int]) -> bool:
        for b in nbrs[a]:
            if b in seen:
                continue
            seen.add(b)
            if b not in match_r or augment(match_r[b], seen):
                match_r[b] = a
                return True
        return False

    for a in left:
        if limit is not None and len(match_r) >= limit:
            break
        augment(a, set())
    return match_r


def _paths_from(u: int, v: int, pairs: list[tuple[int, int]], limit: int | None) -> list[list[int]]:
    """Disjoint u-m-p-v paths from the (m, p) incidences between N(u) and N(v)."""
    nbrs: dict[int, list[int]] = {}
    for m, p in pairs:
        nbrs.setdefault(m, []).append(p)
    left = sorted(nbrs)
    for m in left:
        nbrs[m].sort()
    match_r = _max_matching(left, nbrs, limit)
    return sorted([u, m, p, v] for p, m in match_r.items())


def _check_opposite(G: IncidenceGraph, u: int, v: int) -> None:
    n = G.P + G.L
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError("vertex out of range")
    if G.is_point(u) == G.is_point(v):
        raise ValueError("3-edge paths join opposite sides; got two vertices of one side")


def disjoint_3paths(G: IncidenceGraph, u: int, v: int, limit: int | None = None) -> list[list[int]]:
    """A maximum family of internally disjoint 3-edge u-v paths."""
    _check_opposite(G, u, v)
    adj = G.adj
    nv = set(adj[v])
    pairs = [(m, p) for m in adj[u] if m != v for p in adj[m] if p != u and p in nv]
    return _paths_from(u, v, pairs, limit)


def max_disjoint_3paths(G: IncidenceGraph, u: int, v: int) -> int:
    """Maximum number of internally vertex-disjoint u-v paths with exactly 3 edges.

    Equal to a maximum matching between N(u) - {v} and N(v) - {u} using the
    edges of G: a matched pair (m, p) is the path u-m-p-v.
    """
    return len(disjoint_3paths(G, u, v))


def _scan_theta(G: IncidenceGraph, t: int, lo: int, hi: int, exact: bool) -> dict[str, Any]:
    adj = G.adj
    best = 0
    examined = 0
    for u in range(lo, hi):
        reach: dict[int, list[tuple[int, int]]] = {}
        for m in adj[u]:
            for p in adj[m]:
                if p == u:
                    continue
                for v in adj[p]:
                    if v != m:
                        reach.setdefault(v, []).append((m, p))
        for v in sorted(reach):
            examined += 1
            pairs = reach[v]
            if len(pairs) == 1:
                bound = 1
            else:
                bound = min(len({m for m, _ in pairs}), len({p for _, p in pairs}))
            if bound < t and bound <= best:
                continue
            paths = _paths_from(u, v, pairs, None if exact else t)
            best = max(best, len(paths))
            if len(paths) >= t:
                return {"examined": examined, "best": best, "witness": (u, v, paths[:t])}
    return {"examined": examined, "best": best, "witness": None}


def verify_theta_free(G: IncidenceGraph, t: int, jobs: int = 1, exact_stats: bool = True) -> VerificationReport:
    """Pass iff no point/line pair is joined by t internally disjoint 3-edge paths.

    Only pairs joined by at least one 3-edge walk are examined, and a pair is
    skipped when the number of distinct middle vertices on either side is
    already below t.  Pairs are scanned in (point, line) order and the
    first violating pair is reported, whatever ``jobs`` is.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    start = time.perf_counter()
    P = G.P
    if jobs <= 1 or P < 2 * jobs:
        results = [_scan_theta(G, t, 0, P, exact_stats)]
    else:
        bounds = [P * i // jobs for i in range(jobs + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_scan_theta, G, t, bounds[i], bounds[i + 1], exact_stats)
                       for i in range(jobs)]
            results = [f.result() for f in futures]
    examined, best, witness = 0, 0, None
    for r in results:
        examined += r["examined"]
        best = max(best, r["best"])
        if r["witness"] is not None:
            u, v, paths = r["witness"]
            witness = {"pair": [u, v], "paths": paths}
            break
    return VerificationReport(
        f"theta({t})", witness is None, witness,
        {"pairs_examined": examined, "max_disjoint_paths": best},
        time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# girth
# ---------------------------------------------------------------------------

def girth(G: IncidenceGraph) -> float:
    """Length of a shortest cycle, or ``math.inf`` for a forest."""
    adj = G.adj
    n = len(adj)
    best = math.inf
    for r in range(n):
        dist = {r: 0}
        parent = {r: -1}
        frontier = [r]
        d = 0
        while frontier and 2 * d + 1 < best:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y == parent[x]:
                        continue
                    if y in dist:
                        best = min(best, dist[x] + dist[y] + 1)
                    else:
                        dist[y] = d + 1
                        parent[y] = x
                        nxt.append(y)
            frontier = nxt
            d += 1
    return best


def girth_report(G: IncidenceGraph) -> VerificationReport:
    start = time.perf_counter()
    g = girth(G)
    return VerificationReport("girth", True, None, {"girth": g}, time.perf_counter() - start)


# ---------------------------------------------------------------------------
# witness replay
# ---------------------------------------------------------------------------

def replay_witness(G: IncidenceGraph, report: VerificationReport) -> bool:
    """True iff a failing report's witness is really embedded in G."""
    if report.passed or not report.witness:
        return False
    adj = [set(nb) for nb in G.adj]

    def edge(a: int, b: int) -> bool:
        return 0 <= a < len(adj) and b in adj[a]

    w = report.witness
    if report.check == "c4":
        c = w["cycle"]
        return len(set(c)) == 4 and all(edge(c[i], c[(i + 1) % 4]) for i in range(4))
    if report.check.startswith("theta("):
        t = int(report.check[6:-1])
        u, v = w["pair"]
        paths = w["paths"]
        if len(paths) != t or u == v:
            return False
        internal: list[int] = []
        for path in paths:
            if len(path) != 4 or path[0] != u or path[-1] != v:
                return False
            if not all(edge(path[i], path[i + 1]) for i in range(3)):
                return False
            internal += path[1:3]
        return len(set(internal)) == len(internal) and not {u, v} & set(internal)
    return False
