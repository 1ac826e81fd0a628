"""Slow reference implementations used to cross-check the fast paths.

Everything here is deliberately naive and refuses inputs above its caps.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .construct import PointSet
from .linrep import IncidenceGraph
from .projgeom import enumerate_lines, point_count, points_on_line


@dataclass(frozen=True)
class OracleConfig:
    max_vertices: int = 60
    max_ambient_points: int = 50
    trial_count: int = 1000
    seed: int = 0


def _check_graph_cap(G: IncidenceGraph, config: OracleConfig) -> None:
    if G.P + G.L > config.max_vertices:
        raise ValueError(f"graph has {G.P + G.L} vertices; oracle cap is {config.max_vertices}")


def three_paths(G: IncidenceGraph, u: int, v: int) -> list[tuple[int, int, int, int]]:
    """Every path u-a-b-v with three edges and four distinct vertices."""
    adj = G.adj_sets
    out = []
    for a in sorted(adj[u]):
        if a == v:
            continue
        for b in sorted(adj[a]):
            if b in (u, v) or v not in adj[b]:
                continue
            out.append((u, a, b, v))
    return out


def brute_theta_count(G: IncidenceGraph, u: int, v: int, config: OracleConfig = OracleConfig()) -> int:
    """Most pairwise internally disjoint 3-edge u-v paths, by backtracking over path sets.

    Paths are grouped by their first internal vertex; each group contributes
    at most one path, so the search branches over "which path of this group,
    if any".
    """
    _check_graph_cap(G, config)
    if u == v:
        raise ValueError("endpoints must differ")
    groups: dict[int, list[int]] = {}
    for _, a, b, _ in three_paths(G, u, v):
        groups.setdefault(a, []).append(b)
    firsts = sorted(groups, key=lambda a: len(groups[a]))
    all_seconds = {b for bs in groups.values() for b in bs}
    best = 0
    used: set[int] = set()

    def rec(i: int, chosen: int) -> None:
        nonlocal best
        best = max(best, chosen)
        if i == len(firsts):
            return
        if chosen + min(len(firsts) - i, len(all_seconds) - len(used)) <= best:
            return
        for b in groups[firsts[i]]:
            if b not in used:
                used.add(b)
                rec(i + 1, chosen + 1)
                used.discard(b)
        rec(i + 1, chosen)

    rec(0, 0)
    return best


def brute_c4(G: IncidenceGraph, config: OracleConfig = OracleConfig()) -> bool:
    """True iff four distinct vertices a, b, c, d carry the edges ab, bc, cd, da."""
    _check_graph_cap(G, config)
    adj = G.adj_sets
    n = len(adj)
    for a in range(n):
        for b in adj[a]:
            for c in adj[b]:
                if c == a:
                    continue
                for d in adj[c]:
                    if d not in (a, b) and a in adj[d]:
                        return True
    return False


def brute_secant_audit(S: PointSet, config: OracleConfig = OracleConfig()) -> int:
    """Max |line meet S| over every line of the ambient PG(n, q)."""
    total = point_count(S.n, S.field.q)
    if total > config.max_ambient_points:
        raise ValueError(f"PG({S.n},{S.field.q}) has {total} points; oracle cap is {config.max_ambient_points}")
    members = set(S.points)
    best = min(len(members), 1)
    for line in enumerate_lines(S.n, S.field):
        best = max(best, sum(p in members for p in points_on_line(S.field, line)))
    return best


def random_bipartite_graph(rng: random.Random, max_vertices: int = 60,
                           density: float | None = None) -> IncidenceGraph:
    """Random bipartite graph with at most ``max_vertices`` vertices.

    Each side gets at least one vertex; each cross pair is an edge with
    probability ``density`` (drawn from [0.05, 0.5] when not given).
    """
    total = rng.randint(min(4, max_vertices), max_vertices)
    P = rng.randint(1, total - 1)
    L = total - P
    if density is None:
        density = rng.uniform(0.05, 0.5)
    edges = [(p, l) for p, l in itertools.product(range(P), range(L)) if rng.random() < density]
    return IncidenceGraph.from_edges(P, L, edges)


def random_corpus(config: OracleConfig = OracleConfig()) -> list[IncidenceGraph]:
    """``trial_count`` seeded graphs with density swept linearly over 0.05..0.5."""
    rng = random.Random(config.seed)
    n = config.trial_count
    out = []
    for i in range(n):
        density = 0.05 + 0.45 * i / max(n - 1, 1)
        out.append(random_bipartite_graph(rng, config.max_vertices, density))
    return out
