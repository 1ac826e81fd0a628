"""Linear representations of point sets as bipartite incidence graphs.

PG(n, q) is the hyperplane x0 = 0 of PG(n+1, q).  Point vertices are the
affine points (1, a) with a in GF(q)^(n+1), indexed by the base-q value of
a (first coordinate most significant).  Each s in S is a direction; the
affine lines with direction s are the cosets a + GF(q) s, and the line
vertex of a coset is its pivot-reduced base point.  Line vertices are laid
out class by class: line index = s_index * q^n + rank(base).

In exported files the point vertices keep their indices and line ``l`` is
written as ``P + l``.
"""
from __future__ import annotations

import io
import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .construct import PointSet
from .gf import GF

DEFAULT_MAX_EDGES = 20_000_000


def max_edges_cap() -> int:
    return int(os.environ.get("THETA_FORGE_MAX_EDGES", DEFAULT_MAX_EDGES))


@dataclass(frozen=True)
class Provenance:
    q: int | None = None
    n: int | None = None
    t: int | None = None
    s_size: int | None = None
    modulus: tuple[int, ...] | None = None


@dataclass(frozen=True, eq=False)
class IncidenceGraph:
    """Bipartite graph with a point side [0, P) and a line side [0, L).

    ``point_adj[p]`` holds the sorted line indices on point p and
    ``line_adj[l]`` the sorted point indices on line l.  Graphs built by
    ``build_linear_representation`` also carry the point set they came from.
    """

    point_adj: tuple[tuple[int, ...], ...]
    line_adj: tuple[tuple[int, ...], ...]
    provenance: Provenance = field(default_factory=Provenance)
    source: PointSet | None = None

    @property
    def P(self) -> int:
        return len(self.point_adj)

    @property
    def L(self) -> int:
        return len(self.line_adj)

    @cached_property
    def E(self) -> int:
        return sum(len(a) for a in self.point_adj)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IncidenceGraph)
            and self.point_adj == other.point_adj
            and self.line_adj == other.line_adj
        )

    @cached_property
    def adj(self) -> list[tuple[int, ...]]:
        """Adjacency on global ids: points 0..P-1, lines P..P+L-1."""
        P = self.P
        out = [tuple(P + l for l in ls) for ls in self.point_adj]
        out += [tuple(ps) for ps in self.line_adj]
        return out

    @cached_property
    def adj_sets(self) -> list[frozenset[int]]:
        return [frozenset(nb) for nb in self.adj]

    def is_point(self, v: int) -> bool:
        return 0 <= v < self.P

    def edges(self) -> Iterable[tuple[int, int]]:
        """(point, line) pairs in ascending order, line as a local index."""
        for p, ls in enumerate(self.point_adj):
            for l in ls:
                yield p, l

    def validate(self) -> None:
        """Raise ValueError unless the two adjacency lists are consistent transposes."""
        P, L = self.P, self.L
        for name, adj, other in (("point", self.point_adj, L), ("line", self.line_adj, P)):
            for v, nb in enumerate(adj):
                if list(nb) != sorted(set(nb)):
                    raise ValueError(f"{name} {v}: adjacency not sorted/unique")
                if nb and not (0 <= nb[0] and nb[-1] < other):
                    raise ValueError(f"{name} {v}: neighbour index out of range")
        forward = {(p, l) for p, ls in enumerate(self.point_adj) for l in ls}
        backward = {(p, l) for l, ps in enumerate(self.line_adj) for p in ps}
        if forward != backward:
            raise ValueError("point and line adjacency are not transposes")

    @classmethod
    def from_edges(cls, P: int, L: int, edges: Iterable[tuple[int, int]],
                   provenance: Provenance | None = None) -> "IncidenceGraph":
        pa: list[set[int]] = [set() for _ in range(P)]
        la: list[set[int]] = [set() for _ in range(L)]
        for p, l in edges:
            if not (0 <= p < P and 0 <= l < L):
                raise ValueError(f"edge ({p}, {l}) out of range for P={P}, L={L}")
            pa[p].add(l)
            la[l].add(p)
        return cls(
            tuple(tuple(sorted(s)) for s in pa),
            tuple(tuple(sorted(s)) for s in la),
            provenance or Provenance(),
        )

    def with_edge(self, p: int, l: int) -> "IncidenceGraph":
        """Copy with one extra (point, line) edge; provenance is dropped."""
        return IncidenceGraph.from_edges(self.P, self.L, [*self.edges(), (p, l)])


@dataclass(frozen=True)
class LineVertexId:
    s_index: int
    base: tuple[int, ...]


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def affine_points(F: GF, dim: int) -> np.ndarray:
    """All vectors of GF(q)^dim in index order, shape (q^dim, dim)."""
    q = F.q
    idx = np.arange(q ** dim, dtype=np.int64)
    cols = [(idx // q ** (dim - 1 - k)) % q for k in range(dim)]
    return np.stack(cols, axis=1) if cols else np.zeros((1, 0), dtype=np.int64)


def _pivot(s: Sequence[int]) -> int:
    return next(i for i, c in enumerate(s) if c)


def _pivot_reduce(F: GF, A: np.ndarray, s: Sequence[int]) -> np.ndarray:
    piv = _pivot(s)
    sv = np.asarray(s, dtype=np.int64)
    shift = F.mul_table[A[:, piv][:, None], sv[None, :]]
    return F.add_table[A, F.neg_table[shift]]


def _rank_without(F: GF, B: np.ndarray, drop: int) -> np.ndarray:
    q = F.q
    keep = [k for k in range(B.shape[1]) if k != drop]
    r = np.zeros(B.shape[0], dtype=np.int64)
    for k in keep:
        r = r * q + B[:, k]
    return r


def build_linear_representation(S: PointSet, max_edges: int | None = None) -> IncidenceGraph:
    """Incidence graph of the linear representation of S in PG(n+1, q)."""
    if len(S) == 0:
        raise ValueError("point set is empty")
    F, n, q = S.field, S.n, S.field.q
    cap = max_edges_cap() if max_edges is None else max_edges
    P, per_class = q ** (n + 1), q ** n
    E = len(S) * P
    if E > cap:
        raise ValueError(f"graph would have {E} edges, above the cap of {cap}")
    A = affine_points(F, n + 1)
    point_lines = np.empty((P, len(S)), dtype=np.int64)
    line_points = np.empty((len(S) * per_class, q), dtype=np.int64)
    for i, s in enumerate(S.points):
        ranks = _rank_without(F, _pivot_reduce(F, A, s.coords), _pivot(s.coords))
        point_lines[:, i] = i * per_class + ranks
        order = np.argsort(ranks, kind="stable")
        line_points[i * per_class:(i + 1) * per_class] = order.reshape(per_class, q)
    mod = tuple(F.params.modulus)
    return IncidenceGraph(
        tuple(map(tuple, point_lines.tolist())),
        tuple(map(tuple, line_points.tolist())),
        Provenance(q=q, n=n, t=S.t, s_size=len(S), modulus=mod),
        source=S,
    )


def line_vertex_id(G: IncidenceGraph, l: int) -> LineVertexId:
    S = _require_source(G)
    per_class = S.field.q ** S.n
    s_index, r = divmod(l, per_class)
    piv = _pivot(S.points[s_index].coords)
    digits = []
    for _ in range(S.n):
        r, c = divmod(r, S.field.q)
        digits.append(c)
    base = list(reversed(digits))
    base.insert(piv, 0)
    return LineVertexId(s_index, tuple(base))


def affine_point(G: IncidenceGraph, p: int) -> tuple[int, ...]:
    S = _require_source(G)
    q, dim = S.field.q, S.n + 1
    return tuple((p // q ** (dim - 1 - k)) % q for k in range(dim))


def parallel_classes(G: IncidenceGraph) -> list[list[int]]:
    """Line vertices grouped by the point of S they pass through."""
    S = _require_source(G)
    per_class = S.field.q ** S.n
    return [list(range(i * per_class, (i + 1) * per_class)) for i in range(len(S))]


def _require_source(G: IncidenceGraph) -> PointSet:
    if G.source is None:
        raise ValueError("graph was not built from a point set")
    return G.source


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------

def _header(G: IncidenceGraph, kind: str) -> str:
    pv = G.provenance

    def f(x):
        return "-" if x is None else str(x)

    mod = "-" if pv.modulus is None else ",".join(map(str, pv.modulus))
    return (f"# theta-forge {kind} q={f(pv.q)} t={f(pv.t)} n={f(pv.n)} S={f(pv.s_size)} "
            f"P={G.P} L={G.L} E={G.E} modulus={mod}")


def export_graph(G: IncidenceGraph, format: str = "edgelist") -> bytes:
    buf = io.StringIO()
    P = G.P
    if format == "edgelist":
        buf.write(_header(G, "graph") + "\n")
        for p, l in G.edges():
            buf.write(f"{p} {P + l}\n")
    elif format == "adjacency":
        buf.write(_header(G, "adjacency") + "\n")
        for v, nb in enumerate(G.adj):
            buf.write(f"{v}: {' '.join(map(str, nb))}\n")
    else:
        raise ValueError(f"unsupported export format {format!r}")
    return buf.getvalue().encode()


def _parse_header(line: str) -> tuple[str, dict[str, str]]:
    parts = line[1:].split()
    if len(parts) < 2 or parts[0] != "theta-forge":
        raise ValueError(f"not a theta-forge header: {line!r}")
    fields = dict(p.split("=", 1) for p in parts[2:])
    return parts[1], fields


def import_graph(data: bytes | str) -> IncidenceGraph:
    """Parse either export format, or a header-less list of ``a b`` edges.

    A header-less file may use arbitrary labels; its sides are found by
    2-colouring, and labels are renumbered in sorted order within each side.
    """
    text = data.decode() if isinstance(data, bytes) else data
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if lines and lines[0].startswith("# theta-forge"):
        kind, h = _parse_header(lines[0])
        P, L = int(h["P"]), int(h["L"])

        def opt(key):
            v = h.get(key, "-")
            return None if v == "-" else int(v)

        mod = h.get("modulus", "-")
        prov = Provenance(q=opt("q"), n=opt("n"), t=opt("t"), s_size=opt("S"),
                          modulus=None if mod == "-" else tuple(int(x) for x in mod.split(",")))
        edges = []
        body = [ln for ln in lines[1:] if not ln.startswith("#")]
        if kind == "graph":
            for ln in body:
                a, b = (int(x) for x in ln.split())
                edges.append(_orient(a, b, P, L))
        elif kind == "adjacency":
            for ln in body:
                v, _, rest = ln.partition(":")
                for w in rest.split():
                    a, b = int(v), int(w)
                    if a < b:
                        edges.append(_orient(a, b, P, L))
        else:
            raise ValueError(f"unknown graph kind {kind!r}")
        G = IncidenceGraph.from_edges(P, L, edges, prov)
        if "E" in h and int(h["E"]) != G.E:
            raise ValueError(f"header says E={h['E']} but {G.E} edges were read")
        return G
    return _from_plain_edges(lines)


def _orient(a: int, b: int, P: int, L: int) -> tuple[int, int]:
    if a > b:
        a, b = b, a
    if not (0 <= a < P <= b < P + L):
        raise ValueError(f"edge {a} {b} does not join the point side to the line side")
    return a, b - P


def _from_plain_edges(lines: list[str]) -> IncidenceGraph:
    pairs = []
    for ln in lines:
        if ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        pairs.append((parts[0], parts[1]))
    nbrs: dict[str, set[str]] = {}
    for a, b in pairs:
        if a == b:
            raise ValueError(f"self-loop at {a}")
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)

    def key(x: str):
        return (0, int(x), x) if x.lstrip("-").isdigit() else (1, 0, x)

    colour: dict[str, int] = {}
    for start in sorted(nbrs, key=key):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in nbrs[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    raise ValueError("graph is not bipartite")
    left = sorted((v for v in colour if colour[v] == 0), key=key)
    right = sorted((v for v in colour if colour[v] == 1), key=key)
    li = {v: i for i, v in enumerate(left)}
    ri = {v: i for i, v in enumerate(right)}
    edges = []
    for a, b in pairs:
        if colour[a] == 1:
            a, b = b, a
        edges.append((li[a], ri[b]))
    return IncidenceGraph.from_edges(len(left), len(right), edges)


def write_graph(path: str | Path, G: IncidenceGraph, format: str = "edgelist") -> None:
    Path(path).write_bytes(export_graph(G, format))


def read_graph(path: str | Path) -> IncidenceGraph:
    return import_graph(Path(path).read_bytes())
