"""Norm point sets, secant audits and small bounded-secant searches."""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Literal

from .gf import GF, ExtField, ExtFieldElement
from .projgeom import (
    ProjectiveLine,
    ProjectivePoint,
    enumerate_points,
    line_through,
    point_count,
)

DEFAULT_SELF_CHECK_POINTS = 50
DEFAULT_SEARCH_CAP = 50


@dataclass(frozen=True)
class ConstructionParams:
    field: GF
    t: int

    def __post_init__(self) -> None:
        if self.t < 2:
            raise ValueError("t must be >= 2")
        if self.field.q <= self.t:
            raise ValueError(f"the norm construction needs q > t (got q={self.field.q}, t={self.t})")

    @property
    def n(self) -> int:
        return self.t + 1


@dataclass(frozen=True)
class PointSet:
    """Distinct points of PG(n, q); ``max_secant`` is None until audited."""

    n: int
    field: GF
    points: tuple[ProjectivePoint, ...]
    max_secant: int | None = None
    t: int | None = None
    ext: ExtField | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(set(self.points)) != len(self.points):
            raise ValueError("point set contains repeated points")
        if any(len(p) != self.n + 1 for p in self.points):
            raise ValueError(f"all points must have {self.n + 1} coordinates")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def audited(self) -> bool:
        return self.max_secant is not None


def build_norm_set(params: ConstructionParams, seed: int = 0) -> PointSet:
    """The set {(1, x|_q, N(x)) : x in GF(q^t)} in PG(t+1, q), ordered by x."""
    F, t = params.field, params.t
    E = ExtField(F, t, seed=seed)
    norms = E.norm_table
    pts = tuple(
        ProjectivePoint((1, *x, norms[i])) for i, x in enumerate(E.elements())
    )
    return PointSet(params.n, F, pts, t=t, ext=E)


def _k_from_pairs(c: int) -> int:
    # C(k, 2) = c
    k = (1 + math.isqrt(1 + 8 * c)) // 2
    if k * (k - 1) // 2 != c:
        raise AssertionError(f"pair count {c} is not triangular")
    return k


def secant_histogram(S: PointSet) -> Counter[ProjectiveLine]:
    """Number of S-points on every line meeting S in at least two points."""
    F = S.field
    pairs: Counter[ProjectiveLine] = Counter(
        line_through(F, a, b) for a, b in itertools.combinations(S.points, 2)
    )
    return Counter({line: _k_from_pairs(c) for line, c in pairs.items()})


def audit_max_secant(S: PointSet, self_check_below: int = DEFAULT_SELF_CHECK_POINTS) -> int:
    """Largest number of S-points on one line of the ambient PG(n, q).

    Uses the pair histogram.  When the ambient space has at most
    ``self_check_below`` points the all-lines enumeration is run as well and
    the two must agree.
    """
    if len(S) < 2:
        return len(S)
    best = max(secant_histogram(S).values())
    if point_count(S.n, S.field.q) <= self_check_below:
        from .oracle import OracleConfig, brute_secant_audit

        brute = brute_secant_audit(S, OracleConfig(max_ambient_points=self_check_below))
        if brute != best:
            raise AssertionError(f"secant audits disagree: pairs={best}, all-lines={brute}")
    return best


def audited(S: PointSet, **kwargs) -> PointSet:
    return replace(S, max_secant=audit_max_secant(S, **kwargs))


def count_maineq_solutions(x: ExtFieldElement, y: ExtFieldElement) -> int:
    """Number of a in GF(q) minus {0, 1} with a N(x) + (1-a) N(y) = N(a x + (1-a) y).

    Every candidate a is evaluated directly; a = 0 and a = 1 always solve the
    equation and are excluded.
    """
    if x.field != y.field:
        raise ValueError("x and y lie in different fields")
    if x.coeffs == y.coeffs:
        raise ValueError("x and y must be distinct")
    E = x.field
    F = E.base
    norms = E.norm_table
    nx, ny = norms[E.to_int(x.coeffs)], norms[E.to_int(y.coeffs)]
    count = 0
    # integers 0 and 1 encode the field's zero and one for every q
    for a in range(2, F.q):
        b = F.sub(1, a)
        z = E.add(E.scale(a, x.coeffs), E.scale(b, y.coeffs))
        if F.add(F.mul(a, nx), F.mul(b, ny)) == norms[E.to_int(z)]:
            count += 1
    return count


def max_maineq_solutions(E: ExtField) -> int:
    """Maximum of ``count_maineq_solutions`` over all unordered distinct pairs."""
    elems = [E(v) for v in range(E.order)]
    return max(count_maineq_solutions(x, y) for x, y in itertools.combinations(elems, 2))


# ---------------------------------------------------------------------------
# bounded-secant search
# ---------------------------------------------------------------------------

def _is_valid(F: GF, chosen: list[ProjectivePoint], t: int) -> bool:
    if len(chosen) <= t:
        return True
    counts = Counter(line_through(F, a, b) for a, b in itertools.combinations(chosen, 2))
    return all(_k_from_pairs(c) <= t for c in counts.values())


def search_max_bounded_secant(
    n: int,
    F: GF,
    t: int,
    mode: Literal["exhaustive", "greedy"] = "exhaustive",
    cap: int = DEFAULT_SEARCH_CAP,
) -> PointSet:
    """Largest (exhaustive) or maximal (greedy) set with no t + 1 collinear points.

    Exhaustive mode is a branch and bound over the lexicographic point order;
    the first maximum found in that order is returned.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if mode not in ("exhaustive", "greedy"):
        raise ValueError(f"unknown search mode {mode!r}")
    total = point_count(n, F.q)
    if mode == "exhaustive" and total > cap:
        raise ValueError(f"PG({n},{F.q}) has {total} points; exhaustive search is capped at {cap}")
    points = enumerate_points(n, F)
    line_ids: dict[ProjectiveLine, int] = {}
    pair_line = [[-1] * total for _ in range(total)]
    for i, j in itertools.combinations(range(total), 2):
        lid = line_ids.setdefault(line_through(F, points[i], points[j]), len(line_ids))
        pair_line[i][j] = pair_line[j][i] = lid
    on_line = [0] * len(line_ids)

    def can_add(i: int, chosen: list[int]) -> bool:
        seen = set()
        for j in chosen:
            lid = pair_line[i][j]
            if lid not in seen:
                seen.add(lid)
                if on_line[lid] + (1 if on_line[lid] else 2) > t:
                    return False
        return True

    def add(i: int, chosen: list[int], sign: int) -> None:
        # on_line[l] counts chosen points on l once l holds >= 2 chosen points
        seen = set()
        for j in chosen:
            lid = pair_line[i][j]
            if lid in seen:
                continue
            seen.add(lid)
            if sign > 0:
                on_line[lid] += 1 if on_line[lid] else 2
            else:
                on_line[lid] -= 1 if on_line[lid] > 2 else 2

    if mode == "greedy":
        chosen: list[int] = []
        for i in range(total):
            if can_add(i, chosen):
                add(i, chosen, +1)
                chosen.append(i)
        best = chosen
    else:
        best = []
        chosen = []

        def extend(start: int) -> None:
            nonlocal best
            if len(chosen) > len(best):
                best = list(chosen)
            for i in range(start, total):
                if len(chosen) + (total - i) <= len(best):
                    return
                if can_add(i, chosen):
                    add(i, chosen, +1)
                    chosen.append(i)
                    extend(i + 1)
                    chosen.pop()
                    add(i, chosen, -1)

        extend(0)

    pts = tuple(points[i] for i in best)
    S = PointSet(n, F, pts, t=t)
    if not _is_valid(F, list(pts), t):
        raise AssertionError("search produced a set violating the secant bound")
    return audited(S, self_check_below=cap)
