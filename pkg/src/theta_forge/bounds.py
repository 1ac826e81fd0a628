"""Extremal-parameter diagnostics for certified graphs."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from .construct import PointSet
from .linrep import IncidenceGraph


@dataclass(frozen=True)
class BoundReport:
    m: int
    n_part: int
    edges: int
    t: int
    exponent: float
    target_exponent: Fraction
    part_exponent: float
    target_part_exponent: Fraction
    exponent_rational: Fraction | None
    part_exponent_rational: Fraction | None
    edge_exponent_exact: bool
    part_exponent_exact: bool
    jly_ratio: float

    def to_text(self) -> str:
        return "".join(f"{k}: {v}\n" for k, v in asdict(self).items())


def _icbrt(n: int) -> int:
    r = round(n ** (1 / 3))
    while r ** 3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def perfect_power_root(n: int) -> tuple[int, int]:
    """(r, k) with n == r**k and k maximal."""
    for k in range(n.bit_length(), 1, -1):
        r = round(n ** (1 / k))
        for c in (r - 1, r, r + 1):
            if c > 1 and c ** k == n:
                return c, k
    return n, 1


def log_ratio(x: int, base: int) -> Fraction | None:
    """log(x)/log(base) as a fraction when both are powers of one integer."""
    if x < 1 or base < 2:
        return None
    r, k = perfect_power_root(base)
    j, y = 0, x
    while y % r == 0:
        y //= r
        j += 1
    return Fraction(j, k) if y == 1 else None


def power_identity(x: int, base: int, exponent: Fraction) -> bool:
    """Exact test of x == base ** exponent, i.e. x^den == base^num."""
    return x ** exponent.denominator == base ** exponent.numerator


def jly_denominator(t: int, m: int, n_part: int) -> float:
    """144 t^3 ((m n)^(2/3) + m + n), the k = 3 upper bound for theta(3, t)-free graphs."""
    mn = m * n_part
    c = _icbrt(mn)
    cross = float(c * c) if c ** 3 == mn else mn ** (2 / 3)
    return 144 * t ** 3 * (cross + m + n_part)


def bound_report(m: int, n_part: int, edges: int, t: int) -> BoundReport:
    if m <= 0 or n_part <= 0 or edges <= 0:
        raise ValueError("part sizes and edge count must be positive")
    if m > n_part:
        raise ValueError("m must be the smaller part")
    if t < 2:
        raise ValueError("t must be >= 2")
    target = 1 + Fraction(1, 2 * t + 1)
    target_part = Fraction(t + 2, 2 * t + 1)
    log_n = math.log(n_part)
    return BoundReport(
        m=m,
        n_part=n_part,
        edges=edges,
        t=t,
        exponent=math.log(edges) / log_n if n_part > 1 else math.nan,
        target_exponent=target,
        part_exponent=math.log(m) / log_n if n_part > 1 else math.nan,
        target_part_exponent=target_part,
        exponent_rational=log_ratio(edges, n_part),
        part_exponent_rational=log_ratio(m, n_part),
        edge_exponent_exact=power_identity(edges, n_part, target),
        part_exponent_exact=power_identity(m, n_part, target_part),
        jly_ratio=edges / jly_denominator(t, m, n_part),
    )


def graph_bound_report(G: IncidenceGraph, t: int) -> BoundReport:
    m, n_part = sorted((G.P, G.L))
    return bound_report(m, n_part, G.E, t)


def linrep_parameters(S: PointSet) -> tuple[int, int, int]:
    """(edges, point vertices, line vertices) = (|S| q^(n+1), q^(n+1), |S| q^n)."""
    if not S.audited:
        raise ValueError("point set must be audited first")
    q, n = S.field.q, S.n
    return len(S) * q ** (n + 1), q ** (n + 1), len(S) * q ** n
