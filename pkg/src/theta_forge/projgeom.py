"""Points and lines of PG(n, q).

Points are canonical coordinate tuples (first nonzero coordinate 1); lines
are the 2 x (n+1) reduced row-echelon basis of the underlying plane.  The
ambient field is passed explicitly as a ``GF``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .gf import GF, FieldParams

DEFAULT_POINT_CAP = 2_000_000


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    coords: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


@dataclass(frozen=True, order=True)
class ProjectiveLine:
    basis: tuple[tuple[int, ...], tuple[int, ...]]

    @property
    def dim(self) -> int:
        return len(self.basis[0]) - 1


def normalize_point(F: GF, raw: Sequence[int]) -> ProjectivePoint:
    for c in raw:
        if c:
            inv = F.inv(c)
            return ProjectivePoint(tuple(F.mul(inv, x) for x in raw))
    raise ValueError("the zero vector is not a projective point")


def rref(F: GF, rows: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Reduced row-echelon form; zero rows are dropped."""
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    out_rows = 0
    for col in range(ncols):
        pivot = next((i for i in range(out_rows, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[out_rows], m[pivot] = m[pivot], m[out_rows]
        inv = F.inv(m[out_rows][col])
        m[out_rows] = [F.mul(inv, x) for x in m[out_rows]]
        for i in range(len(m)):
            if i != out_rows and m[i][col]:
                c = m[i][col]
                m[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[i], m[out_rows])]
        out_rows += 1
        if out_rows == len(m):
            break
    return [tuple(r) for r in m[:out_rows]]


def rank(F: GF, rows: Iterable[Sequence[int]]) -> int:
    return len(rref(F, rows))


def line_through(F: GF, a: ProjectivePoint, b: ProjectivePoint) -> ProjectiveLine:
    if len(a) != len(b):
        raise ValueError("points live in different dimensions")
    if a == b:
        raise ValueError("a line needs two distinct points")
    r = rref(F, [a.coords, b.coords])
    if len(r) != 2:
        raise ValueError("points are not distinct in projective space")
    return ProjectiveLine((r[0], r[1]))


def points_on_line(F: GF, line: ProjectiveLine) -> list[ProjectivePoint]:
    """The q + 1 canonical points of a line, in lexicographic order."""
    u, v = line.basis
    pts = [normalize_point(F, v)]
    for lam in F.elements():
        pts.append(ProjectivePoint(tuple(F.add(x, F.mul(lam, y)) for x, y in zip(u, v))))
    # u + lam*v has leading coordinate 1 at u's pivot, which precedes v's pivot
    return sorted(pts)


def on_line(F: GF, p: ProjectivePoint, line: ProjectiveLine) -> bool:
    return rank(F, [*line.basis, p.coords]) == 2


def collinear(F: GF, a: ProjectivePoint, b: ProjectivePoint, c: ProjectivePoint) -> bool:
    return rank(F, [a.coords, b.coords, c.coords]) <= 2


def point_count(n: int, q: int) -> int:
    return (q ** (n + 1) - 1) // (q - 1)


def line_count(n: int, q: int) -> int:
    """Gaussian binomial [n+1 choose 2]_q."""
    return (q ** (n + 1) - 1) * (q ** n - 1) // ((q ** 2 - 1) * (q - 1))


def enumerate_points(n: int, F: GF, cap: int = DEFAULT_POINT_CAP) -> list[ProjectivePoint]:
    """All canonical points of PG(n, q) in lexicographic order."""
    if n < 1:
        raise ValueError("projective dimension must be >= 1")
    total = point_count(n, F.q)
    if total > cap:
        raise ValueError(f"PG({n},{F.q}) has {total} points, above the cap of {cap}")
    out = []
    for lead in range(n, -1, -1):
        prefix = (0,) * lead + (1,)
        for tail in itertools.product(range(F.q), repeat=n - lead):
            out.append(ProjectivePoint(prefix + tail))
    return out


def enumerate_lines(n: int, F: GF, cap: int = DEFAULT_POINT_CAP) -> Iterator[ProjectiveLine]:
    """All lines of PG(n, q), generated directly in RREF form."""
    if n < 1:
        raise ValueError("projective dimension must be >= 1")
    total = line_count(n, F.q)
    if total > cap:
        raise ValueError(f"PG({n},{F.q}) has {total} lines, above the cap of {cap}")
    dim = n + 1
    q = F.q
    for i, j in itertools.combinations(range(dim), 2):
        # row 1 free columns: those > i except j; row 2 free columns: those > j
        free1 = [c for c in range(i + 1, dim) if c != j]
        free2 = list(range(j + 1, dim))
        for vals1 in itertools.product(range(q), repeat=len(free1)):
            r1 = [0] * dim
            r1[i] = 1
            for c, x in zip(free1, vals1):
                r1[c] = x
            for vals2 in itertools.product(range(q), repeat=len(free2)):
                r2 = [0] * dim
                r2[j] = 1
                for c, x in zip(free2, vals2):
                    r2[c] = x
                yield ProjectiveLine((tuple(r1), tuple(r2)))


# ---------------------------------------------------------------------------
# point-set file format
# ---------------------------------------------------------------------------

def write_point_set(path: str | Path, n: int, F: GF, points: Sequence[ProjectivePoint],
                    comments: Sequence[str] = ()) -> None:
    """Header ``PG n q p e m_0 ... m_e``, optional ``#`` lines, then one point per line."""
    lines = [" ".join(map(str, ["PG", n, F.q, F.p, F.e, *F.params.modulus]))]
    lines += [f"# {c}" for c in comments]
    lines += [",".join(map(str, normalize_point(F, p).coords)) for p in points]
    Path(path).write_text("\n".join(lines) + "\n")


def read_point_set(path: str | Path) -> tuple[int, GF, list[ProjectivePoint], list[str]]:
    """Inverse of ``write_point_set``; points are canonicalized on load."""
    text = Path(path).read_text().splitlines()
    if not text or not text[0].startswith("PG "):
        raise ValueError(f"{path}: missing 'PG n q p e ...' header")
    head = [int(x) for x in text[0].split()[1:]]
    if len(head) < 4:
        raise ValueError(f"{path}: malformed header")
    n, q, p, e, *modulus = head
    F = GF(FieldParams(p, e, tuple(modulus)))
    if F.q != q:
        raise ValueError(f"{path}: q={q} does not match p^e={F.q}")
    comments, points = [], []
    for lineno, raw in enumerate(text[1:], start=2):
        raw = raw.strip()
        if not raw:
            continue
        if raw.startswith("#"):
            comments.append(raw[1:].strip())
            continue
        coords = [int(x) for x in raw.split(",")]
        if len(coords) != n + 1 or any(not 0 <= c < q for c in coords):
            raise ValueError(f"{path}:{lineno}: bad point {raw!r}")
        points.append(normalize_point(F, coords))
    return n, F, points, comments
