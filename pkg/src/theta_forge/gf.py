"""Exact arithmetic in GF(p^e) and in a degree-t extension GF(q^t).

Elements of GF(q) are handled internally as integers in ``[0, q)``: the
base-p digits of the integer are the coefficients of the residue polynomial,
least significant digit first.  Elements of GF(q^t) are tuples of ``t``
base-field integers, the coordinates in the power basis 1, a, ..., a^(t-1).
The thin ``FieldElement`` / ``ExtFieldElement`` wrappers give operator
syntax on top of the integer API; hot loops elsewhere use the integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

MAX_Q = 1 << 16
_ADD_TABLE_MAX_Q = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e`` or None if q is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    return (p, e) if r == 1 else None


# ---------------------------------------------------------------------------
# polynomials over a field given by its integer API (low degree first)
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_add(F: "GF", a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def poly_sub(F: "GF", a: Sequence[int], b: Sequence[int]) -> list[int]:
    return poly_add(F, a, [F.neg(c) for c in b])


def poly_mul(F: "GF", a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return _trim(out)


def poly_divmod(F: "GF", a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = _trim(list(a))
    quot = [0] * max(len(r) - len(b) + 1, 0)
    lead_inv = F.inv(b[-1])
    while len(r) >= len(b):
        shift = len(r) - len(b)
        c = F.mul(r[-1], lead_inv)
        quot[shift] = c
        for i, bi in enumerate(b):
            r[i + shift] = F.sub(r[i + shift], F.mul(c, bi))
        _trim(r)
    return _trim(quot), r


def poly_mod(F: "GF", a: Sequence[int], b: Sequence[int]) -> list[int]:
    return poly_divmod(F, a, b)[1]


def poly_gcd(F: "GF", a: Sequence[int], b: Sequence[int]) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, poly_mod(F, a, b)
    if not a:
        return a
    inv = F.inv(a[-1])
    return [F.mul(c, inv) for c in a]


def poly_powmod(F: "GF", base: Sequence[int], k: int, mod: Sequence[int]) -> list[int]:
    result: list[int] = [1]
    b = poly_mod(F, base, mod)
    while k:
        if k & 1:
            result = poly_mod(F, poly_mul(F, result, b), mod)
        b = poly_mod(F, poly_mul(F, b, b), mod)
        k >>= 1
    return result


def is_irreducible(F: "GF", f: Sequence[int]) -> bool:
    """Irreducibility over F by gcd(f, x^(q^i) - x) == 1 for 1 <= i <= deg/2."""
    f = _trim(list(f))
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    xq = x
    for _ in range(d // 2):
        xq = poly_powmod(F, xq, F.q, f)
        if len(poly_gcd(F, f, poly_sub(F, xq, x))) > 1:
            return False
    return True


def find_irreducible(base: "GF", degree: int, seed: int = 0) -> tuple[int, ...]:
    """Deterministic monic irreducible polynomial of ``degree`` over ``base``.

    Candidates are the monic polynomials whose lower coefficients are the
    base-q digits of k, scanned as k = seed, seed + 1, ... modulo q^degree.
    Returns the coefficient tuple, low degree first, including the leading 1.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    q = base.q
    total = q ** degree
    start = seed % total
    for off in range(total):
        k = (start + off) % total
        lower = []
        for _ in range(degree):
            k, c = divmod(k, q)
            lower.append(c)
        f = lower + [1]
        if is_irreducible(base, f):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# GF(p^e)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldParams:
    p: int
    e: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.e < 1 or len(self.modulus) != self.e + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree e")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise ValueError("modulus coefficients must lie in [0, p)")
        if self.p ** self.e > MAX_Q:
            raise ValueError(f"field size exceeds {MAX_Q}")

    @property
    def q(self) -> int:
        return self.p ** self.e


class GF:
    """The field GF(p^e) = Z_p[u]/(modulus) with integer-encoded elements."""

    def __init__(self, params: FieldParams):
        self.params = params
        self.p = params.p
        self.e = params.e
        self.q = params.q
        if self.e > 1:
            prime = GF.prime(self.p)
            if not is_irreducible(prime, params.modulus):
                raise ValueError(f"modulus {params.modulus} is reducible over GF({self.p})")
        self._build_tables()

    @classmethod
    def prime(cls, p: int) -> "GF":
        return cls(FieldParams(p, 1, (0, 1)))

    def __repr__(self) -> str:
        return f"GF({self.q}; modulus={list(self.params.modulus)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and other.params == self.params

    def __hash__(self) -> int:
        return hash(self.params)

    # -- encoding ----------------------------------------------------------
    def coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + (c % self.p)
        return v

    def elements(self) -> range:
        return range(self.q)

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    # -- tables ------------------------------------------------------------
    def _raw_mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        p, mod, e = self.p, self.params.modulus, self.e
        ac, bc = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(ac):
            if x:
                for j, y in enumerate(bc):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for k in range(len(prod) - 1, e - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(e):
                    prod[k - e + i] = (prod[k - e + i] - c * mod[i]) % p
        return self.from_coeffs(prod[:e])

    def _build_tables(self) -> None:
        q = self.q
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        for g in range(2, q) if q > 2 else [1]:
            x, seen_one_at = 1, None
            for k in range(q - 1):
                exp[k] = x
                x = self._raw_mul(x, g)
                if x == 1:
                    seen_one_at = k + 1
                    break
            if seen_one_at == q - 1:
                break
        else:
            if q > 2:
                raise AssertionError("no primitive element")  # modulus was checked
        for k in range(q - 1):
            exp[k + q - 1] = exp[k]
            log[exp[k]] = k
        self._exp = exp
        self._log = log
        self._add = None
        if self.e > 1 and q <= _ADD_TABLE_MAX_Q:
            self._add = [[self._raw_add(a, b) for b in range(q)] for a in range(q)]
        self._neg = [self._raw_neg(a) for a in range(q)] if self.e > 1 else None

    def _raw_add(self, a: int, b: int) -> int:
        return self.from_coeffs([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def _raw_neg(self, a: int) -> int:
        return self.from_coeffs([-x for x in self.coeffs(a)])

    # -- arithmetic --------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        return self._raw_add(a, b)

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.q)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    @cached_property
    def add_table(self) -> np.ndarray:
        q = self.q
        return np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.q
        return np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.q)], dtype=np.int64)


def make_field(q: int, seed: int = 0) -> GF:
    """GF(q) for a prime power q, modulus chosen by ``find_irreducible``."""
    pe = prime_power(q)
    if pe is None:
        raise ValueError(f"q={q} is not a prime power")
    p, e = pe
    if e == 1:
        return GF.prime(p)
    return GF(FieldParams(p, e, find_irreducible(GF.prime(p), e, seed)))


@dataclass(frozen=True)
class FieldElement:
    field: GF
    value: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"{self.value} is not an element of GF({self.field.q})")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.field, v)

    def _other(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("operands from different fields")
            return other.value
        return other % self.field.q if self.field.e == 1 else other

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._other(other)))

    def __pow__(self, k: int):
        return self._wrap(self.field.pow(self.value, k))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value}@GF({self.field.q})"


# ---------------------------------------------------------------------------
# GF(q^t) over GF(q)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtFieldParams:
    base: FieldParams
    t: int
    ext_modulus: tuple[int, ...]


Vec = tuple[int, ...]


class ExtField:
    """GF(q^t) = GF(q)[a]/(ext_modulus); elements are coordinate tuples.

    The coordinate tuple of an element is its field reduction over GF(q)
    in the power basis 1, a, ..., a^(t-1).
    """

    def __init__(self, base: GF, t: int, ext_modulus: Sequence[int] | None = None, seed: int = 0):
        if t < 2:
            raise ValueError("extension degree t must be >= 2")
        if ext_modulus is None:
            ext_modulus = find_irreducible(base, t, seed)
        ext_modulus = tuple(ext_modulus)
        if len(ext_modulus) != t + 1 or ext_modulus[-1] != 1:
            raise ValueError("ext_modulus must be monic of degree t")
        if not is_irreducible(base, ext_modulus):
            raise ValueError(f"ext_modulus {ext_modulus} is reducible over GF({base.q})")
        self.base = base
        self.t = t
        self.modulus = ext_modulus
        self.params = ExtFieldParams(base.params, t, ext_modulus)
        self.order = base.q ** t
        self.zero: Vec = (0,) * t
        self.one: Vec = (1,) + (0,) * (t - 1)

    def __repr__(self) -> str:
        return f"GF({self.base.q}^{self.t}; ext_modulus={list(self.modulus)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExtField) and other.params == self.params

    def __hash__(self) -> int:
        return hash(self.params)

    def __call__(self, x: int | Sequence[int]) -> "ExtFieldElement":
        v = self.from_int(x) if isinstance(x, int) else tuple(x)
        return ExtFieldElement(self, v)

    # -- encoding ----------------------------------------------------------
    def to_int(self, x: Vec) -> int:
        v = 0
        for c in reversed(x):
            v = v * self.base.q + c
        return v

    def from_int(self, v: int) -> Vec:
        out = []
        for _ in range(self.t):
            v, c = divmod(v, self.base.q)
            out.append(c)
        return tuple(out)

    def elements(self) -> Iterator[Vec]:
        for v in range(self.order):
            yield self.from_int(v)

    def embed(self, a: int) -> Vec:
        """Image of a base-field element."""
        return (a,) + (0,) * (self.t - 1)

    # -- arithmetic --------------------------------------------------------
    def add(self, x: Vec, y: Vec) -> Vec:
        F = self.base
        return tuple(F.add(a, b) for a, b in zip(x, y))

    def neg(self, x: Vec) -> Vec:
        return tuple(self.base.neg(a) for a in x)

    def sub(self, x: Vec, y: Vec) -> Vec:
        F = self.base
        return tuple(F.sub(a, b) for a, b in zip(x, y))

    def scale(self, c: int, x: Vec) -> Vec:
        F = self.base
        return tuple(F.mul(c, a) for a in x)

    def mul(self, x: Vec, y: Vec) -> Vec:
        F, t, mod = self.base, self.t, self.modulus
        prod = [0] * (2 * t - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        prod[i + j] = F.add(prod[i + j], F.mul(a, b))
        for k in range(2 * t - 2, t - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(t):
                    prod[k - t + i] = F.sub(prod[k - t + i], F.mul(c, mod[i]))
        return tuple(prod[:t])

    def pow(self, x: Vec, k: int) -> Vec:
        """Square-and-multiply; ``pow(0, 0)`` is 1 by convention."""
        if k < 0:
            raise ValueError("negative exponent")
        result, b = self.one, x
        while k:
            if k & 1:
                result = self.mul(result, b)
            b = self.mul(b, b)
            k >>= 1
        return result

    def inv(self, x: Vec) -> Vec:
        if x == self.zero:
            raise ZeroDivisionError("inverse of zero in GF(%d^%d)" % (self.base.q, self.t))
        return self.pow(x, self.order - 2)

    def frobenius(self, x: Vec, times: int = 1) -> Vec:
        """x -> x^(q^times)."""
        for _ in range(times):
            x = self.pow(x, self.base.q)
        return x

    def in_base(self, x: Vec) -> bool:
        return all(c == 0 for c in x[1:])

    def norm_power(self, x: Vec) -> Vec:
        q = self.base.q
        return self.pow(x, (self.order - 1) // (q - 1))

    def norm_product(self, x: Vec) -> Vec:
        out, conj = self.one, x
        for _ in range(self.t):
            out = self.mul(out, conj)
            conj = self.frobenius(conj)
        return out

    def norm(self, x: Vec, check: bool = False) -> int:
        """Norm to GF(q), returned as a base-field integer.

        With ``check`` the power form and the Frobenius-product form are both
        evaluated and must agree.
        """
        y = self.norm_power(x)
        if not self.in_base(y):
            raise ArithmeticError(f"norm of {x} left the base field: {y}")
        if check and self.norm_product(x) != y:
            raise ArithmeticError(f"norm formulas disagree at {x}")
        return y[0]

    @cached_property
    def norm_table(self) -> list[int]:
        """Norms of all elements, indexed by the integer encoding."""
        return [self.norm(x) for x in self.elements()]


@dataclass(frozen=True)
class ExtFieldElement:
    field: ExtField
    coeffs: Vec

    def __post_init__(self) -> None:
        q = self.field.base.q
        if len(self.coeffs) != self.field.t or any(not 0 <= c < q for c in self.coeffs):
            raise ValueError(f"{self.coeffs} is not a reduced element of {self.field!r}")

    def _wrap(self, v: Vec) -> "ExtFieldElement":
        return ExtFieldElement(self.field, v)

    def _other(self, other) -> Vec:
        if isinstance(other, ExtFieldElement):
            if other.field != self.field:
                raise ValueError("operands from different fields")
            return other.coeffs
        if isinstance(other, FieldElement):
            return self.field.embed(other.value)
        if isinstance(other, int):
            return self.field.embed(other % self.field.base.q if self.field.base.e == 1 else other)
        return NotImplemented

    def __add__(self, other):
        return self._wrap(self.field.add(self.coeffs, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.coeffs, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._other(other), self.coeffs))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.coeffs, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.field.neg(self.coeffs))

    def __pow__(self, k: int):
        return self._wrap(self.field.pow(self.coeffs, k))

    def inverse(self) -> "ExtFieldElement":
        return self._wrap(self.field.inv(self.coeffs))

    def frobenius(self) -> "ExtFieldElement":
        return self._wrap(self.field.frobenius(self.coeffs))

    def norm(self) -> FieldElement:
        return FieldElement(self.field.base, self.field.norm(self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __int__(self) -> int:
        return self.field.to_int(self.coeffs)

    def __repr__(self) -> str:
        return f"{list(self.coeffs)}@GF({self.field.base.q}^{self.field.t})"


def norm(x: ExtFieldElement) -> FieldElement:
    return x.norm()


def ext_pow(x: ExtFieldElement, k: int) -> ExtFieldElement:
    return x ** k
