"""Arithmetic in prime fields F_p and in F_p[x].

Two layers live here. The ``FieldElem`` and ``FieldPoly`` value types are the
public surface; underneath, the underscore-free ``p*`` functions work on plain
tuples of ints (lowest degree first, no trailing zeros) and are what the
infrastructure backends call in their inner loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime
from sympy.ntheory import sqrt_mod

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    InvalidInput,
    ModulusMismatch,
    NotRealModel,
)

NEG_INF = float("-inf")

Poly = tuple  # tuple[int, ...], canonical: no trailing zeros, () is zero


@lru_cache(maxsize=None)
def check_modulus(p: int) -> int:
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise InvalidInput(f"modulus {p!r} is not a prime")
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    return p


# -- tuple kernels ---------------------------------------------------------


def trim(c) -> Poly:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def deg(a: Poly) -> int:
    """Degree of a tuple polynomial; -1 for zero."""
    return len(a) - 1


def padd(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def psub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def pneg(a: Poly, p: int) -> Poly:
    return tuple((-c) % p for c in a)


def pscale(a: Poly, c: int, p: int) -> Poly:
    c %= p
    if not c:
        return ()
    return tuple(x * c % p for x in a)


def pmul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(c % p for c in out)  # leading coeff nonzero over a field


def pdivmod(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    inv = pow(b[-1], -1, p)
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] % p
        if c:
            c = c * inv % p
            q[k] = c
            for j in range(db + 1):
                r[k + j] -= c * b[j]
    return tuple(q), trim([x % p for x in r[:db]])


def pmod(a: Poly, b: Poly, p: int) -> Poly:
    return pdivmod(a, b, p)[1]


def pmonic(a: Poly, p: int) -> Poly:
    if not a or a[-1] == 1:
        return a
    return pscale(a, pow(a[-1], -1, p), p)


def pgcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, pmod(a, b, p)
    return pmonic(a, p)


def pxgcd(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with g = s*a + t*b and g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1, p), p)
        t0, t1 = t1, psub(t0, pmul(q, t1, p), p)
    if not r0:
        return (), (), ()
    inv = pow(r0[-1], -1, p)
    return pscale(r0, inv, p), pscale(s0, inv, p), pscale(t0, inv, p)


def pderiv(a: Poly, p: int) -> Poly:
    return trim([i * c % p for i, c in enumerate(a)][1:])


def peval(a: Poly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def psqrt_floor(D: Poly, p: int) -> Poly:
    """Polynomial part of the Laurent square root of D.

    The leading coefficient of the result is the smaller of the two square
    roots of lc(D), which fixes the choice of sign.
    """
    if not D or (len(D) - 1) % 2:
        raise NotRealModel("D must have even degree")
    roots = sqrt_mod(D[-1], p, all_roots=True)
    if not roots:
        raise NotRealModel(f"leading coefficient {D[-1]} is not a square mod {p}")
    n = (len(D) - 1) // 2
    top = min(roots)
    d = [0] * (n + 1)
    d[n] = top
    inv2top = pow(2 * top, -1, p)
    for k in range(n - 1, -1, -1):
        # coefficient of x^(n+k) in d^2 must match D
        s = sum(d[i] * d[n + k - i] for i in range(k + 1, n))
        d[k] = (D[n + k] - s) * inv2top % p
    return tuple(d)


# -- value types -----------------------------------------------------------


@dataclass(frozen=True)
class FieldElem:
    value: int
    p: int

    def __post_init__(self):
        check_modulus(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.p != self.p:
                raise ModulusMismatch(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElem(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(-self.value, self.p)

    def inv(self) -> FieldElem:
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}")
        return FieldElem(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * FieldElem(o, self.p).inv()

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


@dataclass(frozen=True)
class FieldPoly:
    """Immutable polynomial over F_p, coefficients lowest degree first."""

    coeffs: Poly
    p: int

    def __post_init__(self):
        check_modulus(self.p)
        object.__setattr__(self, "coeffs", trim([int(c) % self.p for c in self.coeffs]))

    @classmethod
    def from_json(cls, data, p: int) -> FieldPoly:
        return cls(tuple(data), p)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @property
    def degree(self):
        """Degree, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: FieldPoly) -> FieldPoly:
        if isinstance(other, int):
            return FieldPoly((other,), self.p)
        if isinstance(other, FieldElem):
            other = FieldPoly((other.value,), other.p)
        if other.p != self.p:
            raise ModulusMismatch(f"F_{self.p}[x] vs F_{other.p}[x]")
        return other

    def __add__(self, other):
        return FieldPoly(padd(self.coeffs, self._check(other).coeffs, self.p), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldPoly(psub(self.coeffs, self._check(other).coeffs, self.p), self.p)

    def __rsub__(self, other):
        return FieldPoly(psub(self._check(other).coeffs, self.coeffs, self.p), self.p)

    def __mul__(self, other):
        return FieldPoly(pmul(self.coeffs, self._check(other).coeffs, self.p), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldPoly(pneg(self.coeffs, self.p), self.p)

    def __divmod__(self, other):
        return poly_divmod(self, self._check(other))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        return peval(self.coeffs, int(x), self.p)

    def monic(self) -> FieldPoly:
        return FieldPoly(pmonic(self.coeffs, self.p), self.p)

    def derivative(self) -> FieldPoly:
        return FieldPoly(pderiv(self.coeffs, self.p), self.p)

    def __repr__(self):
        if not self.coeffs:
            return f"0 (F_{self.p})"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mon)
        return " + ".join(terms) + f" (F_{self.p})"


def poly_divmod(a: FieldPoly, b: FieldPoly) -> tuple[FieldPoly, FieldPoly]:
    if a.p != b.p:
        raise ModulusMismatch(f"F_{a.p}[x] vs F_{b.p}[x]")
    q, r = pdivmod(a.coeffs, b.coeffs, a.p)
    return FieldPoly(q, a.p), FieldPoly(r, a.p)


def poly_gcd(a: FieldPoly, b: FieldPoly) -> FieldPoly:
    """Monic gcd of a and b."""
    if a.p != b.p:
        raise ModulusMismatch(f"F_{a.p}[x] vs F_{b.p}[x]")
    if a.is_zero() and b.is_zero():
        raise InvalidInput("gcd(0, 0) is undefined")
    return FieldPoly(pgcd(a.coeffs, b.coeffs, a.p), a.p)


def floor_sqrt(D: FieldPoly) -> FieldPoly:
    """The polynomial d with deg(D - d^2) < deg d (d = floor of sqrt(D))."""
    return FieldPoly(psqrt_floor(D.coeffs, D.p), D.p)


def is_squarefree(D: FieldPoly) -> bool:
    if D.is_zero():
        return False
    return poly_gcd(D, D.derivative()).degree == 0
