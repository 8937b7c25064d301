"""Infrastructure of a real quadratic function field F_p(x, y), y^2 = D(x).

deg D = 2g + 2 and lc(D) is a square, so the degree valuation splits into two
infinite places of degree one. Reduced principal ideals are stored as
``(u, v)`` with ``u`` monic, ``deg v < deg u`` and ``u | D - v^2``; the ideal is
the F_p[x]-module [u, v + y]. Baby steps are continued-fraction steps on
(P + y)/Q. With d = floor(sqrt(D)), the representative P used in a step is the
one with deg(P - d) < deg u, and the step from an ideal with norm u moves the
distance forward by g + 1 - deg u.

Distances are measured at the infinite place where y ~ -d, which makes the
continued-fraction direction the direction of increasing distance.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import CurveTooLarge, InvalidInput, NotReduced, NotRealModel, NotSquarefree, TrivialInfrastructure
from .ff_poly import (
    FieldPoly,
    Poly,
    check_modulus,
    deg,
    padd,
    pdivmod,
    peval,
    pgcd,
    pderiv,
    pmod,
    pmonic,
    pmul,
    pneg,
    psqrt_floor,
    psub,
    pxgcd,
    trim,
)
from .infra_core import InfraPoint, Infrastructure, enumerate_cycle


@dataclass(frozen=True)
class CurveParams:
    p: int
    D: Poly

    @property
    def genus(self) -> int:
        return (len(self.D) - 1) // 2 - 1

    def to_json(self) -> dict:
        return {"p": self.p, "D": list(self.D)}


@dataclass(frozen=True)
class ReducedIdeal:
    u: FieldPoly
    v: FieldPoly

    def to_json(self) -> dict:
        return {"u": self.u.to_json(), "v": self.v.to_json()}


@dataclass(frozen=True)
class RegulatorInfo:
    R: int
    h: int
    pic0_order: int
    l_poly: tuple[int, ...]

    def to_json(self) -> dict:
        return {"R": self.R, "h": self.h, "pic0_order": self.pic0_order, "l_poly": list(self.l_poly)}


class RealQuadraticCurve(Infrastructure):
    """Backend over the reduced principal ideals of F_p(x, y), y^2 = D(x)."""

    def __init__(self, p: int, D):
        check_modulus(p)
        D = trim([int(c) % p for c in D])
        if len(D) - 1 < 4:
            raise NotRealModel("deg D must be even and at least 4")
        self.d = psqrt_floor(D, p)  # raises NotRealModel
        if len(pgcd(D, pderiv(D, p), p)) != 1:
            raise NotSquarefree("D is not squarefree")
        self.p = p
        self.D = D
        self.params = CurveParams(p, D)
        self.g = (len(D) - 1) // 2 - 1
        self.tag = f"rqff:{p}:{','.join(map(str, D))}"
        # degree of y + P at the usual place when P = -d, i.e. of y - d
        self._deg_eps = deg(psub(D, pmul(self.d, self.d, p), p)) - (self.g + 1)
        if self._deg_eps <= -(self.g + 1):
            # D - d^2 constant: the identity is the only reduced principal ideal
            raise TrivialInfrastructure("the infrastructure has a single point")
        self._bs_cache: dict = {}
        self._bs_inv_cache: dict = {}
        self._identity = InfraPoint(self.tag, ((1,), ()))

    def __repr__(self):
        return f"RealQuadraticCurve(p={self.p}, D={list(self.D)})"

    # -- JSON --
    def to_json(self) -> dict:
        return self.params.to_json()

    @classmethod
    def from_json(cls, data: dict) -> RealQuadraticCurve:
        try:
            return cls(int(data["p"]), list(data["D"]))
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"bad curve JSON: {exc}") from exc

    def point_to_json(self, x):
        self._own(x)
        u, v = x.payload
        return {"u": list(u), "v": list(v)}

    def point_from_json(self, data):
        try:
            u = trim([int(c) % self.p for c in data["u"]])
            v = trim([int(c) % self.p for c in data["v"]])
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"bad ideal JSON: {exc}") from exc
        return self.ideal_point(u, v)

    def ideal_point(self, u, v) -> InfraPoint:
        """Validate (u, v) as a reduced ideal and wrap it as a point."""
        p = self.p
        u, v = trim(list(u)), trim(list(v))
        if not u or u[-1] != 1:
            raise NotReduced("u must be monic")
        v = pmod(v, u, p)
        if pmod(psub(self.D, pmul(v, v, p), p), u, p):
            raise NotReduced("u does not divide D - v^2")
        if len(u) - 1 > self.g:
            raise NotReduced(f"deg u = {len(u) - 1} exceeds the genus {self.g}")
        return InfraPoint(self.tag, (u, v))

    def as_ideal(self, x: InfraPoint) -> ReducedIdeal:
        self._own(x)
        u, v = x.payload
        return ReducedIdeal(FieldPoly(u, self.p), FieldPoly(v, self.p))

    # -- continued-fraction machinery --
    def _canon_P(self, u: Poly, v: Poly) -> Poly:
        # the representative of v mod u with deg(P - d) < deg u
        p = self.p
        return psub(self.d, pmod(psub(self.d, v, p), u, p), p)

    def _deg_P_plus_y(self, P: Poly) -> int:
        s = padd(P, self.d, self.p)
        return len(s) - 1 if s else self._deg_eps

    def _cf_step(self, Q: Poly, P: Poly) -> tuple[Poly, Poly, int]:
        """One continued-fraction step on (P + y)/Q; returns (Q', P', delta)."""
        p = self.p
        a = pdivmod(padd(P, self.d, p), Q, p)[0]
        P1 = psub(pmul(a, Q, p), P, p)
        Q1, r = pdivmod(psub(self.D, pmul(P1, P1, p), p), Q, p)
        assert not r, "Q does not divide D - P^2"
        return Q1, P1, self._deg_P_plus_y(P1) - (len(Q) - 1)

    def _wrap(self, Q: Poly, P: Poly) -> InfraPoint:
        u = pmonic(Q, self.p)
        return InfraPoint(self.tag, (u, pmod(P, u, self.p)))

    # -- contract --
    def identity_point(self):
        return self._identity

    def is_identity(self, x):
        self._own(x)
        return x.payload == ((1,), ())

    def bs(self, x):
        try:
            return self._bs_cache[x]
        except KeyError:
            pass
        self._own(x)
        u, v = x.payload
        if len(u) - 1 > self.g:
            raise NotReduced(f"{x!r} is not reduced")
        Q1, P1, _ = self._cf_step(u, self._canon_P(u, v))
        out = self._wrap(Q1, P1), self.g + 1 - (len(u) - 1)
        self._bs_cache[x] = out
        return out

    def bs_inv(self, x):
        try:
            return self._bs_inv_cache[x]
        except KeyError:
            pass
        self._own(x)
        p = self.p
        u, v = x.payload
        if len(u) - 1 > self.g:
            raise NotReduced(f"{x!r} is not reduced")
        P = self._canon_P(u, v)
        Q0, r = pdivmod(psub(self.D, pmul(P, P, p), p), u, p)
        assert not r
        u0 = pmonic(Q0, p)
        out = InfraPoint(self.tag, (u0, pmod(pneg(P, p), u0, p))), self.g + 1 - (len(u0) - 1)
        self._bs_inv_cache[x] = out
        return out

    def compose(self, u1: Poly, v1: Poly, u2: Poly, v2: Poly) -> tuple[Poly, Poly, int]:
        """Product of primitive ideals [u1, v1+y][u2, v2+y] = s * [u3, v3+y].

        Returns (u3, v3, deg s).
        """
        p = self.p
        s1, a1, b1 = pxgcd(u1, u2, p)
        w = padd(v1, v2, p)
        s, c1, c2 = pxgcd(s1, w, p)
        h1, h2, h3 = pmul(c1, a1, p), pmul(c1, b1, p), c2
        # s = h1 u1 + h2 u2 + h3 (v1 + v2)
        u3 = pdivmod(pmul(u1, u2, p), pmul(s, s, p), p)[0]
        num = padd(
            padd(pmul(pmul(h1, u1, p), v2, p), pmul(pmul(h2, u2, p), v1, p), p),
            pmul(h3, padd(pmul(v1, v2, p), self.D, p), p),
            p,
        )
        v3 = pdivmod(num, s, p)[0]
        v3 = pmod(v3, u3, p)
        return u3, v3, len(s) - 1

    def gs(self, x, y):
        self._own(x, y)
        (u1, v1), (u2, v2) = x.payload, y.payload
        u3, v3, deg_s = self.compose(u1, v1, u2, v2)
        # distance of [1, (v3 + y)/u3] relative to d(x) + d(y)
        rel = -deg_s
        Q, P = u3, v3
        while len(Q) - 1 > self.g:
            Q, P, step = self._cf_step(Q, P)
            rel += step
        z = self._wrap(Q, P)
        if rel < 0:
            while rel < 0:
                z, step = self.bs(z)
                rel += step
            return z, rel
        while True:
            w, step = self.bs_inv(z)
            if rel - step < 0:
                return z, rel
            z, rel = w, rel - step


def make_curve(p: int, D) -> RealQuadraticCurve:
    """Build the backend for y^2 = D(x) over F_p; D given lowest degree first."""
    if isinstance(D, FieldPoly):
        D = D.coeffs
    return RealQuadraticCurve(p, D)


def _as_point(curve: RealQuadraticCurve, a) -> InfraPoint:
    if isinstance(a, ReducedIdeal):
        return curve.ideal_point(a.u.coeffs, a.v.coeffs)
    return a


def _like(curve: RealQuadraticCurve, x: InfraPoint, template):
    return curve.as_ideal(x) if isinstance(template, ReducedIdeal) else x


def rq_baby_step(curve: RealQuadraticCurve, a):
    """Next reduced ideal and the distance gained; accepts a point or a ReducedIdeal."""
    x, delta = curve.bs(_as_point(curve, a))
    return _like(curve, x, a), delta


def rq_inverse_baby_step(curve: RealQuadraticCurve, a):
    x, delta = curve.bs_inv(_as_point(curve, a))
    return _like(curve, x, a), delta


def rq_giant_step(curve: RealQuadraticCurve, a, b):
    x, delta = curve.gs(_as_point(curve, a), _as_point(curve, b))
    return _like(curve, x, a), delta


def random_curve(rng: random.Random, p: int, g: int) -> RealQuadraticCurve:
    """Uniformly sample a valid real model of genus g over F_p."""
    squares = sorted({x * x % p for x in range(1, p)})
    while True:
        D = [rng.randrange(p) for _ in range(2 * g + 2)] + [rng.choice(squares)]
        try:
            return RealQuadraticCurve(p, D)
        except (NotSquarefree, TrivialInfrastructure):
            continue


# -- point counting --------------------------------------------------------


def _irreducible(p: int, k: int) -> Poly:
    """Smallest monic irreducible polynomial of degree k over F_p (k <= 3)."""
    for tail in itertools.product(range(p), repeat=k):
        f = tuple(tail) + (1,)
        if f[0] and all(peval(f, x, p) for x in range(p)):
            return f
    raise AssertionError("unreachable")


def _count_points(D: Poly, p: int, k: int) -> int:
    """Number of points of the smooth model of y^2 = D over F_{p^k}."""
    if k == 1:
        sq = {x * x % p for x in range(p)}
        total = 0
        for x in range(p):
            val = peval(D, x, p)
            total += 1 if val == 0 else (2 if val in sq else 0)
        return total + 2
    f = _irreducible(p, k)
    elems = [trim(list(c)) for c in itertools.product(range(p), repeat=k)]

    def mul(a, b):
        return pmod(pmul(a, b, p), f, p)

    squares = {mul(e, e) for e in elems}
    total = 0
    for x in elems:
        acc = ()
        for c in reversed(D):
            acc = padd(mul(acc, x), (c,) if c else (), p)
        total += 1 if not acc else (2 if acc in squares else 0)
    # lc(D) is a square in F_p, hence two rational points at infinity
    return total + 2


def l_polynomial(curve: RealQuadraticCurve) -> tuple[int, ...]:
    """Coefficients c_0..c_2g of the L-polynomial, from point counts over F_{p^i}, i <= g."""
    p, g = curve.p, curve.g
    if g > 3 or p**g > 10**7:
        raise CurveTooLarge(f"point counting over F_{p}^{g} is not feasible")
    s = [0] + [_count_points(curve.D, p, i) - p**i - 1 for i in range(1, g + 1)]
    c = [1]
    for j in range(1, g + 1):
        acc = sum(s[i] * c[j - i] for i in range(1, j + 1))
        assert acc % j == 0
        c.append(acc // j)
    for j in range(g + 1, 2 * g + 1):
        c.append(p ** (j - g) * c[2 * g - j])
    return tuple(c)


def count_points_zeta(curve: RealQuadraticCurve, R: int | None = None) -> RegulatorInfo:
    """|Pic^0| = L(1) from point counting, split as R * h with R from enumeration."""
    lp = l_polynomial(curve)
    pic0 = sum(lp)
    if R is None:
        R = enumerate_cycle(curve).R
    if pic0 % R:
        raise InvalidInput(f"{R} does not divide L(1) = {pic0}, so it is not the regulator")
    return RegulatorInfo(R, pic0 // R, pic0, lp)

