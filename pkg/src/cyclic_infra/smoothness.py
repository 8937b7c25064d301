"""Deciding whether the circumference R is B-smooth without knowing R.

With an element of distance one, an upper bound R' >= R and an identity test,
R is B-smooth exactly when m * gen is the identity, where m is the product of
the largest powers p^e <= R' over all primes p <= B.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from sympy import primerange

from .errors import InvalidInput
from .frep_group import FRep, FRepGroup

MAX_B = 10**6


def hasse_weil_bound(q: int, g: int, deg_p1: int = 1, deg_p2: int = 1) -> int:
    """ceil((deg p2 / gcd(deg p1, deg p2)) * (1 + sqrt q)^(2g)), exactly.

    (1 + sqrt q)^2g = A + B sqrt q with integers A, B is expanded first, so only
    one integer square root is needed: ceil(B sqrt q) = isqrt(B^2 q - 1) + 1.
    """
    if q < 2 or g < 1:
        raise InvalidInput("need q >= 2 and g >= 1")
    k = deg_p2 // math.gcd(deg_p1, deg_p2)
    A, B = 1, 0  # A + B sqrt q
    for _ in range(2 * g):
        A, B = A + B * q, A + B
    A, B = k * A, k * B
    if B == 0:
        return A
    return A + math.isqrt(B * B * q - 1) + 1


@dataclass(frozen=True)
class SmoothExponent:
    primes: tuple[int, ...]
    exponents: tuple[int, ...]
    m: int


@dataclass(frozen=True)
class SmoothnessQuery:
    B: int
    R_upper: int
    gen: FRep

    def __post_init__(self):
        if self.B < 2 or self.R_upper < 2:
            raise InvalidInput("B and R_upper must both be at least 2")


@dataclass
class SmoothVerdict:
    smooth: bool
    B: int
    m: int
    witness: FRep
    group_ops: dict

    @property
    def m_bits(self) -> int:
        return self.m.bit_length()


def build_smooth_exponent(B: int, R_upper: int) -> SmoothExponent:
    if B < 2:
        raise InvalidInput("B must be at least 2")
    if B > MAX_B:
        raise InvalidInput(f"B is capped at {MAX_B}")
    primes, exps = [], []
    m = 1
    for p in primerange(2, B + 1):
        e, pe = 0, 1
        while pe * p <= R_upper:
            pe *= p
            e += 1
        primes.append(p)
        exps.append(e)
        m *= pe
    return SmoothExponent(tuple(primes), tuple(exps), m)


def identity_test(group: FRepGroup, a: FRep) -> bool:
    return group.is_identity(a)


def is_smooth(group: FRepGroup, query: SmoothnessQuery) -> SmoothVerdict:
    """Compute m * gen prime by prime and test for the identity.

    Each prime contributes e consecutive multiplications by p, so the whole
    run costs O(t log R_upper) group operations.
    """
    se = build_smooth_exponent(query.B, query.R_upper)
    start = group.ledger.snapshot()
    acc = query.gen
    for p, e in zip(se.primes, se.exponents):
        for _ in range(e):
            acc = group.scalar_mul(p, acc)
    end = group.ledger.snapshot()
    ops = {k: end[k] - start[k] for k in end}
    return SmoothVerdict(identity_test(group, acc), query.B, se.m, acc, ops)
