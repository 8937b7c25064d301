"""Pohlig-Hellman for absolute distances in the f-representation group.

Given a generator of known order (or a known multiple of it) together with
that number's factorization, ``solve_distance`` returns n with n * gen = target.
With a distance-one generator n is the absolute distance of the target. The
solver never factors anything and never computes a group inverse: every
subtraction is rewritten as multiplication by (p^l - 1).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from sympy import isprime

from .errors import BadModuli, BadOrder, InvalidInput, NotAMultiple, NotInSubgroup
from .frep_group import FRep, FRepGroup, OpCostLedger


@dataclass(frozen=True)
class Factorization:
    """prod p_i^e_i with distinct certified primes in increasing order."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(p), int(e)) for p, e in self.pairs)
        primes = [p for p, _ in pairs]
        if primes != sorted(set(primes)):
            raise InvalidInput("primes must be distinct and increasing")
        for p, e in pairs:
            if e < 1:
                raise InvalidInput(f"exponent of {p} must be positive")
            if not isprime(p):
                raise InvalidInput(f"{p} is not prime")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_dict(cls, exps: dict[int, int]) -> Factorization:
        return cls(tuple(sorted((p, e) for p, e in exps.items() if e)))

    @classmethod
    def from_json(cls, data) -> Factorization:
        try:
            return cls(tuple((p, e) for p, e in data))
        except (TypeError, ValueError) as exc:
            raise InvalidInput(f"bad factorization JSON: {exc}") from exc

    def to_json(self) -> list[list[int]]:
        return [[p, e] for p, e in self.pairs]

    def value(self) -> int:
        return math.prod(p**e for p, e in self.pairs)

    def __mul__(self, other: Factorization) -> Factorization:
        exps = dict(self.pairs)
        for p, e in other.pairs:
            exps[p] = exps.get(p, 0) + e
        return Factorization.from_dict(exps)


@dataclass(frozen=True)
class DlogInstance:
    generator: FRep
    target: FRep
    modulus_factorization: Factorization


@dataclass
class PrimeReport:
    p: int
    e: int
    digits: list[int]
    residue: int
    group_ops: int
    bsgs_ops: list[int]
    e_order: int = 0  # exponent of p in the order of the generator

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "e_order": self.e_order, "digits": self.digits,
                "residue": self.residue, "group_ops": self.group_ops, "bsgs_ops": self.bsgs_ops}


@dataclass
class SolveReport:
    n: int
    order: int
    per_prime: list[PrimeReport]
    ledger: OpCostLedger = field(default_factory=OpCostLedger)

    def to_json(self) -> dict:
        return {"n": self.n, "order": self.order, "group_ops": self.ledger.snapshot(),
                "per_prime": [r.to_json() for r in self.per_prime]}


def bsgs_prime(group: FRepGroup, base: FRep, target: FRep, p: int, check: bool = True) -> int:
    """n' in [0, p) with n' * base = target, where p * base = identity.

    Baby table j * base for j < m = ceil(sqrt p); giant walk target + i * (m * base)
    for i <= m. A hit gives n' = j - i*m mod p. At most 2m - 1 group operations,
    plus the order check when ``check`` is set.
    """
    if check and not group.is_identity(group.scalar_mul(p, base)):
        raise BadOrder(f"base does not have order dividing {p}")
    if group.is_identity(target):
        return 0
    m = math.isqrt(p - 1) + 1
    table = {group.identity(): 0}
    cur = base
    for j in range(1, m):
        table.setdefault(cur, j)
        if j + 1 < m:
            cur = group.op(cur, base)
    stride = group.op(cur, base) if m > 1 else base  # m * base
    gamma = target
    for i in range(m + 1):
        j = table.get(gamma)
        if j is not None:
            return (j - i * m) % p
        if i < m:
            gamma = group.op(gamma, stride)
    raise NotInSubgroup(p)


def ph_prime_power(group: FRepGroup, gen: FRep, target: FRep, p: int, e: int,
                   multiple: int, report: PrimeReport | None = None) -> int:
    """n mod p^e by lifting one base-p digit at a time.

    ``multiple`` is any integer with multiple * gen = identity, divisible by p^e.
    The p-part of the order of gen may be smaller than p^e; its true exponent
    is found on the way (multiplying by p until the identity appears) and the
    digits above it are zero.
    """
    if multiple % p**e:
        raise InvalidInput(f"{p}^{e} does not divide {multiple}")
    cof = multiple // p**e
    # hs[k] = p^k * h with h = cof * gen; the first identity marks the true exponent
    hs = [group.scalar_mul(cof, gen)]
    while not group.is_identity(hs[-1]):
        if len(hs) > e:
            raise NotAMultiple(f"{multiple} * generator is not the identity")
        hs.append(group.scalar_mul(p, hs[-1]))
    e_true = len(hs) - 1
    ts = [group.scalar_mul(cof, target)]
    for _ in range(e_true - 1):
        ts.append(group.scalar_mul(p, ts[-1]))
    if report is not None:
        report.e_order = e_true
    if e_true == 0:
        if not group.is_identity(ts[0]):
            raise NotInSubgroup(p)
        if report is not None:
            report.digits.extend([0] * e)
        return 0
    base = hs[e_true - 1]  # order exactly p
    n = 0
    for ell in range(1, e_true + 1):
        pl = p**ell
        g_l, rhs = hs[e_true - ell], ts[e_true - ell]
        if n:
            # + (n mod p^(l-1)) * (p^l - 1) * g_l; g_l has order dividing p^l
            rhs = group.op(rhs, group.scalar_mul(n * (pl - 1) % pl, g_l))
        before = group.ledger.gs
        digit = bsgs_prime(group, base, rhs, p, check=False)
        if report is not None:
            report.digits.append(digit)
            report.bsgs_ops.append(group.ledger.gs - before)
        n += digit * p ** (ell - 1)
    if report is not None:
        report.digits.extend([0] * (e - e_true))
    return n


def crt_combine(residues) -> tuple[int, int]:
    """Combine [(n_i, m_i)] with pairwise coprime m_i into (n, prod m_i)."""
    n, m = 0, 1
    for r, mod in residues:
        if mod < 1:
            raise BadModuli(f"modulus {mod} must be positive")
        if math.gcd(m, mod) != 1:
            raise BadModuli(f"{mod} is not coprime to {m}")
        # n + m * k = r (mod mod)
        k = (r - n) * pow(m, -1, mod) % mod if mod > 1 else 0
        n, m = n + m * k, m * mod
    return n % m, m


def _branch(group: FRepGroup, gen: FRep, target: FRep, p: int, e: int, modulus: int):
    sub = group.with_ledger()
    report = PrimeReport(p, e, [], 0, 0, [])
    report.residue = ph_prime_power(sub, gen, target, p, e, modulus, report)
    report.group_ops = sub.ledger.gs
    return report, sub.ledger


def solve_distance(group: FRepGroup, inst: DlogInstance, workers: int | None = None) -> SolveReport:
    """Solve n * generator = target; n is reduced modulo the exact order of the generator.

    Per-prime branches are independent; with ``workers`` > 1 they run in a
    thread pool, each with its own ledger. Raises NotInSubgroup (with the
    failing prime, or 0 if only the final check failed) when the target is
    outside the generated subgroup.
    """
    gen, target = inst.generator, inst.target
    modulus = inst.modulus_factorization.value()
    # a non-multiple is detected per prime in ph_prime_power
    if modulus == 1 and not group.is_identity(gen):
        raise NotAMultiple("1 * generator is not the identity")
    pairs = inst.modulus_factorization.pairs
    if workers and workers > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda pe: _branch(group, gen, target, *pe, modulus), pairs))
    else:
        results = [_branch(group, gen, target, p, e, modulus) for p, e in pairs]
    total = OpCostLedger()
    for _, ledger in results:
        total.merge(ledger)
    reports = [r for r, _ in results]
    # moduli are the p-parts of the exact order, so n lands in [0, order)
    n, order = crt_combine([(r.residue, r.p**r.e_order) for r in reports])
    # the digit equations can all be solvable for a target outside <gen>
    check = group.with_ledger()
    ok = check.scalar_mul(n, gen) == target
    total.merge(check.ledger)
    group.ledger.merge(total)
    if not ok:
        raise NotInSubgroup(0, "target not in the subgroup generated by the generator")
    return SolveReport(n, order, reports, total)


def trim_multiple(group: FRepGroup, multiple: Factorization, gen: FRep) -> Factorization:
    """Reduce a known multiple of the order of ``gen`` to the exact order."""
    value = multiple.value()
    if not group.is_identity(group.scalar_mul(value, gen)):
        raise NotAMultiple(f"{value} * generator is not the identity")
    exps = dict(multiple.pairs)
    for p in list(exps):
        while exps[p] and group.is_identity(group.scalar_mul(value // p, gen)):
            value //= p
            exps[p] -= 1
    return Factorization.from_dict(exps)
