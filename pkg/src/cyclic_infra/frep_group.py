"""The cyclic group of integer f-representations over any backend.

An f-representation (x, f) stands for the point d(x) + f of Z/RZ; it is valid
when no infrastructure point lies in (d(x), d(x) + f], i.e. f is smaller than
the baby-step gap leaving x. The group law is a giant step followed by a short
baby-step normalization, so the group can be used without ever knowing R or
any absolute distance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BackendMismatch, FTooLarge, InvalidInput
from .infra_core import InfraPoint, Infrastructure

DEFAULT_F_CAP = 2**20


@dataclass(frozen=True)
class FRep:
    point: InfraPoint
    f: int


@dataclass
class OpCostLedger:
    """Operation counters; ``gs`` equals the number of group operations."""

    gs: int = 0
    bs: int = 0
    bs_inv: int = 0
    last: tuple[int, int, int] = field(default=(0, 0, 0))

    def snapshot(self) -> dict:
        return {"gs": self.gs, "bs": self.bs, "bs_inv": self.bs_inv}

    def merge(self, other: OpCostLedger) -> None:
        self.gs += other.gs
        self.bs += other.bs
        self.bs_inv += other.bs_inv

    def cost_of_last_op(self) -> tuple[int, int, int]:
        return self.last


def cost_of_last_op(ledger: OpCostLedger) -> tuple[int, int, int]:
    return ledger.cost_of_last_op()


class FRepGroup:
    """(fRep_Z(X, d), o) on top of ``backend``.

    Every call to ``op`` performs exactly one giant step and is recorded in
    ``self.ledger``, together with the baby steps spent on normalization.
    """

    def __init__(self, backend: Infrastructure, ledger: OpCostLedger | None = None,
                 f_cap: int = DEFAULT_F_CAP):
        self.backend = backend
        self.ledger = ledger if ledger is not None else OpCostLedger()
        self.f_cap = f_cap
        self._last_bs = (0, 0)

    def with_ledger(self, ledger: OpCostLedger | None = None) -> FRepGroup:
        """Same group, private counters (for independent workers)."""
        return FRepGroup(self.backend, ledger or OpCostLedger(), self.f_cap)

    # -- elements --
    def identity(self) -> FRep:
        return FRep(self.backend.identity_point(), 0)

    def is_identity(self, a: FRep) -> bool:
        return a.f == 0 and self.backend.is_identity(a.point)

    def element(self, x: InfraPoint, f: int = 0) -> FRep:
        """Checked constructor: (x, f) must already be an f-representation."""
        if f < 0 or f >= self.backend.bs(x)[1]:
            raise InvalidInput(f"({x!r}, {f}) is not an f-representation")
        return FRep(x, f)

    def unit(self) -> FRep:
        """An element of distance 1, i.e. (identity, 1) normalized."""
        return self.normalize(self.backend.identity_point(), 1, count=False)

    def to_json(self, a: FRep) -> dict:
        return {"point": self.backend.point_to_json(a.point), "f": a.f}

    def from_json(self, data: dict) -> FRep:
        try:
            x = self.backend.point_from_json(data["point"])
            f = int(data.get("f", 0))
        except (KeyError, TypeError, AttributeError) as exc:
            raise InvalidInput(f"bad f-representation JSON: {exc}") from exc
        return self.element(x, f)

    # -- arithmetic --
    def normalize(self, x: InfraPoint, f: int, count: bool = True) -> FRep:
        """The unique f-representation at distance d(x) + f."""
        if abs(f) > self.f_cap:
            raise FTooLarge(f"|f| = {abs(f)} exceeds cap {self.f_cap}")
        bk = self.backend
        n_bs = n_inv = 0
        if f < 0:
            while f < 0:
                x, delta = bk.bs_inv(x)
                n_inv += 1
                f += delta
            # f < delta now, so (x, f) is already an f-representation
        else:
            # (x, 0) is always an f-representation
            while f:
                y, delta = bk.bs(x)
                n_bs += 1
                if delta > f:
                    break
                x, f = y, f - delta
        if count:
            self.ledger.bs += n_bs
            self.ledger.bs_inv += n_inv
            self._last_bs = (n_bs, n_inv)
        return FRep(x, f)

    def op(self, a: FRep, b: FRep) -> FRep:
        if a.point.tag != self.backend.tag or b.point.tag != self.backend.tag:
            raise BackendMismatch("f-representations from a different backend")
        z, delta = self.backend.gs(a.point, b.point)
        self.ledger.gs += 1
        out = self.normalize(z, a.f + b.f - delta)
        self.ledger.last = (1, *self._last_bs)
        return out

    def scalar_mul(self, n: int, a: FRep) -> FRep:
        """n * a by left-to-right double-and-add."""
        if n < 0:
            raise InvalidInput("scalar must be nonnegative")
        if n == 0:
            return self.identity()
        acc = a
        for bit in bin(n)[3:]:
            acc = self.op(acc, acc)
            if bit == "1":
                acc = self.op(acc, a)
        return acc

    def inverse(self, a: FRep, R: int) -> FRep:
        """-a, available only when the circumference R is known."""
        return self.scalar_mul(R - 1, a)
