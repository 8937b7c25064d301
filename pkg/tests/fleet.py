"""Seeded backend fleet shared by the acceptance suite and the slower unit tests.

Every member comes with its enumeration, which is the distance oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from cyclic_infra import (
    FRep,
    FRepGroup,
    Infrastructure,
    RealQuadraticCurve,
    TableInfra,
    enumerate_cycle,
    full_cyclic_table,
    random_curve,
    random_table,
)

TABLE_SEED = 7
N_RANDOM_TABLES = 50
CURVE_FIELDS = (3, 5, 7, 13)
CURVE_GENERA = (1, 2)
CURVES_PER_CELL = 3


@dataclass(frozen=True)
class Member:
    name: str
    backend: Infrastructure
    enum: TableInfra

    @property
    def R(self) -> int:
        return self.enum.R

    @property
    def is_curve(self) -> bool:
        return isinstance(self.backend, RealQuadraticCurve)

    def dist(self, a: FRep) -> int:
        return (self.enum.distance(a.point) + a.f) % self.R

    def all_freps(self) -> list[FRep]:
        """Every f-representation, listed in order of distance."""
        out = []
        ds = self.enum.distances
        for i, x in enumerate(self.enum.enumerated_points()):
            nxt = ds[i + 1] if i + 1 < len(ds) else self.R
            out.extend(FRep(x, f) for f in range(nxt - ds[i]))
        return out

    def group(self) -> FRepGroup:
        return FRepGroup(self.backend)


def _member(name: str, backend: Infrastructure) -> Member:
    return Member(name, backend, enumerate_cycle(backend))


@lru_cache(maxsize=None)
def random_tables() -> tuple[Member, ...]:
    rng = random.Random(TABLE_SEED)
    return tuple(_member(f"table#{i}", random_table(rng)) for i in range(N_RANDOM_TABLES))


@lru_cache(maxsize=None)
def cyclic_tables() -> tuple[Member, ...]:
    return tuple(_member(f"Z/{R}", full_cyclic_table(R)) for R in range(2, 51))


@lru_cache(maxsize=None)
def curves() -> tuple[Member, ...]:
    out = []
    for q in CURVE_FIELDS:
        for g in CURVE_GENERA:
            for s in range(CURVES_PER_CELL):
                c = random_curve(random.Random(1000 * q + 10 * g + s), q, g)
                out.append(_member(f"q={q},g={g},D={list(c.D)}", c))
    return tuple(out)


def everything() -> tuple[Member, ...]:
    return random_tables() + cyclic_tables() + curves()


def small(limit: int = 500) -> tuple[Member, ...]:
    return tuple(m for m in everything() if m.R <= limit)


# criterion -> (passed, detail); filled by test_acceptance, printed by conftest
RESULTS: dict[int, tuple[bool, str]] = {}


def record(criterion: int, passed: bool, detail: str) -> str:
    RESULTS[criterion] = (passed, detail)
    line = f"criterion {criterion:2d}: {'PASS' if passed else 'FAIL'}  {detail}"
    print(line)
    return line
