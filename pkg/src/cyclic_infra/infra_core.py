"""Discrete cyclic infrastructures: the backend contract, a table backend and
an axiom validator.

A backend only has to provide five operations: ``identity_point``, ``bs``,
``bs_inv``, ``gs`` and ``is_identity``. Steps report *relative* distances;
absolute distances and the circumference are deliberately not part of the
contract. ``enumerate_cycle`` walks baby steps once around the circle and
returns a ``TableInfra``, which is the brute-force oracle for everything else.
"""

from __future__ import annotations

import hashlib
import os
import random
from abc import ABC, abstractmethod
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Any, Hashable

from .errors import BackendMismatch, CycleTooLong, InfraError, InvalidInput

DEFAULT_ENUM_CAP = 10**6
ENUM_CAP_ENV = "CYCLIC_INFRA_ENUM_CAP"


@dataclass(frozen=True)
class InfraPoint:
    """A point x of some backend; ``tag`` names the backend, ``payload`` is opaque."""

    tag: str
    payload: Hashable


@dataclass(frozen=True)
class BackendStats:
    d_min: int
    d_max: int


class Infrastructure(ABC):
    """Abstract discrete cyclic infrastructure."""

    tag: str

    @abstractmethod
    def identity_point(self) -> InfraPoint: ...

    @abstractmethod
    def bs(self, x: InfraPoint) -> tuple[InfraPoint, int]:
        """Baby step: the next point on the circle and the (positive) gap to it."""

    @abstractmethod
    def bs_inv(self, x: InfraPoint) -> tuple[InfraPoint, int]:
        """Inverse baby step: the previous point and the (positive) gap from it."""

    @abstractmethod
    def gs(self, x: InfraPoint, y: InfraPoint) -> tuple[InfraPoint, int]:
        """Giant step: first point z at-or-after d(x)+d(y), plus d(z)-d(x)-d(y) >= 0."""

    def is_identity(self, x: InfraPoint) -> bool:
        return x == self.identity_point()

    @abstractmethod
    def point_to_json(self, x: InfraPoint) -> Any: ...

    @abstractmethod
    def point_from_json(self, data: Any) -> InfraPoint: ...

    def _own(self, *points: InfraPoint) -> None:
        for x in points:
            if not isinstance(x, InfraPoint) or x.tag != self.tag:
                raise BackendMismatch(f"point {x!r} does not belong to backend {self.tag}")


@dataclass(frozen=True, eq=False)
class TableInfra(Infrastructure):
    """Fully explicit infrastructure given by R and the sorted set d(X).

    Points are labelled by their distance. When produced by ``enumerate_cycle``
    the table also carries ``points``, the enumerated backend's points aligned
    with ``distances``; it then serves as the distance oracle for that backend.
    """

    R: int
    distances: tuple[int, ...]
    points: tuple[InfraPoint, ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        R, ds = self.R, tuple(int(d) for d in self.distances)
        if not isinstance(R, int) or R < 2:
            raise InvalidInput(f"circumference must be an integer >= 2, got {R!r}")
        if len(ds) < 2:
            raise InvalidInput("an infrastructure needs at least two points")
        if len(set(ds)) != len(ds):
            raise InvalidInput("distance map is not injective (duplicate distance)")
        if list(ds) != sorted(ds):
            raise InvalidInput("distances must be strictly increasing")
        if ds[0] != 0 or ds[-1] >= R:
            raise InvalidInput("distances must lie in [0, R) and contain 0")
        if self.points is not None and len(self.points) != len(ds):
            raise InvalidInput("points and distances differ in length")
        object.__setattr__(self, "distances", ds)
        digest = hashlib.sha1(repr((R, ds)).encode()).hexdigest()[:12]
        object.__setattr__(self, "tag", f"table:{digest}")
        object.__setattr__(self, "_index", {d: i for i, d in enumerate(ds)})
        if self.points is not None:
            object.__setattr__(
                self, "_dist_of", {x: d for x, d in zip(self.points, ds)}
            )

    def __eq__(self, other):
        if not isinstance(other, TableInfra):
            return NotImplemented
        return self.R == other.R and self.distances == other.distances

    def __hash__(self):
        return hash((self.R, self.distances))

    # -- JSON --
    @classmethod
    def from_json(cls, data: dict) -> TableInfra:
        try:
            return cls(int(data["R"]), tuple(data["distances"]))
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"bad table JSON: {exc}") from exc

    def to_json(self) -> dict:
        return {"R": self.R, "distances": list(self.distances)}

    def point_to_json(self, x: InfraPoint) -> int:
        self._own(x)
        return x.payload

    def point_from_json(self, data) -> InfraPoint:
        if not isinstance(data, int) or data not in self._index:
            raise InvalidInput(f"{data!r} is not a distance of this table")
        return self.point(data)

    # -- contract --
    def point(self, dist: int) -> InfraPoint:
        """The point at distance ``dist``."""
        if dist not in self._index:
            raise InvalidInput(f"no point at distance {dist}")
        return InfraPoint(self.tag, dist)

    def identity_point(self) -> InfraPoint:
        return InfraPoint(self.tag, 0)

    def _idx(self, x: InfraPoint) -> int:
        self._own(x)
        try:
            return self._index[x.payload]
        except KeyError:
            raise BackendMismatch(f"{x!r} is not a point of this table") from None

    def bs(self, x):
        i = self._idx(x)
        nxt = self.distances[(i + 1) % len(self.distances)]
        return InfraPoint(self.tag, nxt), (nxt - x.payload) % self.R

    def bs_inv(self, x):
        i = self._idx(x)
        prv = self.distances[i - 1]
        return InfraPoint(self.tag, prv), (x.payload - prv) % self.R

    def gs(self, x, y):
        self._idx(x), self._idx(y)
        s = (x.payload + y.payload) % self.R
        i = bisect_left(self.distances, s)
        z = self.distances[i] if i < len(self.distances) else 0
        return InfraPoint(self.tag, z), (z - s) % self.R

    def is_identity(self, x):
        self._own(x)
        return x.payload == 0

    # -- oracle helpers --
    def stats(self) -> BackendStats:
        gaps = self.gaps()
        return BackendStats(min(gaps), max(gaps))

    def gaps(self) -> list[int]:
        ds = self.distances
        return [ds[i + 1] - ds[i] for i in range(len(ds) - 1)] + [self.R - ds[-1]]

    def distance(self, x: InfraPoint) -> int:
        """Absolute distance of a point of the enumerated backend (oracle only)."""
        if self.points is None:
            return self.distances[self._idx(x)]
        try:
            return self._dist_of[x]
        except KeyError:
            raise BackendMismatch(f"{x!r} is not in this enumeration") from None

    def enumerated_points(self) -> tuple[InfraPoint, ...]:
        if self.points is not None:
            return self.points
        return tuple(InfraPoint(self.tag, d) for d in self.distances)


def full_cyclic_table(R: int) -> TableInfra:
    """Z/RZ viewed as an infrastructure: every distance is a point."""
    return TableInfra(R, tuple(range(R)))


def random_table(rng: random.Random, R_max: int = 1000, R_min: int = 2) -> TableInfra:
    R = rng.randint(R_min, R_max)
    k = rng.randint(1, R - 1)
    return TableInfra(R, tuple([0] + sorted(rng.sample(range(1, R), k))))


def enumeration_cap() -> int:
    return int(os.environ.get(ENUM_CAP_ENV, DEFAULT_ENUM_CAP))


def enumerate_cycle(backend: Infrastructure, cap: int | None = None) -> TableInfra:
    """Walk baby steps from the identity until it recurs.

    The accumulated deltas give R and the absolute distance of every point.
    """
    cap = enumeration_cap() if cap is None else cap
    x = backend.identity_point()
    points, dists = [x], [0]
    seen = {x}
    total = 0
    while True:
        x, delta = backend.bs(x)
        if delta <= 0:
            raise InfraError(f"baby step returned non-positive delta {delta}")
        total += delta
        if backend.is_identity(x):
            break
        if x in seen:
            raise InfraError("baby-step walk revisited a point before the identity")
        if len(points) >= cap:
            raise CycleTooLong(f"more than {cap} points")
        seen.add(x)
        points.append(x)
        dists.append(total)
    return TableInfra(total, tuple(dists), tuple(points))


@dataclass
class ValidationReport:
    passed: bool
    points: int
    pairs_checked: int
    exhaustive: bool
    counterexample: dict | None = None

    def to_json(self) -> dict:
        out = {
            "pass": self.passed,
            "points": self.points,
            "pairs_checked": self.pairs_checked,
            "exhaustive": self.exhaustive,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def validate_axioms(
    backend: Infrastructure,
    enumeration: TableInfra,
    *,
    exhaustive_limit: int = 10**6,
    samples: int = 10**4,
    seed: int = 0,
) -> ValidationReport:
    """Check the baby-step and giant-step axioms of ``backend`` against its enumeration."""
    R = enumeration.R
    pts = enumeration.enumerated_points()
    ds = enumeration.distances
    n = len(pts)
    exhaustive = n * n <= exhaustive_limit

    def fail(check, **info):
        return ValidationReport(False, n, pairs, exhaustive, {"check": check, **info})

    pairs = 0
    if len(set(pts)) != n:
        return fail("injective")
    if pts[0] != backend.identity_point():
        return fail("identity", point=repr(pts[0]))
    for i, x in enumerate(pts):
        if backend.is_identity(x) != (i == 0):
            return fail("is_identity", distance=ds[i])
        y, delta = backend.bs(x)
        j = (i + 1) % n
        gap = (ds[j] - ds[i]) % R
        if y == x:
            return fail("bs_fixed_point", distance=ds[i])
        if y != pts[j] or delta != gap:
            return fail("bs_arc", distance=ds[i], delta=delta, expected=gap)
        w, delta_inv = backend.bs_inv(y)
        if w != x or delta_inv != gap:
            return fail("bs_inv", distance=ds[j], delta=delta_inv, expected=gap)

    if exhaustive:
        pair_iter = ((i, j) for i in range(n) for j in range(n))
    else:
        rng = random.Random(seed)
        pair_iter = ((rng.randrange(n), rng.randrange(n)) for _ in range(samples))
    for i, j in pair_iter:
        pairs += 1
        s = (ds[i] + ds[j]) % R
        k = bisect_left(ds, s)
        k = k if k < n else 0
        expected = (ds[k] - s) % R
        z, delta = backend.gs(pts[i], pts[j])
        if z != pts[k] or delta != expected:
            return fail(
                "gs",
                x=ds[i],
                y=ds[j],
                got=enumeration.distance(z) if z in set(pts) else None,
                delta=delta,
                expected=ds[k],
                expected_delta=expected,
            )
    return ValidationReport(True, n, pairs, exhaustive)
