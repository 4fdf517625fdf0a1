"""Totally ordered abelian groups and order-preserving homomorphisms.

The concrete carrier is Z^k under the lexicographic order (first coordinate
most significant); k = 0 is the one-element group. Elements are plain tuples
of ints. :class:`Group` is the small interface that chain-induced groups
(see :mod:`residchain.convert`) implement as well.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import IntEnum
from itertools import product
from typing import Any, Callable, Sequence

from .report import Report

GroupElement = tuple[int, ...]

DEFAULT_RADIUS = 8
DEFAULT_SAMPLES = 500


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class GroupError(ValueError):
    pass


class NoNeighbor(GroupError):
    """The group is not discrete, so covers do not exist."""


class Group:
    """Interface of a totally ordered abelian group."""

    unit: Any

    def contains(self, a) -> bool:
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def leq(self, a, b) -> bool:
        raise NotImplementedError

    def cover(self, a, direction: str = "up"):
        raise NotImplementedError

    @property
    def discrete(self) -> bool:
        raise NotImplementedError

    def sample(self, rng: random.Random, radius: int = DEFAULT_RADIUS):
        raise NotImplementedError

    def window(self, radius: int) -> list:
        raise NotImplementedError

    def elements(self) -> list | None:
        return None

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def cmp(self, a, b) -> Cmp:
        if a == b:
            return Cmp.EQ
        return Cmp.LT if self.leq(a, b) else Cmp.GT


@dataclass(frozen=True)
class OrderedGroup(Group):
    """Z^rank with componentwise addition and lexicographic order."""

    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise GroupError(f"rank must be non-negative, got {self.rank}")

    def __str__(self) -> str:
        return f"Z^{self.rank}"

    @property
    def unit(self) -> GroupElement:
        return (0,) * self.rank

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == self.rank
            and all(isinstance(c, int) and not isinstance(c, bool) for c in a)
        )

    def _own(self, *elems) -> None:
        for a in elems:
            if not self.contains(a):
                raise GroupError(f"{a!r} is not an element of {self} (rank mismatch)")

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self._own(a, b)
        return tuple(x + y for x, y in zip(a, b))

    def inv(self, a: GroupElement) -> GroupElement:
        self._own(a)
        return tuple(-x for x in a)

    def leq(self, a: GroupElement, b: GroupElement) -> bool:
        self._own(a, b)
        return a <= b  # tuple comparison is lexicographic

    def cmp(self, a: GroupElement, b: GroupElement) -> Cmp:
        self._own(a, b)
        return Cmp((a > b) - (a < b))

    @property
    def discrete(self) -> bool:
        return self.rank >= 1

    def cover(self, a: GroupElement, direction: str = "up") -> GroupElement:
        self._own(a)
        if not self.discrete:
            raise NoNeighbor(f"{self} is not discrete: no neighbor of {a!r}")
        if direction not in ("up", "down"):
            raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
        step = 1 if direction == "up" else -1
        return a[:-1] + (a[-1] + step,)

    def sample(self, rng: random.Random, radius: int = DEFAULT_RADIUS) -> GroupElement:
        return tuple(rng.randint(-radius, radius) for _ in range(self.rank))

    def window(self, radius: int) -> list[GroupElement]:
        return [tuple(c) for c in product(range(-radius, radius + 1), repeat=self.rank)]

    def elements(self) -> list[GroupElement] | None:
        return [()] if self.rank == 0 else None


HOM_KINDS = ("trivial", "identity", "truncate", "matrix", "map")
STRUCTURAL_KINDS = ("trivial", "identity", "truncate")


@dataclass(frozen=True, eq=False)
class Homomorphism:
    """An order-preserving group map.

    ``param`` holds the kind-specific data: the number of kept coordinates for
    ``truncate``, the row tuple for ``matrix`` and a callable for ``map``.
    ``map`` homomorphisms also serve as layer maps between chains.
    """

    source: Any
    target: Any
    kind: str
    param: Any = None

    def __post_init__(self):
        if self.kind not in HOM_KINDS:
            raise GroupError(f"unknown homomorphism kind {self.kind!r}")
        if self.kind == "identity":
            if self.source != self.target:
                raise GroupError("identity needs equal source and target")
        elif self.kind == "truncate":
            j = self.param
            if not (isinstance(self.source, OrderedGroup) and isinstance(self.target, OrderedGroup)):
                raise GroupError("truncate needs Z^k source and target")
            if not (0 <= j <= self.source.rank and j == self.target.rank):
                raise GroupError(
                    f"truncate {j}: need j <= source rank {self.source.rank} and j = target rank {self.target.rank}"
                )
        elif self.kind == "matrix":
            if not (isinstance(self.source, OrderedGroup) and isinstance(self.target, OrderedGroup)):
                raise GroupError("matrix needs Z^k source and target")
            rows = self.param
            if len(rows) != self.target.rank or any(len(r) != self.source.rank for r in rows):
                raise GroupError(
                    f"matrix shape must be {self.target.rank}x{self.source.rank}"
                )
        elif self.kind == "map" and not callable(self.param):
            raise GroupError("map homomorphism needs a callable")

    @classmethod
    def trivial(cls, source, target) -> Homomorphism:
        return cls(source, target, "trivial")

    @classmethod
    def identity(cls, group) -> Homomorphism:
        return cls(group, group, "identity")

    @classmethod
    def truncate(cls, source: OrderedGroup, j: int) -> Homomorphism:
        return cls(source, OrderedGroup(j), "truncate", j)

    @classmethod
    def matrix(cls, source: OrderedGroup, target: OrderedGroup, rows: Sequence[Sequence[int]]) -> Homomorphism:
        return cls(source, target, "matrix", tuple(tuple(int(c) for c in r) for r in rows))

    @classmethod
    def from_map(cls, source, target, fn: Callable) -> Homomorphism:
        return cls(source, target, "map", fn)

    @property
    def structural(self) -> bool:
        return self.kind in STRUCTURAL_KINDS

    def _target_unit(self):
        return self.target.unit if isinstance(self.target, Group) else self.target.t

    def __call__(self, a):
        if self.kind == "map":
            return self.param(a)
        if not self.source.contains(a):
            raise GroupError(f"{a!r} is not in the source {self.source}")
        if self.kind == "trivial":
            return self._target_unit()
        if self.kind == "identity":
            return a
        if self.kind == "truncate":
            return a[: self.param]
        return tuple(sum(m * x for m, x in zip(row, a)) for row in self.param)

    apply = __call__

    def describe(self) -> str:
        if self.kind == "truncate":
            return f"truncate {self.param}"
        if self.kind == "matrix":
            return "matrix [" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.param) + "]"
        return self.kind

    def as_rows(self) -> tuple[tuple[int, ...], ...]:
        """Integer matrix of a Z^k homomorphism of a non-map kind."""
        s, t = self.source.rank, self.target.rank
        if self.kind == "trivial":
            return tuple((0,) * s for _ in range(t))
        if self.kind == "identity":
            return tuple(tuple(int(i == j) for j in range(s)) for i in range(t))
        if self.kind == "truncate":
            return tuple(tuple(int(i == j) for j in range(s)) for i in range(t))
        if self.kind == "matrix":
            return self.param
        raise GroupError("map homomorphisms have no matrix")

    def then(self, after: Homomorphism) -> Homomorphism:
        """Composite ``after o self``."""
        if self.kind == "trivial" or after.kind == "trivial":
            return Homomorphism.trivial(self.source, after.target)
        if self.kind == "identity":
            return after if after.source == self.source else Homomorphism.from_map(self.source, after.target, after)
        if after.kind == "identity":
            return self
        if "map" in (self.kind, after.kind):
            return Homomorphism.from_map(self.source, after.target, lambda a: after(self(a)))
        a, b = after.as_rows(), self.as_rows()
        rows = [
            [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(self.source.rank)]
            for i in range(after.target.rank)
        ]
        return Homomorphism.matrix(self.source, after.target, rows)


def hom_validate(
    h: Homomorphism,
    radius: int = DEFAULT_RADIUS,
    samples: int = DEFAULT_SAMPLES,
    rng: random.Random | None = None,
) -> Report:
    """Check the hom law and order preservation of ``h``.

    Named kinds are valid by construction; matrix and map kinds are checked on
    ``samples`` random pairs with coordinates in [-radius, radius], plus the
    pairs (0, e_i) for the standard basis when the source is Z^k.
    """
    report = Report(f"hom[{h.describe()}]")
    if h.structural:
        report.note("valid by construction (structural kind)")
        return report
    if radius < 1:
        raise ValueError("sampling radius must be at least 1")
    rng = rng or random.Random(0)
    report.note(f"sampling radius {radius}, {samples} samples")
    src, dst = h.source, h.target
    pairs = [(src.sample(rng, radius), src.sample(rng, radius)) for _ in range(samples)]
    if isinstance(src, OrderedGroup):
        for i in range(src.rank):
            e = tuple(int(i == j) for j in range(src.rank))
            pairs.append((src.unit, e))
    for a, b in pairs:
        ha, hb = h(a), h(b)
        report.check("into-target", dst.contains(ha) and dst.contains(hb), (a, b))
        if not (dst.contains(ha) and dst.contains(hb)):
            continue
        report.check("hom-law", h(src.mul(a, b)) == dst.mul(ha, hb), (a, b))
        lo, hi = (a, b) if src.leq(a, b) else (b, a)
        report.check("order-preserving", dst.leq(h(lo), h(hi)), (lo, hi))
    return report


# Module-level spellings of the group operations.

def group_mul(g: Group, a, b):
    return g.mul(a, b)


def group_inv(g: Group, a):
    return g.inv(a)


def group_cmp(g: Group, a, b) -> Cmp:
    return g.cmp(a, b)


def group_cover(g: Group, a, direction: str = "up"):
    return g.cover(a, direction)


def hom_apply(h: Homomorphism, a):
    return h(a)
