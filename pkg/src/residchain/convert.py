"""Conversions between groups and chains, falsum shifts, and subgroup splits.

* ``InducedChain`` / ``InducedGroup``: a totally ordered abelian group seen as
  a cancellative odd chain, and back.
* ``DownshiftChain`` / ``UpshiftChain``: re-designate the falsum as the
  cocover of the unit, or as the unit itself.
* ``SplitChain``: double the elements of a subgroup H of an odd chain by
  inserting a dotted cocover under each of them. ``unsplit`` recovers the
  pair (X, H) from an even chain with idempotent falsum.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, NamedTuple

from .flechain import (
    Chain,
    ChainError,
    Parity,
    classify_parity,
    find_cancellativity_witness,
    find_discreteness_witness,
)
from .ogroup import DEFAULT_RADIUS, DEFAULT_SAMPLES, Group, NoNeighbor, OrderedGroup


class PreconditionError(ChainError):
    pass


# --------------------------------------------------------------------------
# groups <-> cancellative odd chains


class InducedChain(Chain):
    """The cancellative odd chain of a totally ordered abelian group."""

    kind = "induced-group"
    cancellative = True

    def __init__(self, group: Group):
        self.group = group
        self.t = group.unit
        self.f = group.unit
        self.discretely_ordered = group.discrete

    def __repr__(self) -> str:
        return f"InducedChain({self.group})"

    def contains(self, x):
        return self.group.contains(x)

    def _leq(self, x, y):
        return self.group.leq(x, y)

    def _mul(self, x, y):
        return self.group.mul(x, y)

    def _complement(self, x):
        return self.group.inv(x)

    def _up(self, x):
        try:
            return self.group.cover(x, "up")
        except NoNeighbor:
            return x

    def _down(self, x):
        try:
            return self.group.cover(x, "down")
        except NoNeighbor:
            return x

    def sample(self, rng, radius=DEFAULT_RADIUS):
        return self.group.sample(rng, radius)

    def window(self, radius):
        return self.group.window(radius)

    def elements(self):
        return self.group.elements()


class InducedGroup(Group):
    """The group of a cancellative odd chain: inverse is x -> (x -> t)."""

    def __init__(self, chain: Chain):
        self.chain = chain
        self.unit = chain.t

    def __repr__(self) -> str:
        return f"InducedGroup({self.chain!r})"

    def contains(self, a):
        return self.chain.contains(a)

    def mul(self, a, b):
        return self.chain.mul(a, b)

    def inv(self, a):
        return self.chain.res(a, self.chain.t)

    def leq(self, a, b):
        return self.chain.leq(a, b)

    def cover(self, a, direction="up"):
        b = self.chain.up(a) if direction == "up" else self.chain.down(a)
        if b == a:
            raise NoNeighbor(f"{a!r} has no neighbor")
        return b

    @property
    def discrete(self) -> bool:
        if self.chain.discretely_ordered is not None:
            return self.chain.discretely_ordered
        return find_discreteness_witness(self.chain) is None

    def sample(self, rng, radius=DEFAULT_RADIUS):
        return self.chain.sample(rng, radius)

    def window(self, radius):
        return self.chain.window(radius)

    def elements(self):
        return self.chain.elements()


def iota_group_to_chain(g: Group) -> Chain:
    return InducedChain(g)


def require_cancellative(c: Chain, what: str, **kw) -> None:
    w = find_cancellativity_witness(c, **kw)
    if w is not None:
        x, y, z = w
        raise PreconditionError(f"{what}: chain is not cancellative ({x!r}*{z!r} = {y!r}*{z!r})")


def require_discrete(c: Chain, what: str, **kw) -> None:
    w = find_discreteness_witness(c, **kw)
    if w is not None:
        raise PreconditionError(f"{what}: chain is not discretely ordered (no neighbor of {w!r})")


def iota_chain_to_group(c: Chain, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> Group:
    if classify_parity(c) is not Parity.ODD:
        raise PreconditionError("induced group needs an odd chain")
    require_cancellative(c, "induced group", rng=random.Random(seed), samples=samples)
    return InducedGroup(c)


# --------------------------------------------------------------------------
# falsum shifts


class _ReductView(Chain):
    """Shares the residuated reduct of ``base``; subclasses pick the falsum."""

    def __init__(self, base: Chain):
        self.base = base
        self.t = base.t
        self.cancellative = base.cancellative
        self.discretely_ordered = base.discretely_ordered

    def contains(self, x):
        return self.base.contains(x)

    def _leq(self, x, y):
        return self.base.leq(x, y)

    def _mul(self, x, y):
        return self.base.mul(x, y)

    def _up(self, x):
        return self.base.up(x)

    def _down(self, x):
        return self.base.down(x)

    def sample(self, rng, radius=DEFAULT_RADIUS):
        return self.base.sample(rng, radius)

    def window(self, radius):
        return self.base.window(radius)

    def elements(self):
        return self.base.elements()


class DownshiftChain(_ReductView):
    kind = "downshifted"

    def __init__(self, base: Chain):
        super().__init__(base)
        self.f = base.down(base.t)

    def __repr__(self) -> str:
        return f"DownshiftChain({self.base!r})"

    def _complement(self, x):
        return self.base.down(self.base.complement(x))


class UpshiftChain(_ReductView):
    kind = "upshifted"

    def __init__(self, base: Chain):
        super().__init__(base)
        self.f = base.t

    def __repr__(self) -> str:
        return f"UpshiftChain({self.base!r})"

    def _complement(self, x):
        return self.base.up(self.base.complement(x))


def downshift(c: Chain, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> Chain:
    """Make a discretely ordered cancellative odd chain even: f := t's cocover."""
    kw = dict(rng=random.Random(seed), samples=samples)
    require_cancellative(c, "downshift", **kw)
    require_discrete(c, "downshift", **kw)
    if classify_parity(c) is not Parity.ODD:
        raise PreconditionError("downshift needs an odd chain")
    return DownshiftChain(c)


def upshift(c: Chain, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> Chain:
    """Inverse of :func:`downshift`: f := t."""
    kw = dict(rng=random.Random(seed), samples=samples)
    require_cancellative(c, "upshift", **kw)
    require_discrete(c, "upshift", **kw)
    if classify_parity(c) is not Parity.EVEN_NONID:
        raise PreconditionError("upshift needs an even chain with a non-idempotent falsum")
    return UpshiftChain(c)


# --------------------------------------------------------------------------
# subgroups


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of a chain's carrier.

    ``full``, ``trivial`` and ``prefix j`` (Z^j x 0 inside Z^k) are the
    describable kinds; ``predicate`` carries a membership test and a
    sampler and is what decomposition produces.
    """

    kind: str
    j: int | None = None
    member: Callable[[Any], bool] | None = None
    draw: Callable[[random.Random, int], Any] | None = None

    @classmethod
    def full(cls) -> Subgroup:
        return cls("full")

    @classmethod
    def trivial(cls) -> Subgroup:
        return cls("trivial")

    @classmethod
    def prefix(cls, j: int) -> Subgroup:
        if j < 0:
            raise ValueError("prefix length must be non-negative")
        return cls("prefix", j)

    @classmethod
    def predicate(cls, member, draw) -> Subgroup:
        return cls("predicate", None, member, draw)

    def describe(self) -> str:
        return f"prefix {self.j}" if self.kind == "prefix" else self.kind

    def contains(self, ambient, x) -> bool:
        """Membership of ``x`` (an element of ``ambient``, a group or chain)."""
        if not ambient.contains(x):
            return False
        if self.kind == "full":
            return True
        if self.kind == "trivial":
            return x == _unit(ambient)
        if self.kind == "prefix":
            return all(c == 0 for c in x[self.j:])
        return bool(self.member(x))

    def sample(self, ambient, rng: random.Random, radius: int = DEFAULT_RADIUS):
        if self.kind == "trivial":
            return _unit(ambient)
        if self.kind == "predicate":
            return self.draw(rng, radius)
        x = ambient.sample(rng, radius)
        if self.kind == "prefix":
            x = x[: self.j] + (0,) * (len(x) - self.j)
        return x

    def window(self, ambient, radius: int) -> list:
        return [x for x in ambient.window(radius) if self.contains(ambient, x)]

    def check_shape(self, group) -> None:
        if self.kind == "prefix":
            if not isinstance(group, OrderedGroup) or self.j > group.rank:
                raise ValueError(f"prefix {self.j} does not fit {group}")


def _unit(ambient):
    return ambient.unit if isinstance(ambient, Group) else ambient.t


# --------------------------------------------------------------------------
# split


@dataclass(frozen=True)
class Dotted:
    """The inserted cocover of a subgroup element ``base``."""

    base: Any

    def __str__(self) -> str:
        from .flechain import format_element

        return "." + format_element(self.base)


class SplitChain(Chain):
    kind = "split"
    cancellative = False

    def __init__(self, base: Chain, subgroup: Subgroup):
        self.base = base
        self.subgroup = subgroup
        self.t = base.t
        self.f = Dotted(base.t)

    def __repr__(self) -> str:
        return f"SplitChain({self.base!r}, {self.subgroup.describe()})"

    def in_h(self, x) -> bool:
        return not isinstance(x, Dotted) and self.subgroup.contains(self.base, x)

    def canonical(self, y):
        """The canonical homomorphism onto the base: a dotted element maps to its cover."""
        self._own(y)
        return y.base if isinstance(y, Dotted) else y

    def contains(self, x):
        if isinstance(x, Dotted):
            return self.in_h(x.base)
        return self.base.contains(x)

    def _leq(self, x, y):
        b = self.base
        if isinstance(x, Dotted):
            return b.leq(x.base, y.base if isinstance(y, Dotted) else y)
        if isinstance(y, Dotted):
            return b.lt(x, y.base)
        return b.leq(x, y)

    def _mul(self, x, y):
        p = self.base.mul(self.canonical(x), self.canonical(y))
        if (self.in_h(x) and self.in_h(y)) or not self.in_h(p):
            return p
        return Dotted(p)

    def _complement(self, x):
        b = self.base
        if isinstance(x, Dotted):
            return b.complement(x.base)
        c = b.complement(x)
        return Dotted(c) if self.in_h(x) else c

    def _up(self, x):
        if isinstance(x, Dotted):
            return x.base
        w = self.base.up(x)
        if w == x:
            return x
        return Dotted(w) if self.in_h(w) else w

    def _down(self, x):
        if isinstance(x, Dotted):
            w = self.base.down(x.base)
            return x if w == x.base else w
        if self.in_h(x):
            return Dotted(x)
        return self.base.down(x)

    def sample(self, rng, radius=DEFAULT_RADIUS):
        r = rng.random()
        if r < 0.4:
            return Dotted(self.subgroup.sample(self.base, rng, radius))
        if r < 0.6:
            return self.subgroup.sample(self.base, rng, radius)
        return self.base.sample(rng, radius)

    def window(self, radius):
        plain = self.base.window(radius)
        return plain + [Dotted(a) for a in plain if self.in_h(a)]

    def elements(self):
        plain = self.base.elements()
        if plain is None:
            return None
        return plain + [Dotted(a) for a in plain if self.in_h(a)]


def split(
    x: Chain, h: Subgroup, samples: int = DEFAULT_SAMPLES, radius: int = DEFAULT_RADIUS, seed: int = 0
) -> SplitChain:
    """Split the subgroup ``h`` of the odd chain ``x``."""
    if classify_parity(x) is not Parity.ODD:
        raise PreconditionError("split needs an odd base chain")
    if isinstance(x, InducedChain):
        h.check_shape(x.group)
    if not h.contains(x, x.t):
        raise PreconditionError("subgroup does not contain the unit")
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = h.sample(x, rng, radius), h.sample(x, rng, radius)
        if not (h.contains(x, a) and h.contains(x, b)):
            raise PreconditionError(f"subgroup sampler produced a non-member {a!r} or {b!r}")
        if not h.contains(x, x.mul(a, b)) or not h.contains(x, x.complement(a)):
            raise PreconditionError(f"subgroup not closed at {a!r}, {b!r}")
        if x.cancellative is not True and x.mul(a, x.complement(a)) != x.t:
            raise PreconditionError(f"subgroup not cancellative: {a!r} has no inverse")
    return SplitChain(x, h)


class ProjectedChain(Chain):
    """The odd chain left after removing the dotted elements of ``y``."""

    kind = "projected"

    def __init__(self, y: Chain):
        self.y = y
        self.t = y.t
        self.f = y.t

    def __repr__(self) -> str:
        return f"ProjectedChain({self.y!r})"

    def is_dotted(self, e) -> bool:
        y = self.y
        u = y.up(e)
        return u != e and y.mul(u, y.f) == e and y.lt(e, u)

    def canonical(self, e):
        return self.y.up(e) if self.is_dotted(e) else e

    def contains(self, x):
        return self.y.contains(x) and not self.is_dotted(x)

    def _leq(self, a, b):
        return self.y.leq(a, b)

    def _mul(self, a, b):
        return self.canonical(self.y.mul(a, b))

    def _complement(self, a):
        y = self.y
        return self.canonical(y.complement(y.mul(a, y.f)))

    def _up(self, a):
        return self.canonical(self.y.up(a))

    def _down(self, a):
        d = self.y.down(a)
        if d == a or not self.is_dotted(d):
            return d
        dd = self.y.down(d)
        return a if dd == d else dd

    def sample(self, rng, radius=DEFAULT_RADIUS):
        return self.canonical(self.y.sample(rng, radius))

    def window(self, radius):
        return [e for e in self.y.window(radius) if not self.is_dotted(e)]

    def elements(self):
        elems = self.y.elements()
        return None if elems is None else [e for e in elems if not self.is_dotted(e)]


class Unsplit(NamedTuple):
    base: ProjectedChain
    subgroup: Subgroup
    canonical: Callable[[Any], Any]


def unsplit(y: Chain) -> Unsplit:
    """Recover (X, H, h) from an even chain with idempotent falsum."""
    if classify_parity(y) is not Parity.EVEN_ID:
        raise PreconditionError("unsplit needs an even chain with an idempotent falsum")
    x = ProjectedChain(y)

    def member(e) -> bool:
        return y.lt(y.mul(e, y.f), e)

    def draw(rng, radius):
        for _ in range(64):
            e = y.sample(rng, radius)
            if x.is_dotted(e):
                return y.up(e)
            if member(e):
                return e
        return y.t

    return Unsplit(x, Subgroup.predicate(member, draw), x.canonical)


def split_embedding(y: Chain, x: ProjectedChain) -> Callable[[Any], Any]:
    """Map ``y`` into ``split(unsplit(y))``: dotted elements become ``Dotted(cover)``."""
    return lambda e: Dotted(y.up(e)) if x.is_dotted(e) else e
