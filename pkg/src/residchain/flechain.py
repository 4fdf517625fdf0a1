"""Involutive FL_e-chains as bundles of computable operations.

A :class:`Chain` supplies membership, order, product, residual complement and
neighbour operations over a possibly infinite carrier together with a
bounded sampler. The residual and the local unit ``tau`` are derived from
those. :func:`run_law_suite` checks the residuation laws and the local-unit
properties on sampled (or, for small finite chains, all) tuples.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Any, Iterable, Sequence

from .ogroup import DEFAULT_RADIUS, DEFAULT_SAMPLES
from .report import Report

EXHAUSTIVE_LIMIT = 12


class ChainError(ValueError):
    pass


class ForeignElement(ChainError):
    pass


class UndefinedOperation(ChainError):
    """An operation has no value (e.g. an empty residuation set)."""


class NotComputable(ChainError):
    """The value exists but cannot be computed from the representation."""


class UnsupportedParity(ChainError):
    pass


class Parity(str, Enum):
    ODD = "odd"
    EVEN_ID = "even-idempotent-f"
    EVEN_NONID = "even-nonidempotent-f"


class Chain:
    """An involutive FL_e-chain given by its operations.

    Subclasses implement ``contains`` and the underscored primitives; the
    public methods reject foreign elements before delegating. ``up``/``down``
    are the neighbour operations: the unique cover (cocover) when it exists
    and the element itself otherwise.
    """

    kind = "abstract"
    # structural hints; None means "unknown, decide by sampling"
    cancellative: bool | None = None
    discretely_ordered: bool | None = None
    t: Any
    f: Any

    def contains(self, x) -> bool:
        raise NotImplementedError

    def _leq(self, x, y) -> bool:
        raise NotImplementedError

    def _mul(self, x, y):
        raise NotImplementedError

    def _complement(self, x):
        raise NotImplementedError

    def _up(self, x):
        raise NotImplementedError

    def _down(self, x):
        raise NotImplementedError

    def sample(self, rng: random.Random, radius: int = DEFAULT_RADIUS):
        raise NotImplementedError

    def window(self, radius: int) -> list:
        """Carrier slice: every element whose group coordinates lie in [-radius, radius]."""
        raise NotImplementedError

    def elements(self) -> list | None:
        """The whole carrier if it is finite, else None."""
        return None

    def _own(self, *elems) -> None:
        for x in elems:
            if not self.contains(x):
                raise ForeignElement(f"{x!r} is not an element of this {self.kind} chain")

    def leq(self, x, y) -> bool:
        self._own(x, y)
        return self._leq(x, y)

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def mul(self, x, y):
        self._own(x, y)
        return self._mul(x, y)

    def complement(self, x):
        self._own(x)
        return self._complement(x)

    def res(self, x, y):
        return self.complement(self.mul(x, self.complement(y)))

    def tau(self, x):
        return self.res(x, x)

    def up(self, x):
        self._own(x)
        return self._up(x)

    def down(self, x):
        self._own(x)
        return self._down(x)

    def max(self, items: Iterable):
        best = None
        for x in items:
            if best is None or self.lt(best, x):
                best = x
        return best

    def sort_key(self):
        return functools.cmp_to_key(lambda a, b: 0 if a == b else (-1 if self.leq(a, b) else 1))

    def sorted(self, items: Iterable) -> list:
        return sorted(items, key=self.sort_key())

    def format_element(self, x) -> str:
        return format_element(x)


def format_element(x) -> str:
    if isinstance(x, tuple):
        if len(x) == 1:
            return str(x[0])
        return "(" + ",".join(map(str, x)) + ")"
    return str(x)


# --------------------------------------------------------------------------
# finite tables


@dataclass(frozen=True)
class FiniteChainTable:
    """Explicit product table on positions 0 < 1 < ... < n-1."""

    n: int
    mul: tuple[tuple[int, ...], ...]
    t_pos: int
    f_pos: int

    def __post_init__(self):
        if self.n < 1:
            raise ChainError("a table needs at least one element")
        if len(self.mul) != self.n or any(len(r) != self.n for r in self.mul):
            raise ChainError(f"product table must be {self.n}x{self.n}")
        for row in self.mul:
            for v in row:
                if not (0 <= v < self.n):
                    raise ChainError(f"table entry {v} out of range 0..{self.n - 1}")
        for name, p in (("t", self.t_pos), ("f", self.f_pos)):
            if not (0 <= p < self.n):
                raise ChainError(f"{name} position {p} out of range")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], t_pos: int, f_pos: int) -> FiniteChainTable:
        return cls(len(rows), tuple(tuple(r) for r in rows), t_pos, f_pos)

    def with_cell(self, i: int, j: int, value: int) -> FiniteChainTable:
        rows = [list(r) for r in self.mul]
        rows[i][j] = value
        return FiniteChainTable.from_rows(rows, self.t_pos, self.f_pos)

    def to_text(self) -> str:
        lines = [f"{self.n} {self.t_pos} {self.f_pos}"]
        lines.extend(" ".join(map(str, row)) for row in self.mul)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> FiniteChainTable:
        rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
        rows = [r for r in rows if r]
        if not rows:
            raise ChainError("empty table text")
        try:
            head = [int(v) for v in rows[0]]
            body = [[int(v) for v in r] for r in rows[1:]]
        except ValueError as exc:
            raise ChainError(f"non-integer entry in table text: {exc}") from None
        if len(head) != 3:
            raise ChainError("first line must be 'n t_pos f_pos'")
        n, t_pos, f_pos = head
        if len(body) != n:
            raise ChainError(f"expected {n} table rows, found {len(body)}")
        return cls(n, tuple(tuple(r) for r in body), t_pos, f_pos)


class TableChain(Chain):
    kind = "finite-table"

    def __init__(self, table: FiniteChainTable):
        self.table = table
        self.n = table.n
        self.t = table.t_pos
        self.f = table.f_pos

    def __repr__(self) -> str:
        return f"TableChain(n={self.n}, t={self.t}, f={self.f})"

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.n

    def _leq(self, x, y):
        return x <= y

    def _mul(self, x, y):
        return self.table.mul[x][y]

    def res_search(self, x, y):
        """max{z : x*z <= y}, by search."""
        self._own(x, y)
        found = [z for z in range(self.n) if self.table.mul[x][z] <= y]
        if not found:
            raise UndefinedOperation(f"no z with {x}*z <= {y}")
        return max(found)

    def _complement(self, x):
        return self.res_search(x, self.f)

    def _up(self, x):
        return min(x + 1, self.n - 1)

    def _down(self, x):
        return max(x - 1, 0)

    def sample(self, rng, radius=DEFAULT_RADIUS):
        return rng.randrange(self.n)

    def window(self, radius):
        return list(range(self.n))

    def elements(self):
        return list(range(self.n))


def chain_to_table(c: Chain) -> FiniteChainTable:
    """Read a finite chain off as a positional product table."""
    elems = c.elements()
    if elems is None:
        raise ChainError("chain is not finite")
    elems = c.sorted(elems)
    pos = {x: i for i, x in enumerate(elems)}
    rows = [[pos[c.mul(x, y)] for y in elems] for x in elems]
    return FiniteChainTable.from_rows(rows, pos[c.t], pos[c.complement(c.t)])


# --------------------------------------------------------------------------
# structural properties


def classify_parity(c: Chain) -> Parity:
    t = c.t
    f = c.complement(t)
    if f == t:
        return Parity.ODD
    if c.lt(f, t) and c.up(f) == t:
        return Parity.EVEN_ID if c.mul(f, f) == f else Parity.EVEN_NONID
    raise UnsupportedParity(f"chain is neither odd nor even (t={t!r}, f={f!r})")


def _pairs(c: Chain, rng: random.Random, samples: int, radius: int):
    elems = c.elements()
    if elems is not None and len(elems) <= EXHAUSTIVE_LIMIT:
        return list(product(elems, repeat=2))
    return [(c.sample(rng, radius), c.sample(rng, radius)) for _ in range(samples)]


def find_cancellativity_witness(
    c: Chain, rng: random.Random | None = None, samples: int = DEFAULT_SAMPLES, radius: int = DEFAULT_RADIUS
) -> tuple | None:
    """A triple (x, y, z) with x != y and x*z == y*z, or None if none was found.

    Finite chains are searched exhaustively; known-cancellative kinds are
    trusted; otherwise random pairs and each sample against its neighbours
    are tried.
    """
    elems = c.elements()
    if elems is not None:
        for x, y, z in product(elems, repeat=3):
            if x != y and c.mul(x, z) == c.mul(y, z):
                return (x, y, z)
        return None
    if c.cancellative is True:
        return None
    rng = rng or random.Random(0)
    for _ in range(samples):
        x, z = c.sample(rng, radius), c.sample(rng, radius)
        for y in (c.sample(rng, radius), c.up(x), c.down(x)):
            if x != y and c.mul(x, z) == c.mul(y, z):
                return (x, y, z)
    return None


def find_discreteness_witness(
    c: Chain, rng: random.Random | None = None, samples: int = DEFAULT_SAMPLES, radius: int = DEFAULT_RADIUS
):
    """An element lacking a cover or cocover, or None."""
    if c.discretely_ordered is not None and c.elements() is None:
        return None if c.discretely_ordered else c.t
    elems = c.elements()
    candidates = elems if elems is not None else [c.t] + [c.sample(rng or random.Random(0), radius) for _ in range(samples)]
    for x in candidates:
        if not (c.lt(c.down(x), x) and c.lt(x, c.up(x))):
            return x
    return None


def is_cancellative(c: Chain, **kw) -> bool:
    return find_cancellativity_witness(c, **kw) is None


def is_discretely_ordered(c: Chain, **kw) -> bool:
    return find_discreteness_witness(c, **kw) is None


# --------------------------------------------------------------------------
# law suite


def _random_term(rng: random.Random, leaves: Sequence, depth: int):
    if depth == 0 or rng.random() < 0.3:
        return ("leaf", rng.choice(leaves))
    op = rng.choice(("mul", "res", "comp"))
    if op == "comp":
        return (op, _random_term(rng, leaves, depth - 1))
    return (op, _random_term(rng, leaves, depth - 1), _random_term(rng, leaves, depth - 1))


def _eval_term(c: Chain, term, used: list):
    if term[0] == "leaf":
        used.append(term[1])
        return term[1]
    if term[0] == "comp":
        return c.complement(_eval_term(c, term[1], used))
    a, b = _eval_term(c, term[1], used), _eval_term(c, term[2], used)
    return c.mul(a, b) if term[0] == "mul" else c.res(a, b)


def _tuples(c: Chain, rng, samples, radius, exhaustive):
    elems = c.elements()
    if exhaustive and elems is not None:
        return list(product(elems, repeat=3))
    return [tuple(c.sample(rng, radius) for _ in range(3)) for _ in range(samples)]


def run_law_suite(
    c: Chain,
    radius: int = DEFAULT_RADIUS,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    exhaustive: bool | None = None,
) -> Report:
    """Check the FL_e-chain laws on sampled (or all) triples.

    Laws: residuation (including that the residual is the greatest solution),
    involutivity and order reversal of the complement, commutativity,
    associativity, unit and monotonicity of the product, t' = f, the
    reflection inequality for t >= f, tau(x) = tau(x'), tau(x) a positive
    idempotent stabilising x, tau(x) <= x for positive x, and, on odd and
    even chains, strict bi-monotonicity and the tau-of-terms rule.
    """
    rng = random.Random(seed)
    elems = c.elements()
    if exhaustive is None:
        exhaustive = elems is not None and len(elems) <= EXHAUSTIVE_LIMIT
    report = Report(f"laws[{c.kind}]")
    report.note("exhaustive over all triples" if exhaustive else f"{samples} sampled triples, radius {radius}")

    def law(name, fn, *witness):
        try:
            report.check(name, fn(), witness)
        except NotComputable:
            pass
        except ChainError as exc:
            report.fail("undefined-operation", witness, f"{name}: {exc}")

    t = c.t
    law("falsum", lambda: c.complement(t) == c.f, t)
    try:
        parity = classify_parity(c)
        report.note(f"parity {parity.value}")
    except ChainError as exc:
        parity = None
        report.note(f"parity unsupported ({exc}); odd/even-only laws skipped")
    try:
        t_geq_f = c.leq(c.f, t)
    except ChainError:
        t_geq_f = False

    def greatest(x, z):
        y0 = c.res(x, z)
        if not c.leq(c.mul(x, y0), z):
            return False
        y1 = c.up(y0)
        return y1 == y0 or not c.leq(c.mul(x, y1), z)

    for x, y, z in _tuples(c, rng, samples, radius, exhaustive):
        law("commutativity", lambda: c.mul(x, y) == c.mul(y, x), x, y)
        law("associativity", lambda: c.mul(c.mul(x, y), z) == c.mul(x, c.mul(y, z)), x, y, z)
        law("unit", lambda: c.mul(t, x) == x, x)
        law("monotonicity", lambda: not c.leq(x, y) or c.leq(c.mul(x, z), c.mul(y, z)), x, y, z)
        law("adjointness", lambda: c.leq(c.mul(x, y), z) == c.leq(y, c.res(x, z)), x, y, z)
        law("adjointness", lambda: c.leq(y, c.res(x, c.mul(x, y))), x, y)
        law("residual-greatest", lambda: greatest(x, z), x, z)
        law("involutivity", lambda: c.complement(c.complement(x)) == x, x)
        law("order-reversal", lambda: not c.leq(x, y) or c.leq(c.complement(y), c.complement(x)), x, y)
        if t_geq_f:
            law(
                "reflection-inequality",
                lambda: c.leq(c.mul(x, y), c.complement(c.mul(c.complement(x), c.complement(y)))),
                x, y,
            )
        law("tau-complement", lambda: c.tau(x) == c.tau(c.complement(x)), x)
        law(
            "tau-positive-idempotent",
            lambda: (lambda u: c.leq(t, u) and c.mul(u, u) == u and c.mul(u, x) == x)(c.tau(x)),
            x,
        )
        law("tau-below-positive", lambda: not c.leq(t, x) or c.leq(c.tau(x), x), x)
        if isinstance(c, TableChain):
            law("residual-search", lambda: c.res(x, y) == c.res_search(x, y), x, y)
        if parity is None:
            continue
        law("tau-of-product", lambda: c.tau(c.mul(x, y)) == c.max([c.tau(x), c.tau(y)]), x, y)
        x0, x1 = (x, y) if c.leq(x, y) else (y, x)
        y0, y1 = (z, x) if c.leq(z, x) else (x, z)
        if x0 != x1 and y0 != y1:
            law("strict-bimonotonicity", lambda: c.lt(c.mul(x0, y0), c.mul(x1, y1)), x0, x1, y0, y1)
        term = _random_term(rng, (x, y, z, t, c.f), 3)

        def tau_of_term():
            used: list = []
            value = _eval_term(c, term, used)
            return c.tau(value) == c.max(c.tau(v) for v in used)

        law("tau-of-terms", tau_of_term, term)
    if exhaustive and elems is not None and parity is not None:
        for x0, x1, y0, y1 in product(elems, repeat=4):
            if c.lt(x0, x1) and c.lt(y0, y1):
                law("strict-bimonotonicity", lambda: c.lt(c.mul(x0, y0), c.mul(x1, y1)), x0, x1, y0, y1)
    return report


# Module-level spellings of the chain operations.

def chain_leq(c: Chain, x, y) -> bool:
    return c.leq(x, y)


def chain_mul(c: Chain, x, y):
    return c.mul(x, y)


def chain_res(c: Chain, x, y):
    return c.res(x, y)


def tau(c: Chain, x):
    return c.tau(x)
