"""Brute-force enumeration of finite involutive FL_e-chains.

On an n-element chain the complement is an order-reversing involution, so it
is x -> n-1-x, which pins t and f: t = f = (n-1)/2 for odd chains and
f = n/2-1, t = n/2 for even ones. The search fills the upper triangle of a
symmetric product table row by row. Unit and bottom cells are fixed,
monotonicity bounds each cell by its already-filled neighbours, and
associativity is checked on every triple that the new cell completes.
Involutivity and the parity of the falsum are post-filters.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from .bunch import (
    PARITY_OF_XI,
    XI_OF_PARITY,
    decompose_chain,
    derive_chain,
    groups_to_algebras,
    trivial_group_bunches,
    validate_bunch_algebras,
    validate_bunch_groups,
)
from .flechain import ChainError, FiniteChainTable, Parity, TableChain, chain_to_table, run_law_suite
from .report import Report

MAX_N = 8


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    n: int
    parity: Parity | None = None  # None: every parity possible at this size

    def __post_init__(self):
        if not (1 <= self.n <= MAX_N):
            raise OracleError(f"n must be in 1..{MAX_N}, got {self.n}")
        if self.parity is not None:
            object.__setattr__(self, "parity", Parity(self.parity))

    def parities(self) -> list[Parity]:
        """Parities to search; a parity impossible at this size yields nothing."""
        if self.parity is not None:
            return [self.parity]
        return [Parity.ODD] if self.n % 2 else [Parity.EVEN_ID, Parity.EVEN_NONID]

    def positions(self, parity: Parity) -> tuple[int, int] | None:
        """(t_pos, f_pos), or None if no chain of this size has this parity."""
        n = self.n
        if parity is Parity.ODD:
            return ((n - 1) // 2,) * 2 if n % 2 else None
        return (n // 2, n // 2 - 1) if n % 2 == 0 else None


def _search(n: int, t: int):
    """Yield every commutative, associative, monotone table with unit t and
    absorbing bottom 0."""
    UNK = -1
    m = [[UNK] * n for _ in range(n)]
    for x in range(n):
        m[t][x] = m[x][t] = x
        m[0][x] = m[x][0] = 0
    cells = [(i, j) for i in range(n) for j in range(i, n) if m[i][j] == UNK]

    def bounds(i, j):
        lo = 0
        if j > 0 and m[i][j - 1] != UNK:
            lo = m[i][j - 1]
        if i > 0 and m[i - 1][j] != UNK:
            lo = max(lo, m[i - 1][j])
        hi = n - 1
        if j <= t:
            hi = min(hi, i)
        if i <= t:
            hi = min(hi, j)
        return lo, hi

    def assoc_ok(i, j) -> bool:
        # every triple whose two bracketings use cell (i, j) and only known cells
        def ok(x, y, z):
            xy, yz = m[x][y], m[y][z]
            if xy == UNK or yz == UNK:
                return True
            a, b = m[xy][z], m[x][yz]
            return a == UNK or b == UNK or a == b

        pair = {(i, j), (j, i)}
        for a, b in pair:
            for z in range(n):
                if not (ok(a, b, z) and ok(z, a, b)):
                    return False
        for x in range(n):
            for y in range(n):
                v = m[x][y]
                if v == UNK:
                    continue
                for a, b in pair:
                    if v == a and not (ok(x, y, b) and ok(b, x, y)):
                        return False
        return True

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(r) for r in m)
            return
        i, j = cells[k]
        lo, hi = bounds(i, j)
        for v in range(lo, hi + 1):
            m[i][j] = m[j][i] = v
            if assoc_ok(i, j):
                yield from rec(k + 1)
        m[i][j] = m[j][i] = UNK

    yield from rec(0)


def _complement(rows, f: int) -> list[int]:
    n = len(rows)
    return [max(z for z in range(n) if rows[x][z] <= f) for x in range(n)]


def enumerate_finite_chains(cfg: SearchConfig) -> list[FiniteChainTable]:
    """Every involutive FL_e-chain on cfg.n elements of the requested parity,
    sorted by table."""
    out = []
    for parity in cfg.parities():
        pos = cfg.positions(parity)
        if pos is None:
            continue
        t, f = pos
        for rows in _search(cfg.n, t):
            comp = _complement(rows, f)
            if any(comp[comp[x]] != x for x in range(cfg.n)):
                continue
            if parity is not Parity.ODD and (rows[f][f] == f) != (parity is Parity.EVEN_ID):
                continue
            out.append(FiniteChainTable(cfg.n, rows, t, f))
    return sorted(out, key=lambda tb: (tb.t_pos, tb.f_pos, tb.mul))


def catalog_tables(cfg: SearchConfig) -> list[FiniteChainTable]:
    """Tables of the chains derived from valid bunches of one-element groups
    with cfg.n elements: the bunch-side prediction of the enumeration."""
    out = []
    for parity in cfg.parities():
        xi = XI_OF_PARITY[parity]
        for size in range(1, cfg.n + 1):
            for b in trivial_group_bunches(size, xi):
                if not validate_bunch_groups(b, samples=10).ok:
                    continue
                c = derive_chain(groups_to_algebras(b, samples=10))
                elems = c.elements()
                if elems is not None and len(elems) == cfg.n:
                    out.append(chain_to_table(c))
    return sorted(set(out), key=lambda tb: (tb.t_pos, tb.f_pos, tb.mul))


def cross_check(cfg: SearchConfig, tables: list[FiniteChainTable] | None = None) -> Report:
    """Round-trip every enumerated table through its bunch, and compare the
    enumeration with the bunch catalog."""
    label = cfg.parity.value if cfg.parity else "any"
    r = Report(f"oracle n={cfg.n} {label}")
    if tables is None:
        tables = enumerate_finite_chains(cfg)
    for tb in tables:
        c = TableChain(tb)
        w = (tb.to_text(),)
        r.merge(run_law_suite(c, exhaustive=True), "laws")
        try:
            a = decompose_chain(c)
            r.merge(validate_bunch_algebras(a), "bunch")
            r.check("rederive", chain_to_table(derive_chain(a)) == tb, w)
            r.check("parity", PARITY_OF_XI[a.index.xi] in cfg.parities(), w)
        except ChainError as exc:
            r.fail("decompose", w, str(exc))
    predicted = catalog_tables(cfg)
    r.check("count", len(tables) == len(predicted), (len(tables), len(predicted)))
    r.check("catalog-tables", set(tables) == set(predicted), ())
    r.note(f"enumerated {len(tables)}, catalog predicts {len(predicted)}")
    return r


def summary_lines(cfg: SearchConfig, tables: list[FiniteChainTable]) -> list[str]:
    lines = []
    for parity in cfg.parities():
        count = sum(
            1 for tb in tables
            if (parity is Parity.ODD and tb.t_pos == tb.f_pos)
            or (parity is not Parity.ODD and tb.t_pos != tb.f_pos
                and (tb.mul[tb.f_pos][tb.f_pos] == tb.f_pos) == (parity is Parity.EVEN_ID))
        )
        lines.append(f"{cfg.n} {parity.value} {count}")
    return lines


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description="enumerate finite involutive FL_e-chains")
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--parity", choices=[p.value for p in Parity])
    args = ap.parse_args(argv)
    cfg = SearchConfig(args.n, args.parity)
    for line in summary_lines(cfg, enumerate_finite_chains(cfg)):
        print(line)
    return 0
