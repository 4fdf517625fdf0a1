"""Elementwise comparison of chains, groups and bunches on samples.

Two structures built along different routes (say ``X`` and
``upshift(downshift(X))``) never share Python identity, so round trips are
checked by drawing elements and comparing every operation. ``phi`` maps
elements of the first structure to the second when their representations
differ (e.g. dotted elements after a re-split).
"""

from __future__ import annotations

import random
from itertools import product
from typing import Any, Callable

from .flechain import Chain, ChainError
from .ogroup import DEFAULT_RADIUS, DEFAULT_SAMPLES, GroupError
from .report import Report


def _identity(x):
    return x


def _draw(struct, rng, radius, samples):
    elems = struct.elements()
    if elems is not None:
        return list(elems)
    return [struct.sample(rng, radius) for _ in range(samples)]


def _pairs(struct, rng, radius, samples):
    elems = struct.elements()
    if elems is not None and len(elems) <= 24:
        return list(product(elems, repeat=2))
    return [(struct.sample(rng, radius), struct.sample(rng, radius)) for _ in range(samples)]


def _guard(report: Report, law: str, fn, witness) -> None:
    try:
        report.check(law, fn(), witness)
    except (ChainError, GroupError) as exc:
        report.fail(law, witness, str(exc))


def chains_agree(
    c1: Chain,
    c2: Chain,
    phi: Callable[[Any], Any] = _identity,
    psi: Callable[[Any], Any] | None = None,
    samples: int = DEFAULT_SAMPLES,
    radius: int = DEFAULT_RADIUS,
    seed: int = 0,
    name: str = "chains-agree",
) -> Report:
    """Check that ``phi`` carries ``c1`` onto ``c2`` preserving every operation."""
    rng = random.Random(seed)
    r = Report(name)
    _guard(r, "unit", lambda: phi(c1.t) == c2.t, (c1.t,))
    _guard(r, "falsum", lambda: phi(c1.f) == c2.f, (c1.f,))
    for x, y in _pairs(c1, rng, radius, samples):
        px, py = phi(x), phi(y)
        _guard(r, "carrier", lambda: c2.contains(px), (x,))
        _guard(r, "order", lambda: c1.leq(x, y) == c2.leq(px, py), (x, y))
        _guard(r, "product", lambda: phi(c1.mul(x, y)) == c2.mul(px, py), (x, y))
        _guard(r, "complement", lambda: phi(c1.complement(x)) == c2.complement(px), (x,))
    if psi is not None:
        for y in _draw(c2, rng, radius, samples):
            _guard(r, "inverse-carrier", lambda: c1.contains(psi(y)) and phi(psi(y)) == y, (y,))
    else:
        for y in _draw(c2, rng, radius, samples):
            _guard(r, "inverse-carrier", lambda: c1.contains(y), (y,))
    return r


def groups_agree(g1, g2, samples=DEFAULT_SAMPLES, radius=DEFAULT_RADIUS, seed=0, name="groups-agree") -> Report:
    rng = random.Random(seed)
    r = Report(name)
    _guard(r, "unit", lambda: g1.unit == g2.unit, (g1.unit,))
    for a, b in _pairs(g1, rng, radius, samples):
        _guard(r, "carrier", lambda: g2.contains(a), (a,))
        _guard(r, "product", lambda: g1.mul(a, b) == g2.mul(a, b), (a, b))
        _guard(r, "inverse", lambda: g1.inv(a) == g2.inv(a), (a,))
        _guard(r, "order", lambda: g1.leq(a, b) == g2.leq(a, b), (a, b))
    for b in _draw(g2, rng, radius, samples):
        _guard(r, "inverse-carrier", lambda: g1.contains(b), (b,))
    return r


def subgroups_agree(g1, h1, g2, h2, samples=DEFAULT_SAMPLES, radius=DEFAULT_RADIUS, seed=0, name="subgroups-agree"):
    rng = random.Random(seed)
    r = Report(name)
    pool = _draw(g1, rng, radius, samples)
    pool += [h1.sample(g1, rng, radius) for _ in range(samples)]
    pool += [h2.sample(g2, rng, radius) for _ in range(samples)]
    for a in pool:
        _guard(r, "membership", lambda: h1.contains(g1, a) == h2.contains(g2, a), (a,))
    return r


def maps_agree(f1, f2, source, samples=DEFAULT_SAMPLES, radius=DEFAULT_RADIUS, seed=0, name="maps-agree",
               phi_in=_identity, phi_out=_identity) -> Report:
    """``phi_out(f1(a)) == f2(phi_in(a))`` for sampled ``a`` of ``source``."""
    rng = random.Random(seed)
    r = Report(name)
    for a in _draw(source, rng, radius, samples):
        _guard(r, "map", lambda: phi_out(f1(a)) == f2(phi_in(a)), (a,))
    return r


def _index_agree(i1, i2, r: Report) -> bool:
    same = (
        len(i1.labels) == len(i2.labels)
        and i1.xi == i2.xi
        and [i1.role(u) for u in i1.labels] == [i2.role(v) for v in i2.labels]
    )
    r.check("index", same, (tuple(i1.labels), tuple(i2.labels)))
    return same


def algebra_bunches_agree(a1, a2, phis: dict | None = None, samples=DEFAULT_SAMPLES, radius=DEFAULT_RADIUS,
                          seed=0, name="algebra-bunches-agree") -> Report:
    """Layers and layer maps agree, matching labels by position in the index.

    ``phis`` maps a position to the element map used for that layer.
    """
    r = Report(name)
    if not _index_agree(a1.index, a2.index, r):
        return r
    phis = phis or {}
    l1, l2 = a1.index.labels, a2.index.labels
    for i, (u1, u2) in enumerate(zip(l1, l2)):
        phi = phis.get(i, _identity)
        r.merge(chains_agree(a1.layers[u1], a2.layers[u2], phi, samples=samples, radius=radius, seed=seed + i),
                f"layer {u1}")
    for i, j in a1.index.position_pairs():
        u1, v1, u2, v2 = l1[i], l1[j], l2[i], l2[j]
        r.merge(maps_agree(a1.homs[u1, v1], a2.homs[u2, v2], a1.layers[u1], samples, radius, seed,
                           phi_in=phis.get(i, _identity), phi_out=phis.get(j, _identity)),
                f"hom {u1}->{v1}")
    return r


def group_bunches_agree(g1, g2, samples=DEFAULT_SAMPLES, radius=DEFAULT_RADIUS, seed=0,
                        name="group-bunches-agree") -> Report:
    r = Report(name)
    if not _index_agree(g1.index, g2.index, r):
        return r
    l1, l2 = g1.index.labels, g2.index.labels
    for i, (u1, u2) in enumerate(zip(l1, l2)):
        G1, G2 = g1.groups[u1], g2.groups[u2]
        r.merge(groups_agree(G1, G2, samples, radius, seed + i), f"group {u1}")
        if g1.index.role(u1) == "theta":
            r.merge(subgroups_agree(G1, g1.subgroups[u1], G2, g2.subgroups[u2], samples, radius, seed + i),
                    f"subgroup {u1}")
    for i, j in g1.index.position_pairs():
        u1, v1, u2, v2 = l1[i], l1[j], l2[i], l2[j]
        r.merge(maps_agree(g1.homs[u1, v1], g2.homs[u2, v2], g1.groups[u1], samples, radius, seed),
                f"hom {u1}->{v1}")
    return r
