"""Bunches of layer groups and layer algebras.

A bunch is indexed by a finite chain ``kappa`` with least element ``t``.
Every non-``t`` label is in class I or J; together with ``xi`` that decides
which labels are Omega (cancellative odd layers), Psi (discrete cancellative
even layers) and Theta (split layers).

The chain derived from a bunch of layer algebras is the disjoint union of
the layers. Elements are :class:`ChainElement` values ``(layer, payload)``;
a lower-layer element is compared with and multiplied into a higher layer by
pushing it along the layer maps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from typing import Any, Callable, Hashable

from . import agreement
from .convert import (
    InducedGroup,
    PreconditionError,
    ProjectedChain,
    Subgroup,
    downshift,
    iota_chain_to_group,
    iota_group_to_chain,
    split,
    split_embedding,
    unsplit,
    upshift,
)
from .flechain import (
    Chain,
    ChainError,
    NotComputable,
    Parity,
    TableChain,
    chain_to_table,
    classify_parity,
    find_cancellativity_witness,
    find_discreteness_witness,
    format_element,
    run_law_suite,
)
from .ogroup import DEFAULT_RADIUS, DEFAULT_SAMPLES, Group, Homomorphism, hom_validate
from .report import Report


class Xi(str, Enum):
    O = "O"
    E_ID = "E_id"
    E_NONID = "E_nonid"


XI_OF_PARITY = {Parity.ODD: Xi.O, Parity.EVEN_ID: Xi.E_ID, Parity.EVEN_NONID: Xi.E_NONID}
PARITY_OF_XI = {v: k for k, v in XI_OF_PARITY.items()}


class BunchError(ValueError):
    pass


@dataclass(frozen=True)
class KappaIndex:
    """Labels in ascending order (the first is the least element ``t``) and
    the I/J class of every other label."""

    labels: tuple
    classes: dict = field(hash=False)
    xi: Xi

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "xi", Xi(self.xi))
        problems = self.problems()
        if problems:
            raise BunchError("; ".join(problems))

    def problems(self) -> list[str]:
        out = []
        if not self.labels:
            out.append("kappa is empty")
            return out
        if len(set(self.labels)) != len(self.labels):
            out.append("kappa has duplicate labels")
        if self.t in self.classes:
            out.append(f"least label {self.t!r} must not have a class")
        for u in self.labels[1:]:
            if self.classes.get(u) not in ("I", "J"):
                out.append(f"label {u!r} needs class I or J")
        for u in self.classes:
            if u not in self.labels:
                out.append(f"class given for unknown label {u!r}")
        return out

    @property
    def t(self):
        return self.labels[0]

    def role(self, u) -> str:
        if u == self.t:
            return {Xi.O: "omega", Xi.E_NONID: "psi", Xi.E_ID: "theta"}[self.xi]
        return "theta" if self.classes[u] == "I" else "psi"

    @property
    def omega(self) -> list:
        return [u for u in self.labels if self.role(u) == "omega"]

    @property
    def psi(self) -> list:
        return [u for u in self.labels if self.role(u) == "psi"]

    @property
    def theta(self) -> list:
        return [u for u in self.labels if self.role(u) == "theta"]

    def rank(self, u) -> int:
        return self.labels.index(u)

    def lt(self, u, v) -> bool:
        return self.rank(u) < self.rank(v)

    def pairs(self) -> list[tuple]:
        return list(combinations(self.labels, 2))

    def position_pairs(self) -> list[tuple[int, int]]:
        return list(combinations(range(len(self.labels)), 2))

    def triples(self) -> list[tuple]:
        return list(combinations(self.labels, 3))


@dataclass
class BunchOfLayerGroups:
    index: KappaIndex
    groups: dict
    subgroups: dict
    homs: dict

    def structure_problems(self) -> list[str]:
        out = []
        for u in self.index.labels:
            if u not in self.groups:
                out.append(f"no group for label {u!r}")
        for u in self.index.theta:
            if u not in self.subgroups:
                out.append(f"no subgroup for split label {u!r}")
        for u, v in self.index.pairs():
            if (u, v) not in self.homs:
                out.append(f"no homomorphism {u}->{v}")
        return out


@dataclass
class BunchOfLayerAlgebras:
    index: KappaIndex
    layers: dict
    homs: dict

    def structure_problems(self) -> list[str]:
        out = [f"no layer for label {u!r}" for u in self.index.labels if u not in self.layers]
        out += [f"no layer map {u}->{v}" for u, v in self.index.pairs() if (u, v) not in self.homs]
        return out


def _merge_problems(report: Report, problems: list[str]) -> bool:
    for p in problems:
        report.fail("structure", (), p)
    return not problems


# --------------------------------------------------------------------------
# validation


def validate_bunch_groups(
    b: BunchOfLayerGroups, radius: int = DEFAULT_RADIUS, samples: int = DEFAULT_SAMPLES, seed: int = 0
) -> Report:
    r = Report("bunch-of-groups")
    if not _merge_problems(r, b.index.problems() + b.structure_problems()):
        return r
    rng = random.Random(seed)
    idx = b.index
    G = b.groups
    for u in idx.psi:
        r.check("discrete-psi-layer", G[u].discrete, (u,), "layer group of a Psi label must be discrete")
    for u in idx.theta:
        H = b.subgroups[u]
        try:
            H.check_shape(G[u])
        except ValueError as exc:
            r.fail("subgroup-shape", (u,), str(exc))
            continue
        r.check("subgroup-unit", H.contains(G[u], G[u].unit), (u,))
        for _ in range(min(samples, 100)):
            a, c = H.sample(G[u], rng, radius), H.sample(G[u], rng, radius)
            r.check("subgroup-closure",
                    H.contains(G[u], G[u].mul(a, c)) and H.contains(G[u], G[u].inv(a)), (u, a, c))
    for (u, v), h in b.homs.items():
        r.merge(hom_validate(h, radius, samples, random.Random(rng.random())), f"hom {u}->{v}")
    draws = {u: [G[u].sample(rng, radius) for _ in range(samples)] + [G[u].unit] for u in idx.labels}
    for u, v, w in idx.triples():
        for a in draws[u]:
            r.check("G1", b.homs[v, w](b.homs[u, v](a)) == b.homs[u, w](a), (u, v, w, a))
    for u, v in idx.pairs():
        h = b.homs[u, v]
        if idx.role(u) == "psi" and G[u].discrete:
            e = G[u].unit
            r.check("G2", h(e) == h(G[u].cover(e, "down")), (u, v))
        if idx.role(v) == "theta":
            for a in draws[u]:
                r.check("G3", b.subgroups[v].contains(G[v], h(a)), (u, v, a))
    return r


def validate_bunch_algebras(
    a: BunchOfLayerAlgebras, radius: int = DEFAULT_RADIUS, samples: int = DEFAULT_SAMPLES, seed: int = 0
) -> Report:
    r = Report("bunch-of-algebras")
    if not _merge_problems(r, a.index.problems() + a.structure_problems()):
        return r
    rng = random.Random(seed)
    idx = a.index
    X = a.layers
    for u in idx.labels:
        layer, role = X[u], idx.role(u)
        try:
            parity = classify_parity(layer)
        except ChainError as exc:
            r.fail("layer-kind", (u,), str(exc))
            continue
        kw = dict(rng=random.Random(seed), samples=samples, radius=radius)
        if role == "omega":
            r.check("layer-kind", parity is Parity.ODD, (u,), "Omega layer must be odd")
            r.check("layer-kind", find_cancellativity_witness(layer, **kw) is None, (u,),
                    "Omega layer must be cancellative")
        elif role == "psi":
            r.check("layer-kind", parity in (Parity.EVEN_ID, Parity.EVEN_NONID), (u,), "Psi layer must be even")
            r.check("layer-kind", find_cancellativity_witness(layer, **kw) is None, (u,),
                    "Psi layer must be cancellative")
            r.check("layer-kind", find_discreteness_witness(layer, **kw) is None, (u,),
                    "Psi layer must be discretely ordered")
        else:
            r.check("layer-kind", parity is Parity.EVEN_ID, (u,), "Theta layer must be even with idempotent falsum")
            for _ in range(samples):
                x = layer.sample(rng, radius)
                if not r.check("layer-kind", layer.mul(x, layer.complement(x)) == layer.f, (u, x),
                               "x*x' must equal the layer falsum"):
                    break
    draws = {u: [X[u].sample(rng, radius) for _ in range(samples)] + [X[u].t, X[u].f] for u in idx.labels}
    for (u, v), rho in a.homs.items():
        src, dst = X[u], X[v]
        tag = (u, v)
        try:
            r.check("layer-map-unit", rho(src.t) == dst.t, tag)
        except ChainError as exc:
            r.fail("layer-map-unit", tag, str(exc))
        pool = draws[u]
        for x, y in zip(pool, pool[1:] + pool[:1]):
            try:
                rx, ry = rho(x), rho(y)
                if not r.check("layer-map-carrier", dst.contains(rx) and dst.contains(ry), tag + (x, y)):
                    continue
                r.check("layer-map-product", rho(src.mul(x, y)) == dst.mul(rx, ry), tag + (x, y))
                r.check("layer-map-residual", rho(src.res(x, y)) == dst.res(rx, ry), tag + (x, y))
                lo, hi = (x, y) if src.leq(x, y) else (y, x)
                r.check("layer-map-order", dst.leq(rho(lo), rho(hi)), tag + (lo, hi))
            except ChainError as exc:
                r.fail("layer-map-carrier", tag + (x, y), str(exc))
        if idx.role(u) != "omega":
            r.check("A2", rho(src.t) == rho(src.f), tag)
    for u, v, w in idx.triples():
        for x in draws[u]:
            try:
                r.check("A1", a.homs[v, w](a.homs[u, v](x)) == a.homs[u, w](x), (u, v, w, x))
            except ChainError as exc:
                r.fail("A1", (u, v, w, x), str(exc))
    return r


# --------------------------------------------------------------------------
# groups <-> algebras


def _layer_map(src: Chain, dst: Chain, fn: Callable) -> Homomorphism:
    return Homomorphism.from_map(src, dst, fn)


def groups_to_algebras(g: BunchOfLayerGroups, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> BunchOfLayerAlgebras:
    idx = g.index
    layers = {}
    canon = {}
    for u in idx.labels:
        base = iota_group_to_chain(g.groups[u])
        role = idx.role(u)
        if role == "omega":
            layers[u] = base
        elif role == "psi":
            layers[u] = downshift(base, samples=samples, seed=seed)
        else:
            layers[u] = split(base, g.subgroups[u], samples=samples, seed=seed)
            canon[u] = layers[u].canonical
    homs = {}
    for u, v in idx.pairs():
        sigma = g.homs[u, v]
        if u in canon:
            h = canon[u]
            fn = lambda x, sigma=sigma, h=h: sigma(h(x))
        else:
            fn = sigma
        homs[u, v] = _layer_map(layers[u], layers[v], fn)
    return BunchOfLayerAlgebras(idx, layers, homs)


def algebras_to_groups(a: BunchOfLayerAlgebras, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> BunchOfLayerGroups:
    idx = a.index
    groups, subgroups = {}, {}
    for u in idx.labels:
        layer = a.layers[u]
        role = idx.role(u)
        if role == "omega":
            groups[u] = iota_chain_to_group(layer, samples, seed)
        elif role == "psi":
            groups[u] = iota_chain_to_group(upshift(layer, samples, seed), samples, seed)
        else:
            parts = unsplit(layer)
            groups[u] = iota_chain_to_group(parts.base, samples, seed)
            subgroups[u] = parts.subgroup
    homs = {(u, v): Homomorphism.from_map(groups[u], groups[v], a.homs[u, v]) for u, v in idx.pairs()}
    return BunchOfLayerGroups(idx, groups, subgroups, homs)


# --------------------------------------------------------------------------
# derived chain


@dataclass(frozen=True)
class ChainElement:
    layer: Hashable
    payload: Any

    def __str__(self) -> str:
        return f"{self.layer}:{format_element(self.payload)}"


class DerivedChain(Chain):
    """The involutive chain derived from a bunch of layer algebras."""

    kind = "derived-from-bunch"

    def __init__(self, bunch: BunchOfLayerAlgebras):
        self.bunch = bunch
        self.index = bunch.index
        self.layers = bunch.layers
        t = self.index.t
        self.t = ChainElement(t, self.layers[t].t)
        self.f = ChainElement(t, self.layers[t].f)

    def __repr__(self) -> str:
        return f"DerivedChain(kappa={list(self.index.labels)}, xi={self.index.xi.value})"

    def format_element(self, x) -> str:
        return str(x)

    def unit_of(self, u) -> ChainElement:
        return ChainElement(u, self.layers[u].t)

    def lift(self, x: ChainElement, v) -> Any:
        """Payload of the image of ``x`` in layer ``v`` (identity unless ``v`` is higher)."""
        u = x.layer
        if self.index.lt(u, v):
            return self.bunch.homs[u, v](x.payload)
        return x.payload

    def contains(self, x) -> bool:
        return (
            isinstance(x, ChainElement)
            and x.layer in self.layers
            and self.layers[x.layer].contains(x.payload)
        )

    def _leq(self, x, y):
        u, v = x.layer, y.layer
        if u == v:
            return self.layers[u].leq(x.payload, y.payload)
        if self.index.lt(u, v):
            return self.layers[v].leq(self.lift(x, v), y.payload)
        return self.layers[u].lt(x.payload, self.lift(y, u))

    def _top(self, u, v):
        return v if self.index.lt(u, v) else u

    def _mul(self, x, y):
        w = self._top(x.layer, y.layer)
        return ChainElement(w, self.layers[w].mul(self.lift(x, w), self.lift(y, w)))

    def _complement(self, x):
        return ChainElement(x.layer, self.layers[x.layer].complement(x.payload))

    def _neighbor(self, x, up: bool):
        u = x.layer
        ri = self.index.rank(u)
        candidates = []
        layer = self.layers[u]
        same = layer.up(x.payload) if up else layer.down(x.payload)
        if same != x.payload:
            candidates.append(ChainElement(u, same))
        for v in self.index.labels[ri + 1:]:
            z = self.lift(x, v)
            if up:
                candidates.append(ChainElement(v, z))
            else:
                d = self.layers[v].down(z)
                if d != z:
                    candidates.append(ChainElement(v, d))
                elif self.layers[v].elements() is None:
                    raise NotComputable(f"cocover of {x} in layer {v} not computable")
        for w in self.index.labels[:ri]:
            elems = self.layers[w].elements()
            if elems is None:
                raise NotComputable(f"neighbor of {x} across infinite lower layer {w}")
            for p in elems:
                e = ChainElement(w, p)
                if (self.lt(x, e) if up else self.lt(e, x)):
                    candidates.append(e)
        if not candidates:
            return x
        best = candidates[0]
        for e in candidates[1:]:
            if (self.lt(e, best) if up else self.lt(best, e)):
                best = e
        return best

    def _up(self, x):
        return self._neighbor(x, True)

    def _down(self, x):
        return self._neighbor(x, False)

    def sample(self, rng, radius=DEFAULT_RADIUS):
        labels = self.index.labels
        i = rng.randrange(len(labels))
        v = labels[i]
        if i > 0 and rng.random() < 0.3:
            # push a lower-layer element up so that boundary comparisons occur
            lower = ChainElement(labels[rng.randrange(i)], None)
            lower = ChainElement(lower.layer, self.layers[lower.layer].sample(rng, radius))
            p = self.lift(lower, v)
            if rng.random() < 0.5:
                p = self.layers[v].up(p) if rng.random() < 0.5 else self.layers[v].down(p)
            return ChainElement(v, p)
        return ChainElement(v, self.layers[v].sample(rng, radius))

    def window(self, radius):
        return [ChainElement(u, p) for u in self.index.labels for p in self.layers[u].window(radius)]

    def elements(self):
        out = []
        for u in self.index.labels:
            elems = self.layers[u].elements()
            if elems is None:
                return None
            out.extend(ChainElement(u, p) for p in elems)
        return out


def derive_chain(a: BunchOfLayerAlgebras) -> Chain:
    """The chain of a bunch; a single-layer bunch yields its layer verbatim."""
    if len(a.index.labels) == 1:
        return a.layers[a.index.t]
    return DerivedChain(a)


# --------------------------------------------------------------------------
# decomposition


class LayerView(Chain):
    """The layer ``{x : tau(x) = u}`` of a chain, with falsum u' and
    complement x -> (x -> u'), computed through the ambient operations.

    ``wrap``/``unwrap`` translate between layer payloads and ambient
    elements. ``source`` (derived chains only) supplies neighbours and
    sampling; otherwise the layer is finite and both are computed by search.
    """

    kind = "layer"

    def __init__(self, ambient: Chain, unit, wrap, unwrap, members: list | None = None, source: Chain | None = None):
        self.ambient = ambient
        self.wrap, self.unwrap = wrap, unwrap
        self.members = members
        self.member_set = None if members is None else set(members)
        self.source = source
        self.unit_elem = unit
        self.falsum_elem = ambient.complement(unit)
        self.t = unwrap(unit)
        self.f = unwrap(self.falsum_elem)

    def __repr__(self) -> str:
        return f"LayerView({self.ambient.format_element(self.unit_elem)})"

    def contains(self, p) -> bool:
        if self.member_set is not None:
            return p in self.member_set
        return self.source.contains(p)

    def _leq(self, p, q):
        return self.ambient.leq(self.wrap(p), self.wrap(q))

    def _mul(self, p, q):
        return self.unwrap(self.ambient.mul(self.wrap(p), self.wrap(q)))

    def _complement(self, p):
        return self.unwrap(self.ambient.res(self.wrap(p), self.falsum_elem))

    def _up(self, p):
        if self.members is None:
            return self.source.up(p)
        i = self.members.index(p)
        return self.members[min(i + 1, len(self.members) - 1)]

    def _down(self, p):
        if self.members is None:
            return self.source.down(p)
        i = self.members.index(p)
        return self.members[max(i - 1, 0)]

    def sample(self, rng, radius=DEFAULT_RADIUS):
        if self.members is None:
            return self.source.sample(rng, radius)
        return rng.choice(self.members)

    def window(self, radius):
        return list(self.members) if self.members is not None else self.source.window(radius)

    def elements(self):
        return list(self.members) if self.members is not None else self.source.elements()


def _identity(x):
    return x


def decompose_chain(
    c: Chain, radius: int = DEFAULT_RADIUS, samples: int = DEFAULT_SAMPLES, seed: int = 0
) -> BunchOfLayerAlgebras:
    """The bunch of layer algebras of an odd or even chain.

    Finite chains are decomposed exactly (tau is computed for every element,
    labels are the layer units). Derived chains are decomposed along their
    layer tags, which are checked against tau on samples. Any other infinite
    chain must be single-layered (tau identically t on samples).
    """
    parity = classify_parity(c)
    xi = XI_OF_PARITY[parity]
    rng = random.Random(seed)
    elems = c.elements()
    if isinstance(c, DerivedChain):
        labels = list(c.index.labels)
        pool = elems if elems is not None else [c.sample(rng, radius) for _ in range(samples)]
        for x in pool:
            if c.tau(x) != c.unit_of(x.layer):
                raise ChainError(f"layer tag of {x} disagrees with its local unit {c.tau(x)}")
        views = {}
        unit_of = {}
        for u in labels:
            unit_of[u] = c.unit_of(u)
            views[u] = LayerView(
                c, unit_of[u],
                wrap=lambda p, u=u: ChainElement(u, p),
                unwrap=lambda e: e.payload,
                source=c.layers[u],
            )
    elif elems is not None:
        suite = run_law_suite(c, radius, samples, seed, exhaustive=len(elems) <= 12)
        if not suite.ok:
            raise ChainError("finite chain fails the law suite:\n" + suite.format())
        by_unit: dict = {}
        for x in c.sorted(elems):
            by_unit.setdefault(c.tau(x), []).append(x)
        units = c.sorted(by_unit)
        labels = units if isinstance(c, TableChain) else list(range(len(units)))
        views = {
            lab: LayerView(c, u, _identity, _identity, members=by_unit[u]) for lab, u in zip(labels, units)
        }
        unit_of = dict(zip(labels, units))
    else:
        for _ in range(samples):
            x = c.sample(rng, radius)
            if c.tau(x) != c.t:
                raise ChainError(
                    f"decomposition of multi-layer {c.kind} chains is not supported ({x!r} has local unit {c.tau(x)!r})"
                )
        labels = ["t"]
        unit_of = {"t": c.t}
        views = {"t": LayerView(c, c.t, _identity, _identity, source=c)}
    t = labels[0]
    classes = {}
    for u in labels[1:]:
        neg = c.complement(unit_of[u])
        classes[u] = "I" if c.mul(neg, neg) == neg else "J"
    index = KappaIndex(tuple(labels), classes, xi)
    homs = {}
    for u, v in index.pairs():
        vu = unit_of[v]
        src, dst = views[u], views[v]
        fn = lambda p, vu=vu, src=src, dst=dst: dst.unwrap(c.mul(vu, src.wrap(p)))
        homs[u, v] = Homomorphism.from_map(src, dst, fn)
    return BunchOfLayerAlgebras(index, views, homs)


# --------------------------------------------------------------------------
# round trips


def derived_embedding(c: Chain, d: Chain) -> Callable:
    """Element map from ``c`` into ``derive_chain(decompose_chain(c))``."""
    if isinstance(d, DerivedChain) and not isinstance(c, DerivedChain):
        units = {d.layers[u].t: u for u in d.index.labels}
        return lambda x: ChainElement(units[c.tau(x)], x)
    return _identity


def split_layer_maps(a: BunchOfLayerAlgebras) -> dict:
    """Per-position element maps from ``a``'s split layers into their re-splits."""
    phis = {}
    for i, u in enumerate(a.index.labels):
        if a.index.role(u) == "theta":
            layer = a.layers[u]
            phis[i] = split_embedding(layer, ProjectedChain(layer))
    return phis


def roundtrip_chain(c: Chain, radius=DEFAULT_RADIUS, samples=DEFAULT_SAMPLES, seed=0) -> Report:
    """derive(decompose(c)) agrees with c."""
    r = Report("derive-after-decompose")
    d = derive_chain(decompose_chain(c, radius, samples, seed))
    if isinstance(c, TableChain):
        same = chain_to_table(d) == c.table
        r.check("table-identity", same, ())
        return r
    r.merge(agreement.chains_agree(c, d, derived_embedding(c, d), samples=samples, radius=radius, seed=seed),
            "elementwise")
    return r


def roundtrip_algebras(a: BunchOfLayerAlgebras, radius=DEFAULT_RADIUS, samples=DEFAULT_SAMPLES, seed=0) -> Report:
    """decompose(derive(a)) agrees with a."""
    back = decompose_chain(derive_chain(a), radius, samples, seed)
    return agreement.algebra_bunches_agree(a, back, samples=samples, radius=radius, seed=seed,
                                           name="decompose-after-derive")


def roundtrip_groups(g: BunchOfLayerGroups, radius=DEFAULT_RADIUS, samples=DEFAULT_SAMPLES, seed=0) -> Report:
    """algebras_to_groups(groups_to_algebras(g)) agrees with g."""
    back = algebras_to_groups(groups_to_algebras(g, samples, seed), samples, seed)
    return agreement.group_bunches_agree(g, back, samples, radius, seed, name="groups-after-algebras")


def roundtrip_layer_algebras(a: BunchOfLayerAlgebras, radius=DEFAULT_RADIUS, samples=DEFAULT_SAMPLES,
                             seed=0) -> Report:
    """groups_to_algebras(algebras_to_groups(a)) agrees with a."""
    back = groups_to_algebras(algebras_to_groups(a, samples, seed), samples, seed)
    return agreement.algebra_bunches_agree(a, back, split_layer_maps(a), samples, radius, seed,
                                           name="algebras-after-groups")


def verify_main_theorem(
    g: BunchOfLayerGroups, radius: int = DEFAULT_RADIUS, samples: int = DEFAULT_SAMPLES, seed: int = 0
) -> Report:
    """Build the chain of ``g``, check it, decompose it and recover ``g``."""
    r = Report("main-theorem")
    v = validate_bunch_groups(g, radius, samples, seed)
    r.merge(v, "groups")
    if not v.ok:
        return r
    try:
        a = groups_to_algebras(g, samples, seed)
        r.merge(validate_bunch_algebras(a, radius, samples, seed), "algebras")
        x = derive_chain(a)
        r.merge(run_law_suite(x, radius, samples, seed), "laws")
        parity = classify_parity(x)
        r.check("parity", parity is PARITY_OF_XI[g.index.xi], (parity.value, g.index.xi.value))
        back = algebras_to_groups(decompose_chain(x, radius, samples, seed), samples, seed)
        r.merge(agreement.group_bunches_agree(g, back, samples, radius, seed), "recovered")
    except (ChainError, BunchError) as exc:
        r.fail("construction", (), str(exc))
    return r


def trivial_group_bunches(size: int, xi: Xi) -> list[BunchOfLayerGroups]:
    """Every structurally valid bunch of one-element groups with ``size`` labels."""
    from .ogroup import OrderedGroup

    Z0 = OrderedGroup(0)
    labels = ("t",) + tuple(f"u{i}" for i in range(1, size))
    out = []
    for cls in product("IJ", repeat=size - 1):
        idx = KappaIndex(labels, dict(zip(labels[1:], cls)), xi)
        out.append(BunchOfLayerGroups(
            idx,
            {u: Z0 for u in labels},
            {u: Subgroup.full() for u in idx.theta},
            {(u, v): Homomorphism.trivial(Z0, Z0) for u, v in idx.pairs()},
        ))
    return out
