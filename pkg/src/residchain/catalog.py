"""Named example bunches and chains used by the tests, the CLI and the
acceptance suite."""

from __future__ import annotations

from typing import Callable

from .bunch import BunchOfLayerGroups, KappaIndex, Xi, derive_chain, groups_to_algebras
from .convert import Subgroup, downshift, iota_group_to_chain, split
from .flechain import Chain
from .ogroup import Homomorphism, OrderedGroup

Z0, Z1, Z2 = OrderedGroup(0), OrderedGroup(1), OrderedGroup(2)


def _labels(size: int) -> tuple:
    return ("t",) + tuple(f"u{i}" for i in range(1, size))


def single_group(rank: int = 1) -> BunchOfLayerGroups:
    """One odd layer: the group Z^rank itself."""
    return BunchOfLayerGroups(KappaIndex(("t",), {}, Xi.O), {"t": OrderedGroup(rank)}, {}, {})


def downshifted_group(rank: int = 1) -> BunchOfLayerGroups:
    """One even layer with a non-idempotent falsum: Z^rank downshifted."""
    return BunchOfLayerGroups(KappaIndex(("t",), {}, Xi.E_NONID), {"t": OrderedGroup(rank)}, {}, {})


def split_group(rank: int = 1, subgroup: Subgroup | None = None) -> BunchOfLayerGroups:
    """One even layer with an idempotent falsum: Z^rank split along ``subgroup``."""
    return BunchOfLayerGroups(
        KappaIndex(("t",), {}, Xi.E_ID), {"t": OrderedGroup(rank)}, {"t": subgroup or Subgroup.full()}, {}
    )


def _sugihara(size: int, xi: Xi) -> BunchOfLayerGroups:
    labels = _labels(size)
    idx = KappaIndex(labels, {u: "I" for u in labels[1:]}, xi)
    return BunchOfLayerGroups(
        idx,
        {u: Z0 for u in labels},
        {u: Subgroup.trivial() for u in idx.theta},
        {(u, v): Homomorphism.trivial(Z0, Z0) for u, v in idx.pairs()},
    )


def odd_sugihara(size: int) -> BunchOfLayerGroups:
    """|kappa| = size, trivial groups: the odd Sugihara chain on 2*size-1 elements."""
    return _sugihara(size, Xi.O)


def even_sugihara(size: int) -> BunchOfLayerGroups:
    """|kappa| = size, trivial groups: the even Sugihara chain on 2*size elements."""
    return _sugihara(size, Xi.E_ID)


def mixed_odd() -> BunchOfLayerGroups:
    """Z below a discrete Z^2 layer below a split Z layer."""
    idx = KappaIndex(("t", "u", "v"), {"u": "J", "v": "I"}, Xi.O)
    return BunchOfLayerGroups(
        idx,
        {"t": Z1, "u": Z2, "v": Z1},
        {"v": Subgroup.full()},
        {
            ("t", "u"): Homomorphism.matrix(Z1, Z2, [[1], [0]]),
            ("u", "v"): Homomorphism.truncate(Z2, 1),
            ("t", "v"): Homomorphism.identity(Z1),
        },
    )


def mixed_even_nonid() -> BunchOfLayerGroups:
    """Downshifted Z^2 below Z^2 split along its first coordinate."""
    idx = KappaIndex(("t", "u"), {"u": "I"}, Xi.E_NONID)
    return BunchOfLayerGroups(
        idx,
        {"t": Z2, "u": Z2},
        {"u": Subgroup.prefix(1)},
        {("t", "u"): Homomorphism.matrix(Z2, Z2, [[1, 0], [0, 0]])},
    )


def mixed_even_id() -> BunchOfLayerGroups:
    """Z split at its unit only, below a discrete Z^2 layer, below a prefix-split Z^2."""
    idx = KappaIndex(("t", "u", "v"), {"u": "J", "v": "I"}, Xi.E_ID)
    return BunchOfLayerGroups(
        idx,
        {"t": Z1, "u": Z2, "v": Z2},
        {"t": Subgroup.trivial(), "v": Subgroup.prefix(1)},
        {
            ("t", "u"): Homomorphism.matrix(Z1, Z2, [[1], [0]]),
            ("u", "v"): Homomorphism.matrix(Z2, Z2, [[1, 0], [0, 0]]),
            ("t", "v"): Homomorphism.matrix(Z1, Z2, [[1], [0]]),
        },
    )


def catalog_bunches() -> dict[str, BunchOfLayerGroups]:
    out = {
        "Z": single_group(1),
        "Z^2": single_group(2),
        "Z-downshifted": downshifted_group(1),
        "Z-split": split_group(1),
        "one-split": split_group(0),
    }
    for m in (1, 2, 3):
        out[f"odd-sugihara-{m}"] = odd_sugihara(m)
        out[f"even-sugihara-{m}"] = even_sugihara(m)
    out["mixed-odd"] = mixed_odd()
    out["mixed-even-nonid"] = mixed_even_nonid()
    out["mixed-even-id"] = mixed_even_id()
    return out


def catalog_chains() -> dict[str, Callable[[], Chain]]:
    """Chains built directly by the conversions, plus the chains derived from
    every catalog bunch."""
    out: dict[str, Callable[[], Chain]] = {
        "iota(Z)": lambda: iota_group_to_chain(Z1),
        "iota(Z^2)": lambda: iota_group_to_chain(Z2),
        "iota(Z)-down": lambda: downshift(iota_group_to_chain(Z1)),
        "split(iota(Z),Z)": lambda: split(iota_group_to_chain(Z1), Subgroup.full()),
        "split(iota(1),1)": lambda: split(iota_group_to_chain(Z0), Subgroup.full()),
    }
    for name, b in catalog_bunches().items():
        out[f"derived {name}"] = lambda b=b: derive_chain(groups_to_algebras(b))
    return out
