"""Acceptance suite: one test per criterion, each recording a PASS/FAIL line.

The lines are printed in the pytest terminal summary (see conftest.py) and
when the file is run as a script.
"""

import random

from residchain import catalog
from residchain import bunch as bn
from residchain.agreement import chains_agree, subgroups_agree
from residchain.convert import Dotted, Subgroup, downshift, iota_group_to_chain, split, split_embedding, unsplit, upshift
from residchain.flechain import FiniteChainTable, Parity, TableChain, classify_parity, run_law_suite
from residchain.ogroup import Homomorphism, OrderedGroup
from residchain.oracle import SearchConfig, cross_check, enumerate_finite_chains

SAMPLES, RADIUS = 500, 8
KEY_LAWS = ("adjointness", "involutivity", "strict-bimonotonicity", "tau-of-terms")
RESULTS: dict[int, str] = {}


def record(n: int, title: str, failures: list[str]) -> None:
    status = "FAIL" if failures else "PASS"
    line = f"{status} criterion {n}: {title}"
    if failures:
        line += " [" + "; ".join(failures[:5]) + "]"
    RESULTS[n] = line
    print(line)
    assert not failures, line


def test_criterion_1_law_suite():
    failures = []
    chains = catalog.catalog_chains()
    for name, make in chains.items():
        c = make()
        classify_parity(c)  # odd or even, so the parity laws run
        r = run_law_suite(c, radius=RADIUS, samples=SAMPLES)
        bad = {law for law in r.violated_laws() if law in KEY_LAWS}
        if not r.ok:
            failures.append(f"{name}: {sorted(r.violated_laws())}")
        elif bad:
            failures.append(f"{name}: {sorted(bad)}")
    record(1, f"law suite on {len(chains)} catalog chains, {SAMPLES} samples, radius {RADIUS}", failures)


def test_criterion_2_round_trips():
    failures = []
    kw = dict(samples=SAMPLES, radius=RADIUS)
    for rank in (1, 2):
        x = iota_group_to_chain(OrderedGroup(rank))
        d = downshift(x)
        if not chains_agree(x, upshift(d), **kw).ok:
            failures.append(f"upshift.downshift Z^{rank}")
        if not chains_agree(d, downshift(upshift(d)), **kw).ok:
            failures.append(f"downshift.upshift Z^{rank}")
    for rank, sub in [(0, Subgroup.full()), (1, Subgroup.full()), (1, Subgroup.trivial()), (2, Subgroup.prefix(1))]:
        x = iota_group_to_chain(OrderedGroup(rank))
        y = split(x, sub)
        parts = unsplit(y)
        if not (chains_agree(x, parts.base, **kw).ok and subgroups_agree(x, sub, parts.base, parts.subgroup, **kw).ok):
            failures.append(f"unsplit.split Z^{rank}/{sub.describe()}")
        if not chains_agree(y, split(parts.base, parts.subgroup), split_embedding(y, parts.base), **kw).ok:
            failures.append(f"split.unsplit Z^{rank}/{sub.describe()}")
    bunches = catalog.catalog_bunches()
    for name, g in bunches.items():
        a = bn.groups_to_algebras(g)
        for label, r in [("theorem", bn.verify_main_theorem(g, **kw)),
                         ("groups", bn.roundtrip_groups(g, **kw)),
                         ("layer-algebras", bn.roundtrip_layer_algebras(a, **kw)),
                         ("algebras", bn.roundtrip_algebras(a, **kw)),
                         ("chain", bn.roundtrip_chain(bn.derive_chain(a), **kw))]:
            if not r.ok:
                failures.append(f"{name} {label}: {sorted(r.violated_laws())[:3]}")
    record(2, f"round trips and theorem check on {len(bunches)} catalog bunches", failures)


def test_criterion_3_oracle_counts():
    failures = []
    expected = {Parity.ODD: {1: 1, 3: 1, 5: 1, 7: 1}, Parity.EVEN_ID: {2: 1, 4: 1, 6: 1, 8: 1},
                Parity.EVEN_NONID: {n: 0 for n in range(1, 9)}}
    for parity, counts in expected.items():
        for n, want in counts.items():
            cfg = SearchConfig(n, parity)
            tables = enumerate_finite_chains(cfg)
            if len(tables) != want:
                failures.append(f"n={n} {parity.value}: {len(tables)} != {want}")
            r = cross_check(cfg, tables)
            if not r.ok:
                failures.append(f"n={n} {parity.value}: {sorted(r.violated_laws())[:3]}")
    record(3, "oracle counts match frozen values and bunch catalog, rederivation bit-exact", failures)


def test_criterion_4_split_spot_checks():
    failures = []
    b = split(iota_group_to_chain(OrderedGroup(0)), Subgroup.full())
    bool2 = TableChain(FiniteChainTable.from_rows([[0, 0], [0, 1]], 1, 0))
    if b.sorted(b.elements()) != [Dotted(()), ()]:
        failures.append("Sp(1,1) carrier")
    if not chains_agree(b, bool2, {Dotted(()): 0, (): 1}.get, {0: Dotted(()), 1: ()}.get).ok:
        failures.append("Sp(1,1) is not the Boolean chain")

    y = split(iota_group_to_chain(OrderedGroup(1)), Subgroup.full())
    rng = random.Random(0)
    for _ in range(SAMPLES):
        x = y.sample(rng, RADIUS)
        if y.mul(x, y.complement(x)) != y.f:
            failures.append(f"x*x' != f at {x}")
            break

    # invertibles: only group inverses of h(x), plain or dotted, can multiply x to t
    for sub in (Subgroup.prefix(1), Subgroup.trivial(), Subgroup.full()):
        y = split(iota_group_to_chain(OrderedGroup(2)), sub)
        for _ in range(SAMPLES):
            x = y.sample(rng, RADIUS)
            inv = y.base.res(y.canonical(x), y.t)
            invertible = any(y.contains(w) and y.mul(x, w) == y.t for w in (inv, Dotted(inv)))
            if invertible != y.in_h(x):
                failures.append(f"invertibility of {x} under {sub.describe()}")
                break
    record(4, "split is Boolean on the one-element group, x*x' = dotted t, invertibles = H", failures)


def test_criterion_5_mutation_sensitivity():
    failures = []
    s3 = enumerate_finite_chains(SearchConfig(3))[0]
    for i in range(3):
        for j in range(3):
            for v in range(3):
                if v != s3.mul[i][j] and run_law_suite(TableChain(s3.with_cell(i, j, v))).ok:
                    failures.append(f"cell ({i},{j})={v} undetected")
    g = catalog.mixed_odd()
    g.homs["t", "v"] = Homomorphism.matrix(OrderedGroup(1), OrderedGroup(1), [[2]])
    if "G1" not in bn.validate_bunch_groups(g).violated_laws():
        failures.append("corrupted group hom: no G1")
    a = bn.groups_to_algebras(catalog.mixed_odd())
    rho = a.homs["t", "v"]
    a.homs["t", "v"] = Homomorphism.from_map(rho.source, rho.target, lambda x: (x[0] + 1,))
    if "A1" not in bn.validate_bunch_algebras(a).violated_laws():
        failures.append("corrupted algebra hom: no A1")
    record(5, "every single-cell corruption of the 3-element chain and corrupted homs are reported", failures)


if __name__ == "__main__":
    for test in (test_criterion_1_law_suite, test_criterion_2_round_trips, test_criterion_3_oracle_counts,
                 test_criterion_4_split_spot_checks, test_criterion_5_mutation_sensitivity):
        try:
            test()
        except AssertionError:
            pass
