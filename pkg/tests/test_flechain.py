import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from residchain.bunch import derive_chain, groups_to_algebras
from residchain.catalog import odd_sugihara
from residchain.convert import iota_group_to_chain
from residchain.flechain import (
    ChainError,
    FiniteChainTable,
    ForeignElement,
    Parity,
    TableChain,
    UnsupportedParity,
    chain_leq,
    chain_mul,
    chain_res,
    chain_to_table,
    classify_parity,
    run_law_suite,
    tau,
)
from residchain.ogroup import OrderedGroup

# the unique 3-element odd chain, as found by the enumeration oracle
S3_TEXT = "3 1 1\n0 0 0\n0 1 2\n0 2 2\n"
S3 = FiniteChainTable.from_text(S3_TEXT)


@pytest.fixture
def z():
    return iota_group_to_chain(OrderedGroup(1))


@pytest.fixture
def s3_derived():
    return derive_chain(groups_to_algebras(odd_sugihara(2)))


def test_table_text_round_trip():
    assert S3.to_text() == S3_TEXT
    assert FiniteChainTable.from_text("# comment\n" + S3_TEXT) == S3


@pytest.mark.parametrize("text", ["", "3 1\n", "2 0 0\n0 0\n", "2 0 0\n0 0\n0 5\n", "2 0 0\n0 x\n0 1\n"])
def test_table_text_errors(text):
    with pytest.raises(ChainError):
        FiniteChainTable.from_text(text)


def test_induced_z_examples(z):
    assert chain_leq(z, (2,), (5,))
    assert chain_mul(z, (2,), (3,)) == (5,)
    assert chain_res(z, (2,), (5,)) == (3,)
    assert tau(z, (5,)) == (0,)
    assert classify_parity(z) is Parity.ODD


def test_res_with_unit(z):
    for y in [(-3,), (0,), (8,)]:
        assert chain_res(z, z.t, y) == y
    c = TableChain(S3)
    for y in range(3):
        assert chain_res(c, c.t, y) == y


def test_foreign_elements_rejected(z):
    with pytest.raises(ForeignElement):
        z.mul((1, 2), (0,))
    with pytest.raises(ForeignElement):
        TableChain(S3).leq(0, 3)


def test_s3_derived_order_and_products(s3_derived):
    c = s3_derived
    top, dot = c.window(0)[1], c.window(0)[2]
    top, dot = (top, dot) if c.lt(dot, top) else (dot, top)
    assert c.lt(dot, c.t) and c.lt(c.t, top)
    assert c.mul(top, dot) == dot
    assert c.mul(top, top) == top
    assert c.mul(dot, dot) == dot
    assert c.res(dot, dot) == top
    assert c.tau(dot) == top
    assert c.complement(c.t) == c.t
    assert c.complement(top) == dot
    assert chain_to_table(c) == S3


def test_s3_table_tau_and_search():
    c = TableChain(S3)
    assert c.tau(0) == 2
    assert c.res_search(0, 0) == c.res(0, 0) == 2
    assert classify_parity(c) is Parity.ODD


def test_parity_examples():
    bool2 = TableChain(FiniteChainTable.from_rows([[0, 0], [0, 1]], 1, 0))
    assert classify_parity(bool2) is Parity.EVEN_ID


def test_unsupported_parity():
    # 3-element chain with t at the top: t' = bottom is neither t nor t's cocover
    c = TableChain(FiniteChainTable.from_rows([[0, 0, 0], [0, 0, 1], [0, 1, 2]], 2, 0))
    with pytest.raises(UnsupportedParity):
        classify_parity(c)


def test_law_suite_on_z(z):
    r = run_law_suite(z, radius=8, samples=500)
    assert r.ok, r.format()


def test_law_suite_on_s3_is_exhaustive():
    r = run_law_suite(TableChain(S3))
    assert r.ok
    assert "exhaustive" in r.notes[0]


def test_corrupted_cell_reports_adjointness():
    bad = S3.with_cell(1, 2, 1)
    r = run_law_suite(TableChain(bad))
    assert "adjointness" in r.violated_laws()


def test_report_summary_line():
    r = run_law_suite(TableChain(S3.with_cell(2, 2, 1)))
    assert r.summary_line().startswith("FAIL laws[finite-table] ")
    assert r.summary_line() == f"FAIL laws[finite-table] {r.total_violations}"


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_s3_tau_properties(x, y, z_):
    c = TableChain(S3)
    u = c.tau(x)
    assert c.mul(u, u) == u and c.leq(c.t, u) and c.mul(u, x) == x
    assert c.tau(c.mul(x, y)) == c.max([c.tau(x), c.tau(y)])
    assert c.tau(x) == c.tau(c.complement(x))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_law_suite_seeds_agree_on_z2(seed):
    c = iota_group_to_chain(OrderedGroup(2))
    assert run_law_suite(c, samples=30, seed=seed).ok


def test_sampled_triples_span_window(z):
    rng = random.Random(1)
    xs = {z.sample(rng, 2) for _ in range(200)}
    assert xs == set(z.window(2))
