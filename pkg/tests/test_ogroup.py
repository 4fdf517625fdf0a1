import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from residchain.ogroup import (
    Cmp,
    GroupError,
    Homomorphism,
    NoNeighbor,
    OrderedGroup,
    group_cmp,
    group_cover,
    group_inv,
    group_mul,
    hom_apply,
    hom_validate,
)

Z0, Z1, Z2 = OrderedGroup(0), OrderedGroup(1), OrderedGroup(2)


def elems(rank, lim=50):
    return st.tuples(*[st.integers(-lim, lim)] * rank)


def test_mul_examples():
    assert group_mul(Z1, (2,), (3,)) == (5,)
    assert group_mul(Z2, (1, 5), (0, -2)) == (1, 3)
    assert group_mul(Z0, (), ()) == ()


def test_inv_examples():
    assert group_inv(Z1, (4,)) == (-4,)
    assert group_inv(Z2, (1, -2)) == (-1, 2)
    assert group_inv(Z0, ()) == ()


def test_cmp_is_lexicographic():
    assert group_cmp(Z2, (0, 7), (1, -100)) is Cmp.LT
    assert group_cmp(Z1, (3,), (3,)) is Cmp.EQ
    assert group_cmp(Z2, (2, 0), (1, 999)) is Cmp.GT


def test_cover():
    assert group_cover(Z1, (3,), "up") == (4,)
    assert group_cover(Z2, (5, 0), "down") == (5, -1)
    with pytest.raises(NoNeighbor):
        group_cover(Z0, (), "up")


def test_rank_mismatch_rejected():
    with pytest.raises(GroupError):
        group_mul(Z2, (1,), (1, 2))
    with pytest.raises(GroupError):
        group_cmp(Z1, (1, 0), (1,))


def test_discreteness():
    assert Z1.discrete and Z2.discrete
    assert not Z0.discrete
    assert Z2.cover(Z2.unit) == (0, 1)


def test_hom_apply_examples():
    assert hom_apply(Homomorphism.trivial(Z1, Z0), (17,)) == ()
    assert hom_apply(Homomorphism.truncate(Z2, 1), (3, 9)) == (3,)
    assert hom_apply(Homomorphism.matrix(Z1, Z1, [[2]]), (3,)) == (6,)


def test_hom_shape_errors():
    with pytest.raises(GroupError):
        Homomorphism.matrix(Z1, Z2, [[1, 0]])
    with pytest.raises(GroupError):
        Homomorphism(Z1, Z2, "truncate", 2)
    with pytest.raises(GroupError):
        Homomorphism.identity(Z1)((1, 2))


def test_hom_validate_examples():
    r = hom_validate(Homomorphism.identity(Z2), radius=10)
    assert r.ok and "structural" in r.notes[0]
    r = hom_validate(Homomorphism.matrix(Z1, Z1, [[-1]]))
    assert not r.ok and "order-preserving" in r.violated_laws()
    assert hom_validate(Homomorphism.matrix(Z2, Z2, [[1, 0], [0, 1]])).ok


def test_hom_validate_catches_second_coordinate_reversal():
    # (a, b) -> (a, -b) preserves the first coordinate only
    r = hom_validate(Homomorphism.matrix(Z2, Z2, [[1, 0], [0, -1]]))
    assert "order-preserving" in r.violated_laws()


def test_hom_validate_rejects_radius_zero():
    with pytest.raises(ValueError):
        hom_validate(Homomorphism.matrix(Z1, Z1, [[1]]), radius=0)


def test_composition_matches_pointwise():
    a = Homomorphism.matrix(Z1, Z2, [[1], [3]])
    b = Homomorphism.truncate(Z2, 1)
    ab = a.then(b)
    assert ab.kind == "matrix"
    for x in range(-5, 6):
        assert ab((x,)) == b(a((x,)))
    assert Homomorphism.trivial(Z1, Z2).then(b)((7,)) == (0,)


@given(elems(2), elems(2), elems(2))
def test_group_laws(a, b, c):
    assert group_mul(Z2, group_mul(Z2, a, b), c) == group_mul(Z2, a, group_mul(Z2, b, c))
    assert group_mul(Z2, a, b) == group_mul(Z2, b, a)
    assert group_mul(Z2, a, Z2.unit) == a
    assert group_mul(Z2, a, group_inv(Z2, a)) == Z2.unit


@given(elems(2), elems(2), elems(2))
def test_order_is_translation_invariant(a, b, c):
    assert Z2.leq(a, b) == Z2.leq(group_mul(Z2, a, c), group_mul(Z2, b, c))


@given(elems(2), elems(2))
def test_nothing_between_element_and_its_covers(a, b):
    up, down = Z2.cover(a, "up"), Z2.cover(a, "down")
    assert Z2.lt(down, a) and Z2.lt(a, up)
    assert not (Z2.lt(a, b) and Z2.lt(b, up))
    assert not (Z2.lt(down, b) and Z2.lt(b, a))


def test_window_and_sample_stay_in_range():
    assert len(Z2.window(1)) == 9
    rng = random.Random(3)
    for _ in range(50):
        assert all(-4 <= x <= 4 for x in Z2.sample(rng, 4))
