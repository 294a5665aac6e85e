import itertools

import pytest
from hypothesis import given, strategies as st

from x8twists.cocycle import (EXPECTED_COCYCLE, LEMMA_IDS, S_GENS, V, V_PRIME, M, all_reports,
                              cocycle_matrix, gl2, group_orders, identity, sign_action_tables,
                              sl2, subgroup_H, subgroup_H_prime, verify_group_lemma)

GL8 = gl2(8)
units = st.sampled_from(GL8)


def test_group_orders():
    orders = group_orders()
    assert orders["GL2(Z/8)"] == 1536 == 2 ** 8 * 6
    assert orders["SL2(Z/8)"] == 384 == 8 ** 3 * 3 // 4
    assert orders["H"] == 8


@pytest.mark.parametrize("lemma_id", LEMMA_IDS)
def test_each_group_check_passes(lemma_id):
    rep = verify_group_lemma(lemma_id)
    assert rep.passed, rep.details


def test_unknown_id():
    with pytest.raises(ValueError, match="unknown"):
        verify_group_lemma("L9.9")


def test_commutant_of_diag_5_1():
    d = M(8, 5, 0, 0, 1)
    comm = [g for g in GL8 if g * d == d * g]
    assert all(g.b % 2 == 0 and g.c % 2 == 0 for g in comm)
    assert len(comm) == sum(1 for g in GL8 if g.b % 2 == 0 and g.c % 2 == 0)


def test_cocycle_matrices():
    expect = {"s1": M(8, 1, 4, 4, 1), "s2": identity(8), "s3": M(8, 3, 4, 4, 3),
              "s4": M(8, 1, 0, 4, 1)}
    for name, s in S_GENS.items():
        assert cocycle_matrix(s).modpm() == expect[name].modpm(), name


def test_v_prime_lifts_v():
    assert V_PRIME.det() == 7
    assert V_PRIME.reduce(4, pm=False) == V


def test_H_is_elementary_abelian_of_order_8():
    H = subgroup_H()
    assert len(H) == 8
    one = identity(8, pm=True)
    for g, h in itertools.product(H, repeat=2):
        assert g * h == h * g
        assert (g * h) in H
    assert all(g * g == one for g in H)


def test_H_prime_is_abelian_and_det_surjects():
    Hp = subgroup_H_prime()
    assert all(g * h == h * g for g, h in itertools.product(Hp, repeat=2))
    assert {g.det() for g in Hp} == {1, 3, 5, 7}


def test_sign_tables():
    t = sign_action_tables()
    assert t.passed, t.mismatches
    assert t.ratios["s4"] == (1, -1, 1)
    assert t.ratios["s1"] == (-1, -1, 1) == EXPECTED_COCYCLE["s1"]
    assert t.actions["s2"] == ((1, 1), (2, 1), (3, 1))


def test_all_reports_pass():
    assert all(r.passed for r in all_reports())


@given(units, units)
def test_det_is_multiplicative(g, h):
    assert (g * h).det() == g.det() * h.det() % 8


@given(units)
def test_inverse(g):
    assert g * g.inverse() == identity(8)
    assert g.modpm() == (-g).modpm()


def test_sl2_is_det_one():
    assert all(g.det() == 1 for g in sl2(4))
    assert len(sl2(4)) == 48 == 4 ** 3 * 3 // 4
