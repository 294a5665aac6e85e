from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from x8twists.algebra import Poly, square_class_equal
from x8twists.elliptic import GOOD, Curve, is_q_isomorphic, primes_up_to, reduction_type
from x8twists.modular_x4x8 import (CuspError, check_lemma_3_1, cusp_data, family_coefficients,
                                   family_polys, family_preserves_square_class, family_x4,
                                   four_torsion_basis_ok, half_point_quartic_check, is_x4_cusp,
                                   x4_universal, x8_algebra, x8_universal_check)

from conftest import nonsingular_ab, small_rationals


def test_universal_curve_at_one():
    pt = x4_universal(1)
    assert pt.curve == Curve.short(-12987, -263466)
    assert pt.P == (-57, 540)
    K = pt.Q[0].algebra
    i = K.gen("zeta") ** 2
    assert pt.Q[0] == K.scalar(33)
    assert pt.Q[1] == i * 810


@pytest.mark.parametrize("u", [0, Fraction(1, 2), Fraction(-1, 2)])
def test_cusps_rejected(u):
    assert is_x4_cusp(u)
    with pytest.raises(CuspError, match="cusp"):
        x4_universal(u)


@given(small_rationals(9))
def test_four_torsion_basis(u):
    assume(not is_x4_cusp(u))
    assert four_torsion_basis_ok(u)


@pytest.mark.parametrize("u", [1, 2, Fraction(3, 7)])
def test_half_point_quartics_at_values(u):
    assert half_point_quartic_check(u)


def test_half_point_quartics_identically_in_u():
    assert half_point_quartic_check()


def test_x8_point_at_two():
    assert x8_algebra(2).dimension == 32
    rep = x8_universal_check(2)
    assert rep.on_curve and rep.Q8_on_curve
    assert rep.order8
    assert rep.doubles_to_Pu


def test_x8_point_doubles_at_three():
    rep = x8_universal_check(3)
    assert not rep.inconclusive
    assert rep.doubles_to_Pu and rep.order8


def test_cusp_pairs_split_case():
    cd = cusp_data(-1, 0)
    assert cd.split
    assert set(cd.pairs) == {(0, Fraction(1, 9)), (Fraction(-2, 3), Fraction(-1, 9)),
                             (Fraction(2, 3), Fraction(-1, 9))}


def test_cusp_pair_rational_root():
    cd = cusp_data(0, -1)
    assert not cd.split
    assert cd.thetas == (1,)
    assert cd.pairs == [(Fraction(-2, 3), Fraction(-2, 9))]
    m, l = cd.generic
    assert m * 3 == cd.generic[0].algebra.gen("theta") * -2


@given(nonsingular_ab(6))
def test_cusp_sums_vanish_when_split(ab):
    cd = cusp_data(*ab)
    if cd.split:
        assert sum(m for m, _ in cd.pairs) == 0


def test_family_polynomial_shape():
    fp = family_polys()
    assert fp.a_E.degree("t") == 8 and fp.b_E.degree("t") == 12
    c4, c6 = Poly.symbols("c4", "c6")
    const_a = fp.a_E.subs({"t": Poly.const(0)})
    const_b = fp.b_E.subs({"t": Poly.const(0)})
    assert const_a == (81 * c4 ** 5 - 80 * c4 ** 2 * c6 ** 2).with_vars(const_a.vars)
    assert const_b == (-1215 * c4 ** 6 * c6 + 2240 * c4 ** 3 * c6 ** 3
                       - 1024 * c6 ** 5).with_vars(const_b.vars)


def test_family_at_zero_uses_constant_terms():
    a, b = Fraction(2), Fraction(-3)
    c4, c6 = -a / 27, -b / 54
    A, B = family_coefficients(a, b, 0)
    assert A == -27 * (81 * c4 ** 5 - 80 * c4 ** 2 * c6 ** 2)
    assert B == -54 * (-1215 * c4 ** 6 * c6 + 2240 * c4 ** 3 * c6 ** 3 - 1024 * c6 ** 5)


def test_family_member_example():
    F = family_x4(Fraction(27, 8), Fraction(27, 8), Fraction(-1, 2))
    assert is_q_isomorphic(F, Curve.short(-522, 18936))


@given(nonsingular_ab(5), small_rationals(6), st.sampled_from([1, 3]))
def test_family_preserves_discriminant_class(ab, t, power):
    try:
        F = family_x4(*ab, t, power)
    except CuspError:
        return
    assert square_class_equal(F.discriminant, Curve.short(*ab).discriminant)
    assert family_preserves_square_class(*ab, t, power)


@settings(max_examples=8)
@given(nonsingular_ab(4), small_rationals(4), st.sampled_from([1, 3]))
def test_family_traces_agree_mod_4(ab, t, power):
    E = Curve.short(*ab)
    try:
        F = family_x4(*ab, t, power)
    except CuspError:
        return
    for p in primes_up_to(60):
        rE, rF = reduction_type(E, p), reduction_type(F, p)
        if rE.type == GOOD and rF.type == GOOD:
            assert (rE.ap - rF.ap) % 4 == 0, p


def test_family_power_must_be_one_or_three():
    with pytest.raises(ValueError):
        family_coefficients(1, 1, 0, 2)


def test_basis_change_identities():
    assert check_lemma_3_1()
