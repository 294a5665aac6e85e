import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from x8twists.algebra import Poly, square_class_equal, udivmod
from x8twists.elliptic import (ADDITIVE, GOOD, NONSPLIT, SPLIT, Curve, SingularModel,
                               discriminant_D, division_polynomials, ec_add, ec_mul, ec_neg,
                               four_torsion_data, invariants, is_q_isomorphic, minimal_model,
                               points_equal, primes_up_to, quadratic_twist, reduction_type,
                               short_form, short_model)

from conftest import nonsingular_ab, nonzero_rationals

C96 = Curve(0, 1, 0, -17, -33)
C1056 = Curve(0, -8, 0, -333056, 59636736)
C99 = Curve(1, -1, 1, -2, 0)


def brute_count(ainvs, p):
    a1, a2, a3, a4, a6 = (int(c) % p for c in ainvs)
    n = 1
    for x in range(p):
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - x ** 3 - a2 * x * x - a4 * x - a6) % p == 0:
                n += 1
    return n


def test_invariants_96a2():
    b2, b4, b6, b8, c4, c6, disc, j = invariants(C96)
    assert (c4, c6, disc) == (832, 23552, 12288)
    assert 1728 * disc == c4 ** 3 - c6 ** 2
    assert j == Fraction(832 ** 3, 12288)


def test_small_invariants():
    E = Curve.short(-1, 0)
    assert (E.discriminant, E.j) == (64, 1728)
    E = Curve.short(0, 1)
    assert (E.c4, E.j) == (0, 0)


def test_singular_model_rejected():
    with pytest.raises(SingularModel, match="singular model"):
        Curve.short(-3, 2)


def test_short_forms():
    assert short_form(C99) == (-2187, -7290)
    assert short_form(C96) == (-27 * 832, -54 * 23552)
    assert is_q_isomorphic(short_model(C99), C99)


@given(nonsingular_ab())
def test_short_form_preserves_j_and_disc_class(ab):
    E = Curve.short(*ab)
    a, b = short_form(E)
    F = Curve.short(a, b)
    assert F.j == E.j
    assert square_class_equal(discriminant_D(a, b), F.discriminant)
    assert 1728 * F.discriminant == F.c4 ** 3 - F.c6 ** 2


def test_q_isomorphism_examples():
    assert is_q_isomorphic(Curve.short(Fraction(27, 8), Fraction(27, 8)), Curve.short(54, 216))
    assert is_q_isomorphic(C96, C96)
    assert not is_q_isomorphic(Curve.short(1, 0), Curve.short(-1, 0))


@given(nonsingular_ab(), nonzero_rationals())
def test_twists(ab, d):
    E = Curve.short(*ab)
    assert quadratic_twist(E, 1) == E
    assert is_q_isomorphic(quadratic_twist(quadratic_twist(E, d), d), E)
    assert is_q_isomorphic(quadratic_twist(E, d * d), E)
    T = quadratic_twist(E, d)
    assert (T.a4, T.a6) == (ab[0] * d * d, ab[1] * d ** 3)


def test_twist_by_zero():
    with pytest.raises(ValueError):
        quadratic_twist(Curve.short(1, 1), 0)


def test_traces_of_96a2():
    assert reduction_type(C96, 5).ap == 2
    assert reduction_type(C96, 7).ap == -4
    r2 = reduction_type(C96, 2)
    assert (r2.type, r2.ap) == (ADDITIVE, 0)
    assert reduction_type(Curve.short(1, 0), 3).ap == 0


def test_reduction_types_at_three():
    r = reduction_type(C96, 3)
    assert (r.type, r.vdelta) == (SPLIT, 1)
    r = reduction_type(C1056, 3)
    assert (r.type, r.vdelta) == (SPLIT, 5)
    assert reduction_type(C96, 5).type == GOOD


def test_nonsplit_at_eleven():
    r = reduction_type(C99, 11)
    assert (r.type, r.ap) == (NONSPLIT, -1)
    assert brute_count(C99.ainvs, 11) == 13


@pytest.mark.parametrize("C", [C96, C1056, C99], ids=["96a2", "1056d2", "99a1"])
def test_counts_against_brute_force(C):
    M = minimal_model(C)
    for p in primes_up_to(60):
        info = reduction_type(C, p)
        assert info.Np == brute_count(M.ainvs, p)
        assert info.ap == p + 1 - info.Np
        if info.type == GOOD:
            assert abs(info.ap) <= 2 * math.sqrt(p)
        elif info.type in (SPLIT, NONSPLIT):
            assert info.ap == (1 if info.type == SPLIT else -1)
        else:
            assert info.ap == 0


@given(nonsingular_ab(6))
def test_minimal_model_properties(ab):
    E = Curve.short(*ab)
    M = minimal_model(E)
    assert is_q_isomorphic(E, M)
    assert all(c.denominator == 1 for c in M.ainvs)
    assert M.a1 in (0, 1) and M.a3 in (0, 1) and M.a2 in (-1, 0, 1)
    for p in (5, 7, 11, 13):
        assert not (M.discriminant % p ** 12 == 0 and M.c4 % p ** 4 == 0 and M.c6 % p ** 6 == 0)


def test_minimal_model_of_scaled_curve():
    M = minimal_model(Curve.short(-975159243, 11681563877190))
    assert M.ainvs == (1, -1, 1, -752438, 250564564)
    assert M.discriminant == 182751402669611193


def test_four_torsion_split_case():
    data = four_torsion_data(-1, 0)
    assert sorted(data.thetas) == [-1, 0, 1]
    assert dict(zip(data.thetas, data.deltas)) == {0: 1, 1: -2, -1: -2}
    x = Poly.var("x")
    _, rem = udivmod(data.sextic.univariate()[1], (x ** 2 - 2 * x - 1).univariate()[1])
    assert all(c == 0 for c in rem)  # 1 +- sqrt(2) are x-coordinates of 4-torsion points
    prod = Poly.const(1)
    for th, de in zip(data.thetas, data.deltas):
        prod = prod * ((x - th) ** 2 + de)
    assert prod == data.sextic


@given(nonsingular_ab(6))
def test_sextic_divides_four_division_polynomial(ab):
    a, b = ab
    data = four_torsion_data(a, b)
    psi4 = division_polynomials(4, a, b)[4][0]
    _, rem = udivmod(psi4.univariate()[1], data.sextic.univariate()[1])
    assert all(c == 0 for c in rem)
    assert data.sextic.degree("x") == 6


def test_group_law_on_universal_curve():
    E = Curve.short(-12987, -263466)
    P = (Fraction(-57), Fraction(540))
    assert E.contains(P)
    assert ec_mul(E, 4, P) is None
    assert ec_mul(E, 2, P) is not None
    assert ec_add(E, P, None) == P
    assert ec_add(E, P, ec_neg(E, P)) is None


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_group_law_associative(m, n):
    E = Curve.short(-2, 1)
    P = (Fraction(0), Fraction(1))
    R = (Fraction(1), Fraction(0))
    assert E.contains(P) and E.contains(R)
    lhs = ec_add(E, ec_add(E, ec_mul(E, m, P), R), ec_mul(E, n, P))
    rhs = ec_add(E, ec_mul(E, m + n, P), R)
    assert points_equal(lhs, rhs)


def test_json_roundtrip():
    assert Curve.from_json(C99.to_json()) == C99
