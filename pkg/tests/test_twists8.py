from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from x8twists.algebra import Poly
from x8twists.elliptic import Curve, is_q_isomorphic, primes_up_to, reduction_type, GOOD
from x8twists.reproduce import CURVES
from x8twists.search import solve_fiber
from x8twists.twists8 import (MATCH, MATCH_NEG_T, NO_MATCH, NotOnCurve, X8Point, build_system,
                              coefficient_comparison_oracle, evaluate, forgetful_power,
                              on_system, recover_curve, scaling_factors, system_values)

from conftest import nonsingular_ab, small_rationals

t, a0, a1, a2 = Poly.symbols("t", "a0", "a1", "a2")


def same(p, q):
    return p == q.with_vars(p.vars)


def test_first_system_f():
    a, b = Fraction(3), Fraction(5)
    S = build_system(a, b, 1)
    assert same(S.f, -a * a2 ** 2 + 2 * a0 * a2 + a1 ** 2 + Fraction(2, 9))


def test_fifth_system_h():
    a, b = Fraction(3), Fraction(5)
    D = -4 * a ** 3 - 27 * b ** 2
    S = build_system(a, b, 5)
    assert same(S.h, -2 * b * a1 * a2 + a0 ** 2 + D * (-t ** 2 + a / 9))


def test_seventh_system_g():
    a, b = Fraction(3), Fraction(5)
    S = build_system(a, b, 7)
    assert same(S.g, Fraction(4, 3) * a * t + Fraction(2, 3) * b - 2 * a * a1 * a2
                - b * a2 ** 2 + 2 * a0 * a1)


@pytest.mark.parametrize("a,b,r,P", [
    (Fraction(27, 8), Fraction(27, 8), 5, (Fraction(-1, 2), Fraction(243, 32), Fraction(-81, 8), 0)),
    (9, -18, 3, (-1, 0, 12, 0)),
    (-27, 54, 7, (1, -12, 2, Fraction(2, 3))),
])
def test_known_points_lie_on_systems(a, b, r, P):
    S = build_system(a, b, r)
    pt = X8Point.of(*P)
    assert evaluate(S, pt) == (0, 0, 0)
    assert on_system(S, pt.negate())


@given(nonsingular_ab(6), st.sampled_from([1, 3, 5, 7]),
       small_rationals(), small_rationals(), small_rationals(), small_rationals())
def test_values_invariant_under_negation(ab, r, tt, x0, x1, x2):
    P = X8Point(tt, x0, x1, x2)
    S = build_system(*ab, r)
    assert evaluate(S, P) == evaluate(S, P.negate())
    for eq in S.equations:
        assert eq.degree("a0") <= 2 and eq.degree("a1") <= 2 and eq.degree("a2") <= 2


def test_forgetful_powers():
    assert [forgetful_power(r) for r in (1, 3, 5, 7)] == [1, 3, 1, 3]
    with pytest.raises(ValueError):
        build_system(1, 1, 2)


def test_scaling_ledger_examples():
    assert scaling_factors(2, 1, 1).alphas is None
    assert scaling_factors(-1, 0, 1).alphas == (1, 1, 1)
    D = Fraction(4)
    assert scaling_factors(-1, 0, 5).alphas == (D, D, D)
    assert scaling_factors(-1, 0, 7).alphas == (1, -2, -2)


@given(nonsingular_ab(6), st.sampled_from([1, 3, 5, 7]))
def test_scaling_ledger_consistent(ab, r):
    assert scaling_factors(*ab, r).consistent


def _split_curve(t1, t2):
    t3 = -t1 - t2
    a = t1 * t2 + t1 * t3 + t2 * t3
    b = -t1 * t2 * t3
    return a, b


@settings(max_examples=15)
@given(small_rationals(6), small_rationals(6), st.sampled_from([1, 3, 5, 7]))
def test_comparison_oracle_never_fails(t1, t2, r):
    a, b = _split_curve(t1, t2)
    assume(-4 * a ** 3 - 27 * b * b != 0)
    rep = coefficient_comparison_oracle(a, b, r)
    assert rep.verdict in (MATCH, MATCH_NEG_T)
    assert rep.verdict != NO_MATCH
    assert rep.routes_agree


def test_comparison_oracle_non_split_curve():
    rep = coefficient_comparison_oracle(2, 1, 3)
    assert rep.mode == "algebra"
    assert rep.verdict == MATCH_NEG_T


@given(small_rationals(6), small_rationals(6), small_rationals(), small_rationals(),
       small_rationals(), small_rationals())
def test_square_D_rescales_fifth_system_to_first(t1, t2, tt, x0, x1, x2):
    # for a split cubic D is the square of the Vandermonde product
    a, b = _split_curve(t1, t2)
    t3 = -t1 - t2
    root = (t1 - t2) * (t2 - t3) * (t3 - t1)
    assume(root != 0)
    assert -4 * a ** 3 - 27 * b * b == root * root
    v5 = system_values(a, b, 5, tt, root * x0, root * x1, root * x2)
    v1 = system_values(a, b, 1, tt, x0, x1, x2)
    assert v5 == tuple(root * root * v for v in v1)


def test_recover_small_example():
    F = recover_curve(Fraction(27, 8), Fraction(27, 8), 5,
                      X8Point.of(Fraction(-1, 2), Fraction(243, 32), Fraction(-81, 8), 0))
    assert is_q_isomorphic(F, Curve.short(-522, 18936))


def test_recover_rejects_points_off_the_system():
    with pytest.raises(NotOnCurve):
        recover_curve(1, 1, 1, X8Point.of(0, 1, 1, 1))


def test_recover_on_three_isogeny_section():
    E = Curve.short(9, -18)
    F = recover_curve(9, -18, 3, X8Point.of(-1, 0, 12, 0))
    x, y = Poly.symbols("x", "y")
    # classical level 3 modular polynomial
    phi3 = (x ** 4 + y ** 4 - x ** 3 * y ** 3 + 2232 * (x ** 3 * y ** 2 + x ** 2 * y ** 3)
            - 1069956 * (x ** 3 * y + x * y ** 3) + 36864000 * (x ** 3 + y ** 3)
            + 2587918086 * x ** 2 * y ** 2 + 8900222976000 * (x ** 2 * y + x * y ** 2)
            + 452984832000000 * (x ** 2 + y ** 2) - 770845966336000000 * x * y
            + 1855425871872000000000 * (x + y))
    assert phi3.eval({"x": E.j, "y": F.j}) == 0


def test_recover_first_example_pair():
    E = CURVES["96a2"]
    a, b = -22464, -1271808
    assert is_q_isomorphic(Curve.short(a, b), E)
    pts = solve_fiber(a, b, 5, -80)
    assert pts
    for P in pts:
        assert is_q_isomorphic(recover_curve(a, b, 5, P), CURVES["1056d2"])


def test_recovered_curves_are_congruent_mod_8():
    a, b = Fraction(27, 8), Fraction(27, 8)
    E = Curve.short(a, b)
    for P in solve_fiber(a, b, 5, Fraction(-1, 2)):
        F = recover_curve(a, b, 5, P)
        for p in primes_up_to(200):
            rE, rF = reduction_type(E, p), reduction_type(F, p)
            if rE.type == GOOD and rF.type == GOOD:
                assert (rE.ap - rF.ap) % 8 == 0


def test_point_json_roundtrip():
    P = X8Point.of("-1/2", "243/32", "-81/8", 0)
    assert X8Point.from_json(P.to_json()) == P
    assert P.canonical() == P
    assert P.negate().canonical() == P
