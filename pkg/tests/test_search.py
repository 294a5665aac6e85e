from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from x8twists.congruence import non_isogeny_witness, verify_congruence
from x8twists.elliptic import Curve, SingularModel, is_q_isomorphic
from x8twists.oracles import grid_points, height_of_point
from x8twists.search import (FIBER, P73, P74, P75, SURFACE, SWEEP, DegenerateParameter,
                             SearchConfig, closed_form_71, genus0_identity, isogeny_section,
                             param_71, param_genus0, section_identity, section_point,
                             solve_fiber, sweep, t_values)
from x8twists.twists8 import X8Point, recover_curve, system_values

from conftest import nonsingular_ab, small_rationals

H = Fraction


def on(a, b, r, P):
    return system_values(a, b, r, *P.as_tuple()) == (0, 0, 0)


def test_fiber_fifth_system_example():
    pts = solve_fiber(H(27, 8), H(27, 8), 5, H(-1, 2))
    P = X8Point.of(H(-1, 2), H(243, 32), H(-81, 8), 0)
    assert P in pts and P.negate() in pts


def test_fiber_third_system_example():
    pts = solve_fiber(9, -18, 3, -1)
    assert X8Point.of(-1, 0, 12, 0) in pts


def test_fiber_generic_empty():
    assert solve_fiber(1, 1, 1, 17) == []


def test_empty_fiber_confirmed_by_height_50_grid():
    assert grid_points(1, 1, 1, 17, bound=50) == set()


@settings(max_examples=12)
@given(nonsingular_ab(4), st.sampled_from([1, 3, 5, 7]), small_rationals(6))
def test_solver_contains_grid_points(ab, r, t):
    a, b = ab
    grid = grid_points(a, b, r, t, bound=12)
    pts = solve_fiber(a, b, r, t)
    assert grid <= set(pts)
    for P in pts:
        assert on(a, b, r, P)
        assert P.negate() in pts


@pytest.mark.parametrize("a,b,r,t", [(-9, 9, 3, 0), (9, -18, 3, -1), (-9, -9, 7, 0)])
def test_solver_matches_grid_on_planted_fibers(a, b, r, t):
    grid = grid_points(a, b, r, t, bound=30)
    small = {P for P in solve_fiber(a, b, r, t) if height_of_point(P) <= 30}
    assert grid == small and grid


def test_height_enumeration_contract():
    assert set(t_values(0)) == {0, 1, -1}
    assert t_values(0) == t_values(1)
    vals = t_values(7)
    assert len(vals) == len(set(vals))


def test_sweep_keeps_one_per_pair():
    hits = sweep(SearchConfig(height=2, r=3, a=9, b=-18))
    canon = [h.point for h in hits]
    assert len(canon) == len(set(canon))
    assert all(h.point == h.point.canonical() for h in hits)
    assert X8Point.of(-1, 0, 12, 0) in canon


def test_sweep_is_deterministic_and_parallel_safe():
    cfg = dict(height=2, r=3, a=9, b=-18)
    assert sweep(SearchConfig(**cfg)) == sweep(SearchConfig(**cfg, workers=2))


def test_surface_mode_rediscovers_family_point():
    hits = sweep(SearchConfig(height=13, r=5, mode=SURFACE, a_values=[H(27, 8)], workers=4))
    want = X8Point.of(H(-1, 2), H(243, 32), H(-81, 8), 0).canonical()
    assert any(h.a == H(27, 8) and h.point == want for h in hits)


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(height=3, r=2)
    with pytest.raises(ValueError):
        SearchConfig(height=3, r=1, mode=FIBER)
    with pytest.raises(ValueError):
        SearchConfig(height=3, r=1, mode="spiral")


def test_surface_parametrisation_degenerate():
    with pytest.raises(DegenerateParameter, match="degenerate parameter"):
        param_71(2, 1)


@settings(max_examples=25)
@given(small_rationals(7), small_rationals(7))
def test_surface_parametrisation_membership(p, q):
    try:
        res = param_71(p, q)
    except DegenerateParameter:
        assume(False)
    assert on(res.a, res.a, 1, res.point)
    assert res.a == closed_form_71(p, q)[0]


@settings(max_examples=20)
@given(small_rationals(7), small_rationals(7))
def test_surface_parametrisation_matches_closed_form_t(p, q):
    try:
        res = param_71(p, q)
    except DegenerateParameter:
        assume(False)
    assert res.point.t == closed_form_71(p, q)[1]


def test_family_p73_at_two():
    E, P = param_genus0(P73, 2)
    assert is_q_isomorphic(E, Curve.short(54, 216))
    F = recover_curve(E.a4, E.a6, 5, P)
    assert is_q_isomorphic(F, Curve.short(-522, 18936))
    assert genus0_identity(P73)


def test_family_p75_fixed_point():
    E, P = param_genus0(P75)
    assert (E.a4, E.a6) == (H(-135, 32), H(-135, 32))
    assert P == X8Point.of(0, H(75, 32), H(5, 4), H(-1, 3))
    F = recover_curve(E.a4, E.a6, 7, P)
    assert is_q_isomorphic(E, Curve.short(-1080, -17280))
    assert is_q_isomorphic(F, Curve.short(7931250, -8519850000))


def test_family_p74_at_zero_gives_non_isogenous_pair():
    E, P = param_genus0(P74, 0)
    F = recover_curve(E.a4, E.a6, 3, P)
    assert verify_congruence(E, F, 3, 100).passed
    assert non_isogeny_witness(E, F, 100) is not None


def test_section_five_at_one():
    E, P = isogeny_section(5, 1)
    assert E == Curve.short(-432, 8208)
    assert P == X8Point.of(2, -69984, -7776, -648)


def test_section_three_at_two():
    E, P = isogeny_section(3, 2)
    assert E == Curve.short(9, -18)
    assert P == X8Point.of(-1, 0, 12, 0)


def test_section_seven_at_zero_is_singular():
    a, b, P = section_point(7, 0)
    assert (a, b) == (-27, 54)
    assert P == X8Point.of(1, -12, 2, H(2, 3))
    assert on(a, b, 7, P)
    with pytest.raises(SingularModel, match="singular E_s"):
        isogeny_section(7, 0)


@pytest.mark.parametrize("l", [3, 5, 7])
def test_sections_hold_identically(l):
    assert section_identity(l)


@given(st.sampled_from([3, 5, 7]), small_rationals(9))
def test_sections_at_random_parameters(l, s):
    a, b, P = section_point(l, s)
    assert on(a, b, l, P)


@settings(max_examples=10)
@given(small_rationals(6))
def test_five_isogenous_j_invariant(s):
    assume(s != 0 and s * s - 11 * s - 1 != 0)
    try:
        E, P = isogeny_section(5, s)
    except SingularModel:
        assume(False)
    F = recover_curve(E.a4, E.a6, 5, P)
    j5 = (s ** 4 + 228 * s ** 3 + 494 * s ** 2 - 228 * s + 1) ** 3 / (s * (s ** 2 - 11 * s - 1) ** 5)
    assert F.j == j5
