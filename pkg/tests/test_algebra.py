from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from x8twists.algebra import (NotUnit, Poly, Q, QuotientAlgebra, algebra_inverse, cubic_algebra,
                              gaussian_rationals, height, height_key, is_rational_square,
                              rational_roots, rationals_up_to_height, resultant,
                              square_class_equal, valuation)

from conftest import nonzero_rationals, small_rationals

x, y = Poly.symbols("x", "y")


def test_resultant_of_linear_and_quadratic():
    assert resultant(x ** 2 - 1, x - 2, "x") == Poly.const(3)


def test_resultant_leaves_other_variable():
    assert resultant(x - y, x + y, "x") == 2 * y


def test_resultant_rejects_absent_variable():
    with pytest.raises(ValueError, match="variable absent"):
        resultant(y + 1, y - 1, "x")


def test_resultant_vanishes_on_common_root():
    assert resultant((x - 3) * (x + 1), (x - 3) * (x ** 2 + 5), "x").is_zero()


@given(st.lists(small_rationals(9), min_size=1, max_size=3),
       st.lists(small_rationals(9), min_size=1, max_size=3))
def test_resultant_is_product_of_root_differences(rs, ss):
    f = Poly.const(1)
    for r in rs:
        f = f * (x - r)
    g = Poly.const(1)
    for s in ss:
        g = g * (x - s)
    prod = Fraction(1)
    for r in rs:
        for s in ss:
            prod *= r - s
    assert resultant(f, g, "x") == Poly.const(prod)


def test_rational_roots_example():
    assert set(rational_roots(6 * x ** 2 - 5 * x + 1)) == {Fraction(1, 2), Fraction(1, 3)}


def test_rational_roots_irreducible_quadratic():
    assert rational_roots(x ** 2 - 2) == []


def test_rational_roots_huge_coefficients():
    big = 10 ** 15 + 37
    f = (big * x - 7) * (x + Fraction(3, big)) * (x ** 2 + 1)
    assert set(rational_roots(f)) == {Fraction(7, big), Fraction(-3, big)}


@given(st.lists(small_rationals(20), min_size=1, max_size=4))
def test_rational_roots_recovers_planted(roots):
    f = Poly.const(1)
    for r in roots:
        f = f * (x - r)
    assert set(rational_roots(f * (x ** 2 + 3))) == set(roots)


def test_valuation_examples():
    assert valuation(12288, 3) == 1
    assert valuation(Fraction(1, 8), 2) == -3


def test_valuation_of_zero():
    with pytest.raises(ValueError, match="valuation of zero"):
        valuation(0, 5)


@given(nonzero_rationals(), nonzero_rationals(), st.sampled_from([2, 3, 5, 7]))
def test_valuation_is_additive(u, v, p):
    assert valuation(u * v, p) == valuation(u, p) + valuation(v, p)


def test_square_classes():
    assert square_class_equal(12288, 3)
    assert not square_class_equal(2, 3)
    assert square_class_equal(Fraction(-9, 4), -1)
    with pytest.raises(ValueError, match="zero has no square class"):
        square_class_equal(0, 1)


@given(nonzero_rationals(), nonzero_rationals())
def test_square_class_invariant_under_squares(u, v):
    assert square_class_equal(u, u * v * v)
    assert is_rational_square(v * v)


def test_height_enumeration_is_complete_and_sorted():
    vals = rationals_up_to_height(6)
    assert len(vals) == len(set(vals))
    assert all(height(v) <= 6 for v in vals)
    assert vals == sorted(vals, key=height_key)
    brute = {Fraction(n, d) for n in range(-6, 7) for d in range(1, 7)}
    assert set(vals) == {v for v in brute if height(v) <= 6}


def test_gaussian_inverse():
    K = gaussian_rationals()
    i = K.gen("i")
    inv = algebra_inverse(K.one() + i, K)
    assert inv == (K.one() - i) * Fraction(1, 2)


def test_non_unit_raises():
    A = QuotientAlgebra.simple("x", [-1, 0])  # x^2 - 1
    xg = A.gen("x")
    assert algebra_inverse(xg - A.one(), A) is NotUnit
    with pytest.raises(NotUnit):
        (xg + A.one()).inverse()


@given(st.tuples(small_rationals(5), small_rationals(5)).filter(lambda ab: 4 * ab[0] ** 3 + 27 * ab[1] ** 2 != 0),
       small_rationals(6), small_rationals(6), small_rationals(6))
def test_cubic_algebra_inverse_roundtrip(ab, c0, c1, c2):
    A = cubic_algebra(*ab)
    e = A.element([c0, c1, c2])
    inv = algebra_inverse(e, A)
    if inv is not NotUnit:
        assert e * inv == A.one()
    else:
        assert resultant(Poly.const(c0) + c1 * x + c2 * x ** 2,
                         x ** 3 + ab[0] * x + ab[1], "x").is_zero()


def test_q_rejects_bool_and_float():
    with pytest.raises(TypeError):
        Q(True)
    with pytest.raises(TypeError):
        Q(0.5)
    assert Q("3/6") == Fraction(1, 2)
