"""Level-4 and level-8 universal objects and the X_E(4) curve families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .algebra import (AlgebraElement, NotUnit, Poly, Q, QuotientAlgebra, cubic_algebra,
                      cyclotomic8, square_class_equal)
from .elliptic import (Curve, SingularModel, discriminant_D, ec_add, points_equal,
                       two_torsion_roots)


class CuspError(ValueError):
    pass


# ---------------------------------------------------------------------------
# the universal family over X(4)


def _eu_coeffs(u):
    A = -27 * (256 * u ** 8 + 224 * u ** 4 + 1)
    B = -54 * (-4096 * u ** 12 + 8448 * u ** 8 + 528 * u ** 4 - 1)
    return A, B


def _pu(u):
    x = 48 * u ** 4 - 144 * u ** 3 + 72 * u ** 2 - 36 * u + 3
    y = 1728 * u ** 5 - 1728 * u ** 4 + 864 * u ** 3 - 432 * u ** 2 + 108 * u
    return x, y


def is_x4_cusp(u) -> bool:
    u = Q(u)
    return u * (16 * u ** 4 - 1) == 0


@dataclass
class X4Point:
    u: Fraction
    curve: Curve
    P: Tuple[Fraction, Fraction]
    Q: Tuple[AlgebraElement, AlgebraElement]


def x4_universal(u) -> X4Point:
    """E_u with its 4-torsion point P_u and Q_u (over Q(i), i = zeta^2)."""
    u = Q(u)
    if is_x4_cusp(u):
        raise CuspError("cusp")
    A, B = _eu_coeffs(u)
    E = Curve.short(A, B)
    P = _pu(u)
    K = cyclotomic8()
    i = K.gen("zeta") ** 2
    Qpt = (K.scalar(48 * u ** 4 - 15), i * (864 * u ** 4 - 54))
    for pt in (P, Qpt):
        if not E.contains(pt):
            raise AssertionError("point not on E_u")
    P2 = ec_add(E, P, P)
    Q2 = ec_add(E, Qpt, Qpt)
    if P2 is None or Q2 is None or ec_add(E, P2, P2) is not None or ec_add(E, Q2, Q2) is not None:
        raise AssertionError("P_u or Q_u does not have exact order 4")
    if (Q2[0] - P2[0]).is_zero():
        raise AssertionError("2P_u and 2Q_u coincide")
    return X4Point(u, E, P, Qpt)


def four_torsion_basis_ok(u) -> bool:
    """2P_u, 2Q_u and 2P_u + 2Q_u are distinct nonzero points."""
    pt = x4_universal(u)
    E = pt.curve
    K = pt.Q[0].algebra
    P2 = ec_add(E, pt.P, pt.P)
    P2 = (K.scalar(P2[0]), K.scalar(P2[1]))
    Q2 = ec_add(E, pt.Q, pt.Q)
    S = ec_add(E, P2, Q2)
    pts = [P2, Q2, S]
    if any(p is None for p in pts):
        return False
    return all(not points_equal(pts[i], pts[j]) for i in range(3) for j in range(i + 1, 3))


def _duplication_numerator(A, B, x, xP):
    # numerator of x(2R) - xP, with x(2R) = (x^4 - 2Ax^2 - 8Bx + A^2) / (4(x^3 + Ax + B))
    return x ** 4 - 2 * A * x ** 2 - 8 * B * x + A * A - 4 * xP * (x ** 3 + A * x + B)


def half_point_quartics(u):
    """The two reference quartics f (for P_u) and g (for Q_u) in x, at u."""
    x = Poly.var("x")
    f = ((x - 48 * u ** 4 + 144 * u ** 3 - 72 * u ** 2 + 36 * u - 3) ** 4
         + 1296 * u * (2 * u - 1) ** 4 * (4 * u ** 2 + 1) * (x - 48 * u ** 4 - 72 * u ** 2 - 3) ** 2)
    g = (x - 48 * u ** 4 + 15) ** 4 + 1296 * (16 * u ** 4 - 1) * (x + 96 * u ** 4 + 6) ** 2
    return f, g


def half_point_quartic_check(u=None) -> bool:
    """Numerators of x(2R) - x(P_u), x(2R) - x(Q_u) equal the reference quartics.

    With ``u=None`` the identity is checked over Q[u], u a polynomial variable.
    """
    if u is None:
        uu = Poly.var("u")
    else:
        uu = Q(u)
        if is_x4_cusp(uu):
            raise CuspError("cusp")
    x = Poly.var("x")
    A, B = _eu_coeffs(uu)
    xP, _ = _pu(uu)
    xQ = 48 * uu ** 4 - 15
    f, g = half_point_quartics(uu)
    nf = _duplication_numerator(A, B, x, xP)
    ng = _duplication_numerator(A, B, x, xQ)
    # both numerators are monic in x, so the constant multiple is 1
    return nf == f and ng == g


# ---------------------------------------------------------------------------
# X(8) over the 32-dimensional algebra


def x8_algebra(u) -> QuotientAlgebra:
    u = Q(u)
    n = 4
    rels = [
        ("zeta", 4, {(0, 0, 0, 0): -1}),
        ("X1", 2, {(0, 0, 0, 0): u * u - Fraction(1, 4)}),
        ("X2", 2, {(0, 0, 0, 0): u * u + Fraction(1, 4)}),
        ("X3", 2, {(0, 0, 0, 0): -u}),
    ]
    assert all(len(m) == n for _, _, r in rels for m in r)
    return QuotientAlgebra(rels)


def x8_points(K: QuotientAlgebra):
    """The explicit 8-torsion point (P_x, P_y) and (Q_x, Q_y) in K."""
    z, X1, X2, X3 = K.gens()
    P_x = (-36 * (4 * X3 ** 5 + 4 * X3 ** 4 + 4 * X3 ** 3 + 2 * X3 ** 2 + X3) * X2
           + 48 * X3 ** 8 + 144 * X3 ** 7 + 144 * X3 ** 6 + 72 * X3 ** 5 + 72 * X3 ** 4
           + 36 * X3 ** 3 + 36 * X3 ** 2 + 18 * X3 + 3)
    P_y = (108 * (16 * X3 ** 9 + 32 * X3 ** 8 + 32 * X3 ** 7 + 32 * X3 ** 6 + 24 * X3 ** 5
                  + 16 * X3 ** 4 + 8 * X3 ** 3 + 4 * X3 ** 2 + X3) * X2
           - 1728 * X3 ** 11 - 3456 * X3 ** 10 - 4320 * X3 ** 9 - 3456 * X3 ** 8
           - 2592 * X3 ** 7 - 1728 * X3 ** 6 - 1296 * X3 ** 5 - 864 * X3 ** 4
           - 540 * X3 ** 3 - 216 * X3 ** 2 - 54 * X3)
    Q_x = (-72 * z ** 2 * X1 * X2
           + (72 * (z ** 3 + z) * X3 ** 4 + 18 * (z ** 3 + z)) * X1
           + (72 * (z ** 3 - z) * X3 ** 4 - 18 * (z ** 3 - z)) * X2
           + 48 * X3 ** 8 - 15)
    Q_y = (432 * X1 * X2
           + (864 * (-z ** 3 + z) * X3 ** 8 + 432 * (z ** 3 - z) * X3 ** 4 + 162 * (z ** 3 - z)) * X1
           + ((-864 * z ** 3 - 864 * z) * X3 ** 8 + 432 * (-z ** 3 - z) * X3 ** 4
              + 162 * (z ** 3 + z)) * X2
           + 1728 * z ** 2 * X3 ** 8 - 108 * z ** 2)
    return (P_x, P_y), (Q_x, Q_y)


@dataclass
class X8Report:
    u: Fraction
    dimension: int
    on_curve: Optional[bool]
    order8: Optional[bool]
    doubles_to_Pu: Optional[bool]
    Q8_on_curve: Optional[bool]
    inconclusive: bool = False
    note: str = ""

    def to_json(self) -> dict:
        return {"u": str(self.u), "dimension": self.dimension, "on_curve": self.on_curve,
                "order8": self.order8, "doubles_to_Pu": self.doubles_to_Pu,
                "Q8_on_curve": self.Q8_on_curve, "inconclusive": self.inconclusive,
                "note": self.note}


def x8_universal_check(u) -> X8Report:
    u = Q(u)
    if is_x4_cusp(u):
        raise CuspError("cusp")
    K = x8_algebra(u)
    A, B = _eu_coeffs(u)
    E = Curve.short(A, B)
    P, Qp = x8_points(K)
    rep = X8Report(u, K.dimension, E.contains(P), None, None, E.contains(Qp))
    try:
        P2 = ec_add(E, P, P)
        P4 = ec_add(E, P2, P2) if P2 is not None else None
        P8 = ec_add(E, P4, P4) if P4 is not None else None
        rep.order8 = P4 is not None and P8 is None
        rep.doubles_to_Pu = P2 is not None and (P2[0] - _pu(u)[0]).is_zero()
    except NotUnit:
        rep.inconclusive = True
        rep.note = "non-invertible denominator while doubling; retry with another u"
    return rep


def x8_universal_sweep(samples) -> List[X8Report]:
    """Run the X(8) check on up to ten non-cusp samples until one is conclusive."""
    out = []
    for u in list(samples)[:10]:
        if is_x4_cusp(u):
            continue
        rep = x8_universal_check(u)
        out.append(rep)
        if not rep.inconclusive:
            break
    return out


# ---------------------------------------------------------------------------
# cusps of X_E(4)


@dataclass
class CuspData:
    """Pair sums m_j and products l_j of the cusps.

    ``pairs`` lists (m_j, l_j) for the rational roots theta_j (all three when
    x^3 + ax + b splits).  Unless it splits, ``generic`` holds the pair for a
    root theta of the cubic as elements of Q[theta]/(theta^3 + a theta + b).
    """

    a: Fraction
    b: Fraction
    thetas: Tuple[Fraction, ...]
    pairs: List[Tuple[Fraction, Fraction]]
    generic: Optional[Tuple[AlgebraElement, AlgebraElement]] = None

    @property
    def split(self) -> bool:
        return len(self.thetas) == 3


def cusp_pair(a, theta):
    """(m, l) = (-2 theta / 3, -(2 theta^2 + a) / 9)."""
    return (Fraction(-2, 3) * theta, -(2 * theta * theta + Q(a)) * Fraction(1, 9))


def cusp_data(a, b) -> CuspData:
    a, b = Q(a), Q(b)
    if discriminant_D(a, b) == 0:
        raise SingularModel("singular model")
    roots = tuple(two_torsion_roots(a, b))
    pairs = [cusp_pair(a, th) for th in roots]
    generic = None
    if len(roots) < 3:
        generic = cusp_pair(a, cubic_algebra(a, b).gen("theta"))
    return CuspData(a, b, roots, pairs, generic)


# ---------------------------------------------------------------------------
# families over X_E(4) and X^3_E(4)


def _family_polys() -> Tuple[Poly, Poly]:
    t, c4, c6 = Poly.symbols("t", "c4", "c6")
    aE = (c4 * t ** 8 + 8 * c6 * t ** 7 + 28 * c4 ** 2 * t ** 6 + 56 * c4 * c6 * t ** 5
          + (-42 * c4 ** 3 + 112 * c6 ** 2) * t ** 4 + 56 * c4 ** 2 * c6 * t ** 3
          + (252 * c4 ** 4 - 224 * c4 * c6 ** 2) * t ** 2
          + (264 * c4 ** 3 * c6 - 256 * c6 ** 3) * t
          + (81 * c4 ** 5 - 80 * c4 ** 2 * c6 ** 2))
    bE = (c6 * t ** 12 + 12 * c4 ** 2 * t ** 11 + 66 * c4 * c6 * t ** 10
          + (44 * c4 ** 3 + 176 * c6 ** 2) * t ** 9 + 495 * c4 ** 2 * c6 * t ** 8
          + 792 * c4 ** 4 * t ** 7 + 924 * c4 ** 3 * c6 * t ** 6
          + (-2376 * c4 ** 5 + 3168 * c4 ** 2 * c6 ** 2) * t ** 5
          + (-5841 * c4 ** 4 * c6 + 6336 * c4 * c6 ** 3) * t ** 4
          + (-1188 * c4 ** 6 - 4224 * c4 ** 3 * c6 ** 2 + 5632 * c6 ** 4) * t ** 3
          + (-4158 * c4 ** 5 * c6 + 4224 * c4 ** 2 * c6 ** 3) * t ** 2
          + (-2916 * c4 ** 7 + 4464 * c4 ** 4 * c6 ** 2 - 1536 * c4 * c6 ** 4) * t
          + (-1215 * c4 ** 6 * c6 + 2240 * c4 ** 3 * c6 ** 3 - 1024 * c6 ** 5))
    return aE, bE


@dataclass(frozen=True)
class FamilyPolys:
    a_E: Poly
    b_E: Poly


_FAMILY = FamilyPolys(*_family_polys())


def family_polys() -> FamilyPolys:
    return _FAMILY


def family_coefficients(a, b, t, power: int = 1) -> Tuple[Fraction, Fraction]:
    """(A, B) of the family member y^2 = x^3 + A x + B over X_E(4) (power 1)
    or over X^3_E(4) (power 3, twisted by the discriminant of E)."""
    if power not in (1, 3):
        raise ValueError("power must be 1 or 3")
    a, b, t = Q(a), Q(b), Q(t)
    vals = {"t": t, "c4": -a / 27, "c6": -b / 54}
    A = -27 * _FAMILY.a_E.eval(vals)
    B = -54 * _FAMILY.b_E.eval(vals)
    if power == 3:
        d = Curve.short(a, b).discriminant
        A, B = A * d * d, B * d ** 3
    return A, B


def family_x4(a, b, t, power: int = 1) -> Curve:
    A, B = family_coefficients(a, b, t, power)
    if discriminant_D(A, B) == 0:
        raise CuspError("cusp value t")
    return Curve.short(A, B)


def family_preserves_square_class(a, b, t, power: int) -> bool:
    E = Curve.short(a, b)
    F = family_x4(a, b, t, power)
    return square_class_equal(E.discriminant, F.discriminant)


def check_lemma_3_1() -> bool:
    from .cocycle import verify_group_lemma
    return verify_group_lemma("L3.1").passed
