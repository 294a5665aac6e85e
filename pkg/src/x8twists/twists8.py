"""Quadric systems for the twists X^r_E(8), r = 1, 3, 5, 7."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .algebra import AlgebraElement, Poly, Q, cubic_algebra, qstr, solve_linear, square_class_equal
from .elliptic import Curve, SingularModel, delta_triple, discriminant_D, two_torsion_roots
from .modular_x4x8 import cusp_pair, family_x4

VALID_R = (1, 3, 5, 7)
VARS = ("t", "a0", "a1", "a2")


class NotOnCurve(ValueError):
    pass


@dataclass(frozen=True)
class X8Point:
    t: Fraction
    a0: Fraction
    a1: Fraction
    a2: Fraction

    @classmethod
    def of(cls, t, a0, a1, a2) -> "X8Point":
        return cls(Q(t), Q(a0), Q(a1), Q(a2))

    def negate(self) -> "X8Point":
        return X8Point(self.t, -self.a0, -self.a1, -self.a2)

    def canonical(self) -> "X8Point":
        """Representative of {P, -P}: first nonzero a-coordinate positive."""
        for c in (self.a0, self.a1, self.a2):
            if c:
                return self if c > 0 else self.negate()
        return self

    def as_tuple(self) -> Tuple[Fraction, ...]:
        return (self.t, self.a0, self.a1, self.a2)

    def to_json(self) -> Dict[str, str]:
        return {k: qstr(v) for k, v in zip(VARS, self.as_tuple())}

    @classmethod
    def from_json(cls, d) -> "X8Point":
        return cls.of(*(d[k] for k in VARS))


def quadric_parts(a, b, a0, a1, a2):
    """Coefficients of theta^2, theta, 1 in (a0 + a1 theta + a2 theta^2)^2
    modulo theta^3 + a theta + b."""
    F = -a * a2 * a2 + 2 * a0 * a2 + a1 * a1
    G = -2 * a * a1 * a2 - b * a2 * a2 + 2 * a0 * a1
    H = -2 * b * a1 * a2 + a0 * a0
    return F, G, H


def system_values(a, b, r: int, t, a0, a1, a2):
    """(f_r, g_r, h_r) evaluated with generic ring arithmetic.

    Every argument may be a rational or a symbolic value (Poly or
    RationalFunction), which is how sections are checked identically.
    """
    if isinstance(a, (int, str, Fraction)):
        a = Q(a)
    if isinstance(b, (int, str, Fraction)):
        b = Q(b)
    F, G, H = quadric_parts(a, b, a0, a1, a2)
    if r == 1:
        return (F + Fraction(2, 9), G + Fraction(2, 3) * t, H - t * t + a / 9)
    if r == 5:
        D = -4 * a ** 3 - 27 * b * b
        return (F + Fraction(2, 9) * D, G + Fraction(2, 3) * D * t, H + D * (-t * t + a / 9))
    if r == 3:
        return (-Fraction(2, 9) * a * a + 6 * a * t * t + 6 * b * t - F,
                Fraction(4, 3) * a * a * t + a * b / 3 - 9 * b * t * t - G,
                -Fraction(4, 9) * a ** 3 + 4 * a * a * t * t + 4 * a * b * t - 2 * b * b - H)
    if r == 7:
        return (3 * t * t + a / 9 + F,
                Fraction(4, 3) * a * t + Fraction(2, 3) * b + G,
                a * t * t + 2 * b * t - a * a / 9 + H)
    raise ValueError(f"r must be one of {VALID_R}")


@dataclass(frozen=True)
class TwistSystem:
    r: int
    a: Fraction
    b: Fraction
    f: Poly
    g: Poly
    h: Poly

    @property
    def forgetful_power(self) -> int:
        return 1 if self.r in (1, 5) else 3

    @property
    def equations(self) -> Tuple[Poly, Poly, Poly]:
        return (self.f, self.g, self.h)

    def to_json(self) -> dict:
        return {"r": self.r, "a": qstr(self.a), "b": qstr(self.b),
                "f": str(self.f), "g": str(self.g), "h": str(self.h)}

    def __str__(self):
        return "\n".join(f"{n}_{self.r} = {p}" for n, p in zip("fgh", self.equations))


def build_system(a, b, r: int) -> TwistSystem:
    a, b = Q(a), Q(b)
    if r not in VALID_R:
        raise ValueError(f"r must be one of {VALID_R}")
    # the equations stay meaningful when D = 0 (degenerate section members)
    t, a0, a1, a2 = Poly.symbols(*VARS)
    f, g, h = (p.with_vars(VARS) + Poly(VARS) for p in
               (Poly._coerce(v) for v in system_values(a, b, r, t, a0, a1, a2)))
    return TwistSystem(r, a, b, f, g, h)


def evaluate(sys: TwistSystem, P: X8Point) -> Tuple[Fraction, Fraction, Fraction]:
    return tuple(Q(v) for v in system_values(sys.a, sys.b, sys.r, *P.as_tuple()))


def on_system(sys: TwistSystem, P: X8Point) -> bool:
    return all(v == 0 for v in evaluate(sys, P))


# ---------------------------------------------------------------------------
# scaling factors


@dataclass
class ScalingLedger:
    """alpha_{r,j}: rational triple when the 2-torsion is rational, otherwise
    a single element of Q[theta]/(theta^3 + a theta + b) (j-th conjugate
    obtained by theta -> theta_j)."""

    r: int
    a: Fraction
    b: Fraction
    alphas: Optional[Tuple[Fraction, Fraction, Fraction]]
    generic: Optional[AlgebraElement]
    consistent: bool

    def to_json(self) -> dict:
        out = {"r": self.r, "consistent": self.consistent}
        if self.alphas is not None:
            out["alphas"] = [qstr(x) for x in self.alphas]
        if self.generic is not None:
            out["generic"] = repr(self.generic)
        return out


def generic_alpha(a, b, r: int) -> AlgebraElement:
    a, b = Q(a), Q(b)
    K = cubic_algebra(a, b)
    th = K.gen("theta")
    D = discriminant_D(a, b)
    delta = -(3 * th * th + a)  # (theta - theta') (theta'' - theta) = -f'(theta)
    if r == 1:
        return K.one()
    if r == 5:
        return K.scalar(D)
    if r == 7:
        return delta
    if r == 3:
        # (theta' - theta'')^2 = -3 theta^2 - 4a
        return (-3 * th * th - 4 * a) * delta
    raise ValueError(f"r must be one of {VALID_R}")


def split_alphas(a, b, r: int, thetas) -> Tuple[Fraction, Fraction, Fraction]:
    D = discriminant_D(a, b)
    deltas = delta_triple(thetas)
    t1, t2, t3 = thetas
    if r == 1:
        return (Fraction(1),) * 3
    if r == 5:
        return (D,) * 3
    if r == 7:
        return deltas
    if r == 3:
        sq = ((t2 - t3) ** 2, (t3 - t1) ** 2, (t1 - t2) ** 2)
        return tuple(s * d for s, d in zip(sq, deltas))
    raise ValueError(f"r must be one of {VALID_R}")


def scaling_factors(a, b, r: int) -> ScalingLedger:
    a, b = Q(a), Q(b)
    if r not in VALID_R:
        raise ValueError(f"r must be one of {VALID_R}")
    D = discriminant_D(a, b)
    if D == 0:
        raise SingularModel("singular model")
    roots = two_torsion_roots(a, b)
    alphas = None
    consistent = True
    if len(roots) == 3:
        alphas = split_alphas(a, b, r, roots)
        a3 = split_alphas(a, b, 3, roots)
        a7 = split_alphas(a, b, 7, roots)
        consistent = all(square_class_equal(x, D * y) for x, y in zip(a3, a7))
    generic = generic_alpha(a, b, r)
    g3, g7 = generic_alpha(a, b, 3), generic_alpha(a, b, 7)
    # D * alpha_7 = alpha_3 * alpha_7^2, so the two differ by a square
    consistent = consistent and (D * g7 == g3 * g7 * g7)
    return ScalingLedger(r, a, b, alphas, generic if alphas is None else None, consistent)


# ---------------------------------------------------------------------------
# coefficient comparison


MATCH = "match"
MATCH_NEG_T = "match after t->-t"
NO_MATCH = "no match"


def _negate_t(p: Poly) -> Poly:
    return p.subs({"t": -Poly.var("t")}).with_vars(VARS)


def _proportional(p: Poly, q: Poly) -> Optional[Fraction]:
    """c with p = c*q, or None."""
    if p.is_zero() or q.is_zero():
        return Fraction(1) if p.is_zero() and q.is_zero() else None
    p, q = p._align(q)
    m, c = q.leading_term()
    ratio = p.terms.get(m, Fraction(0)) / c
    if ratio == 0:
        return None
    return ratio if p == q * ratio else None


def reconstruct_split(a, b, r: int, thetas) -> Tuple[Poly, Poly, Poly]:
    """Components (theta^2, theta, 1) of (a0 + a1 th + a2 th^2)^2 - alpha (t^2 - m t + l),
    recovered from the three rational roots by a Vandermonde solve."""
    a = Q(a)
    t, a0, a1, a2 = Poly.symbols(*VARS)
    alphas = split_alphas(a, b, r, thetas)
    values = []
    for th, al in zip(thetas, alphas):
        m, l = cusp_pair(a, th)
        values.append(((a0 + a1 * th + a2 * th * th) ** 2 - al * (t * t - m * t + l)).with_vars(VARS))
    # values[j] = c0 + c1 th_j + c2 th_j^2; invert the Vandermonde matrix column by column
    V = [[Fraction(1), th, th * th] for th in thetas]
    inv_cols = []
    for k in range(3):
        e = [Fraction(int(i == k)) for i in range(3)]
        inv_cols.append(solve_linear(V, e))
    comps = []
    for i in range(3):
        comps.append(sum((values[k] * inv_cols[k][i] for k in range(3)), Poly(VARS)))
    c0, c1, c2 = comps
    return c2, c1, c0


def reconstruct_generic(a, b, r: int) -> Tuple[Poly, Poly, Poly]:
    """Same components, computed in Q[theta]/(theta^3 + a theta + b)."""
    a, b = Q(a), Q(b)
    K = cubic_algebra(a, b)
    th = K.gen("theta")
    t, a0, a1, a2 = (p.with_vars(VARS) for p in Poly.symbols(*VARS))
    w = a0 * K.one() + th * a1 + th * th * a2
    m, l = cusp_pair(a, th)
    quad = t * t * K.one() - m * t + l
    expr = w * w - generic_alpha(a, b, r) * quad
    c0, c1, c2 = (c if isinstance(c, Poly) else Poly.const(c).with_vars(VARS) for c in expr.coords)
    return tuple(Poly._coerce(c).with_vars(VARS) for c in (c2, c1, c0))


@dataclass
class ComparisonReport:
    r: int
    verdict: str
    scalars: Tuple[Optional[Fraction], ...]
    mode: str
    routes_agree: bool = True

    def to_json(self) -> dict:
        return {"r": self.r, "verdict": self.verdict, "mode": self.mode,
                "scalars": [None if s is None else qstr(s) for s in self.scalars],
                "routes_agree": self.routes_agree}


def coefficient_comparison_oracle(a, b, r: int) -> ComparisonReport:
    """Rebuild the system from alpha_{r,j} and the cusp pairs; compare with the
    explicit system equation by equation (each up to a rational scalar)."""
    a, b = Q(a), Q(b)
    sys = build_system(a, b, r)
    roots = two_torsion_roots(a, b)
    generic = reconstruct_generic(a, b, r)
    mode = "algebra"
    recon = generic
    agree = True
    if len(roots) == 3:
        mode = "split"
        recon = reconstruct_split(a, b, r, roots)
        agree = all(x == y for x, y in zip(recon, generic))
    direct = [_proportional(p, q) for p, q in zip(sys.equations, recon)]
    if all(c is not None for c in direct):
        return ComparisonReport(r, MATCH, tuple(direct), mode, agree)
    flipped = [_proportional(p, _negate_t(q)) for p, q in zip(sys.equations, recon)]
    if all(c is not None for c in flipped):
        return ComparisonReport(r, MATCH_NEG_T, tuple(flipped), mode, agree)
    return ComparisonReport(r, NO_MATCH, tuple(flipped), mode, agree)


# ---------------------------------------------------------------------------
# recovering the partner curve


def forgetful_power(r: int) -> int:
    if r not in VALID_R:
        raise ValueError(f"r must be one of {VALID_R}")
    return 1 if r in (1, 5) else 3


def recover_curve(a, b, r: int, P: X8Point) -> Curve:
    sys = build_system(a, b, r)
    if not on_system(sys, P):
        raise NotOnCurve("point not on curve")
    return family_x4(a, b, P.t, forgetful_power(r))
