"""Weierstrass models over Q, their reductions mod p, and the group law."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Poly, Q, height_key, is_rational_square, qstr, rational_roots, resultant, valuation

GOOD = "good"
SPLIT = "multiplicative-split"
NONSPLIT = "multiplicative-nonsplit"
ADDITIVE = "additive"


class SingularModel(ValueError):
    pass


@dataclass(frozen=True)
class Curve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q."""

    a1: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)
    a3: Fraction = Fraction(0)
    a4: Fraction = Fraction(0)
    a6: Fraction = Fraction(0)
    _inv: Dict[str, Fraction] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Q(getattr(self, name)))
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        c4 = b2 * b2 - 24 * b4
        c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
        disc = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        if disc == 0:
            raise SingularModel("singular model")
        inv = dict(b2=b2, b4=b4, b6=b6, b8=b8, c4=c4, c6=c6, disc=disc, j=c4 ** 3 / disc)
        object.__setattr__(self, "_inv", inv)

    @classmethod
    def short(cls, a, b) -> "Curve":
        return cls(0, 0, 0, a, b)

    @property
    def ainvs(self) -> Tuple[Fraction, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def c4(self) -> Fraction:
        return self._inv["c4"]

    @property
    def c6(self) -> Fraction:
        return self._inv["c6"]

    @property
    def discriminant(self) -> Fraction:
        return self._inv["disc"]

    @property
    def j(self) -> Fraction:
        return self._inv["j"]

    def is_short(self) -> bool:
        return self.a1 == self.a2 == self.a3 == 0

    def contains(self, P) -> bool:
        if P is None:
            return True
        x, y = P
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x * x * x + self.a2 * x * x + self.a4 * x + self.a6
        d = lhs - rhs
        return d.is_zero() if hasattr(d, "is_zero") else d == 0

    # -- serialisation -----------------------------------------------------
    def to_json(self) -> Dict[str, str]:
        return {k: qstr(v) for k, v in zip(("a1", "a2", "a3", "a4", "a6"), self.ainvs)}

    @classmethod
    def from_json(cls, data: Dict[str, str]) -> "Curve":
        if "a" in data or "b" in data:
            return cls.short(Q(data["a"]), Q(data["b"]))
        return cls(*(Q(data.get(k, "0")) for k in ("a1", "a2", "a3", "a4", "a6")))

    def __str__(self):
        def term(c, s):
            if c == 0:
                return ""
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = s if (mag == 1 and s) else (f"{mag}{'*' + s if s else ''}")
            return f" {sign} {body}"
        lhs = "y^2" + term(self.a1, "x*y") + term(self.a3, "y")
        rhs = "x^3" + term(self.a2, "x^2") + term(self.a4, "x") + term(self.a6, "")
        return f"{lhs} = {rhs}"


def invariants(C: Curve) -> Tuple[Fraction, ...]:
    """(b2, b4, b6, b8, c4, c6, disc, j)."""
    i = C._inv
    return (i["b2"], i["b4"], i["b6"], i["b8"], i["c4"], i["c6"], i["disc"], i["j"])


def short_form(C: Curve) -> Tuple[Fraction, Fraction]:
    """(a, b) = (-27 c4, -54 c6); y^2 = x^3 + a x + b is Q-isomorphic to C."""
    return -27 * C.c4, -54 * C.c6


def short_model(C: Curve) -> Curve:
    return Curve.short(*short_form(C))


def discriminant_D(a, b) -> Fraction:
    """D = -4a^3 - 27b^2 for y^2 = x^3 + ax + b."""
    a, b = Q(a), Q(b)
    return -4 * a ** 3 - 27 * b * b


def _kth_root(x: Fraction, k: int) -> Optional[Fraction]:
    if x < 0 and k % 2 == 0:
        return None
    sign = -1 if x < 0 else 1
    out = []
    for n in (abs(x.numerator), x.denominator):
        r = round(n ** (1.0 / k)) if n < 2 ** 60 else _iroot(n, k)
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand ** k == n:
                out.append(cand)
                break
        else:
            return None
    return sign * Fraction(out[0], out[1])


def _iroot(n: int, k: int) -> int:
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def is_q_isomorphic(C1: Curve, C2: Curve) -> bool:
    """Is there a rational u != 0 with c4(C2) = u^4 c4(C1), c6(C2) = u^6 c6(C1)?"""
    c4, c6, d4, d6 = C1.c4, C1.c6, C2.c4, C2.c6
    if C1.j != C2.j:
        return False
    if c4 == 0:
        return d4 == 0 and _kth_root(d6 / c6, 6) is not None
    if c6 == 0:
        return d6 == 0 and _kth_root(d4 / c4, 4) is not None
    if d4 == 0 or d6 == 0:
        return False
    u2 = (d6 / c6) / (d4 / c4)
    return is_rational_square(u2) and u2 * u2 == d4 / c4 and u2 ** 3 == d6 / c6


def quadratic_twist(C: Curve, d) -> Curve:
    """y^2 = x^3 + a d^2 x + b d^3 for C: y^2 = x^3 + ax + b."""
    d = Q(d)
    if d == 0:
        raise ValueError("twist by zero")
    a, b = (C.a4, C.a6) if C.is_short() else short_form(C)
    return Curve.short(a * d * d, b * d ** 3)


# ---------------------------------------------------------------------------
# reduction mod p


@dataclass(frozen=True)
class ReductionInfo:
    p: int
    type: str
    Np: int
    ap: int
    vdelta: int

    def to_json(self) -> dict:
        return {"p": self.p, "type": self.type, "ap": self.ap, "vdelta": self.vdelta}


def _kraus_ok(c4: int, c6: int, p: int) -> bool:
    """Kraus' local conditions for (c4, c6) to come from a p-integral model."""
    if p == 3:
        return c6 == 0 or valuation(c6, 3) != 2
    if p == 2:
        if c6 % 4 == 3:
            return True
        return (c4 == 0 or valuation(c4, 2) >= 4) and c6 % 32 in (0, 8)
    return True


def _model_from_c4c6(c4: int, c6: int) -> Optional[Tuple[int, ...]]:
    b2 = -c6 % 12
    if b2 > 6:
        b2 -= 12
    if (b2 * b2 - c4) % 24:
        return None
    b4 = (b2 * b2 - c4) // 24
    if (-b2 ** 3 + 36 * b2 * b4 - c6) % 216:
        return None
    b6 = (-b2 ** 3 + 36 * b2 * b4 - c6) // 216
    a1, a3 = b2 % 2, b6 % 2
    return (a1, (b2 - a1) // 4, a3, (b4 - a1 * a3) // 2, (b6 - a3) // 4)


@lru_cache(maxsize=256)
def _minimal_ainvs(c4: Fraction, c6: Fraction) -> Optional[Tuple[Fraction, ...]]:
    import sympy

    # integral invariants first: (c4 u^4, c6 u^6) for the least u
    u = 1
    for c, w in ((c4, 4), (c6, 6)):
        if c:
            for q, e in sympy.factorint(c.denominator).items():
                k = _ceil_div(e, w)
                while u % q ** k:
                    u *= q
    C4, C6 = int(c4 * u ** 4), int(c6 * u ** 6)
    local_1728 = {2: 64, 3: 27}

    def admissible(c4_, c6_, q):
        return _kraus_ok(c4_, c6_, q) and (c4_ ** 3 - c6_ ** 2) % local_1728.get(q, 1) == 0

    for q in (2, 3):
        for _ in range(3):
            if admissible(C4, C6, q):
                break
            C4, C6 = C4 * q ** 4, C6 * q ** 6
    g = math.gcd(C4, C6) if C4 else C6
    for q in sorted(sympy.factorint(abs(g))):
        k = 0
        while C4 % q ** (4 * (k + 1)) == 0 and C6 % q ** (6 * (k + 1)) == 0:
            k += 1
        # largest admissible scaling; q-admissibility need not be monotone in k
        for j in range(k, 0, -1):
            c4_, c6_ = C4 // q ** (4 * j), C6 // q ** (6 * j)
            if admissible(c4_, c6_, q):
                C4, C6 = c4_, c6_
                break
    model = _model_from_c4c6(C4, C6)
    if model is None:
        return None
    m = Curve(*model)
    if (m.c4, m.c6) != (C4, C6):
        return None
    return tuple(Fraction(x) for x in model)


def minimal_model(C: Curve) -> Curve:
    """Global minimal model (Kraus-Connell reconstruction from c4, c6)."""
    ainvs = _minimal_ainvs(C.c4, C.c6)
    if ainvs is None:
        raise ValueError("no integral model reconstructed")
    return Curve(*ainvs)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def local_model(C: Curve, p: int) -> Tuple[Fraction, ...]:
    """A p-integral model of C used for reduction mod p.

    For p >= 5 the short model (-27c4, -54c6) is rescaled to be p-integral
    and p-minimal (a p-unit change of coordinates).  For p = 2, 3 the global
    minimal model is used; the given model, rescaled until p-integral, is
    the fallback when that reconstruction fails.
    """
    if p >= 5:
        A, B = short_form(C)
        needs = []
        if A:
            needs.append(_ceil_div(-valuation(A, p), 4))
        if B:
            needs.append(_ceil_div(-valuation(B, p), 6))
        e = max(needs)
        u = Fraction(p) ** e
        return (Fraction(0), Fraction(0), Fraction(0), A * u ** 4, B * u ** 6)
    ainvs = _minimal_ainvs(C.c4, C.c6)
    if ainvs is not None:
        return ainvs
    e = 0
    for i, c in zip((1, 2, 3, 4, 6), C.ainvs):
        if c and valuation(c, p) < 0:
            e = max(e, _ceil_div(-valuation(c, p), i))
    u = Fraction(p) ** e
    return tuple(c * u ** i for i, c in zip((1, 2, 3, 4, 6), C.ainvs))


def _reduce(c: Fraction, p: int) -> int:
    if c.denominator % p == 0:
        raise ValueError("model not p-integral")
    return c.numerator * pow(c.denominator, -1, p) % p


@lru_cache(maxsize=None)
def _squares(p: int) -> frozenset:
    return frozenset(x * x % p for x in range(p))


def _legendre(n: int, p: int) -> int:
    n %= p
    if n == 0:
        return 0
    return 1 if n in _squares(p) else -1


def _model_disc(model) -> Fraction:
    return Curve(*model).discriminant


def _count(ai: Sequence[int], p: int) -> int:
    a1, a2, a3, a4, a6 = ai
    n = 1  # point at infinity
    if p == 2:
        for x in range(2):
            for y in range(2):
                if (y * y + a1 * x * y + a3 * y - x ** 3 - a2 * x * x - a4 * x - a6) % 2 == 0:
                    n += 1
        return n
    sq = _squares(p)
    for x in range(p):
        d = ((a1 * x + a3) ** 2 + 4 * (x ** 3 + a2 * x * x + a4 * x + a6)) % p
        n += 1 if d == 0 else (2 if d in sq else 0)
    return n


def _singular_type(ai: Sequence[int], p: int) -> str:
    a1, a2, a3, a4, a6 = ai

    def F(x, y):
        return (y * y + a1 * x * y + a3 * y - x ** 3 - a2 * x * x - a4 * x - a6) % p

    def Fx(x, y):
        return (a1 * y - 3 * x * x - 2 * a2 * x - a4) % p

    def Fy(x, y):
        return (2 * y + a1 * x + a3) % p

    point = None
    if p == 2:
        for x in range(2):
            for y in range(2):
                if F(x, y) == 0 and Fx(x, y) == 0 and Fy(x, y) == 0:
                    point = (x, y)
    else:
        inv2 = pow(2, -1, p)
        for x in range(p):
            y = (-(a1 * x + a3) * inv2) % p
            if F(x, y) == 0 and Fx(x, y) == 0:
                point = (x, y)
                break
    if point is None:
        raise RuntimeError(f"no singular point found mod {p}")
    x0, _ = point
    c = (-(3 * x0 + a2)) % p  # tangent cone Y^2 + a1 X Y + c X^2
    if p == 2:
        if a1 % 2 == 0:
            return ADDITIVE
        return SPLIT if c == 0 else NONSPLIT
    disc = (a1 * a1 - 4 * c) % p
    if disc == 0:
        return ADDITIVE
    return SPLIT if disc in _squares(p) else NONSPLIT


def reduction_type(C: Curve, p: int) -> ReductionInfo:
    """Point count, trace and reduction type of C at p."""
    model = local_model(C, p)
    ai = [_reduce(c, p) for c in model]
    disc = _model_disc(model)
    vdelta = valuation(disc, p)
    n = _count(ai, p)
    ap = p + 1 - n
    if vdelta == 0:
        kind = GOOD
    else:
        kind = _singular_type(ai, p)
        if p in (2, 3) and _minimal_ainvs(C.c4, C.c6) is None:
            m = Curve(*model)
            if vdelta >= 12 and m.c4 != 0 and valuation(m.c4, p) >= 4:
                warnings.warn(f"model possibly non-minimal at p={p}", stacklevel=2)
    return ReductionInfo(p=p, type=kind, Np=n, ap=ap, vdelta=vdelta)


def count_points(C: Curve, p: int) -> ReductionInfo:
    """Projective F_p-points of the reduced model (singular point included)."""
    return reduction_type(C, p)


def ap(C: Curve, p: int) -> int:
    return reduction_type(C, p).ap


def primes_up_to(n: int) -> List[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, v in enumerate(sieve) if v]


# ---------------------------------------------------------------------------
# division polynomials and 4-torsion


def division_polynomials(n: int, a, b) -> List[Tuple[Poly, int]]:
    """psi_0..psi_n for y^2 = x^3 + ax + b as pairs (poly in x, power of y).

    psi_k = P_k(x) * y^{e_k} with e_k = 0 for odd k and 1 for even k; y^2 is
    replaced by x^3 + ax + b throughout.
    """
    a, b = Q(a), Q(b)
    x = Poly.var("x")
    cubic = x ** 3 + a * x + b
    psi: List[Tuple[Poly, int]] = [
        (Poly(("x",)), 0),
        (Poly.const(1).with_vars(("x",)), 0),
        (Poly.const(2).with_vars(("x",)), 1),
        (3 * x ** 4 + 6 * a * x ** 2 + 12 * b * x - a * a, 0),
        (4 * (x ** 6 + 5 * a * x ** 4 + 20 * b * x ** 3 - 5 * a * a * x ** 2
              - 4 * a * b * x - 8 * b * b - a ** 3), 1),
    ]

    def mul(*terms):
        poly = Poly.const(1).with_vars(("x",))
        e = 0
        for p_, k in terms:
            poly = poly * p_
            e += k
        poly = poly * cubic ** (e // 2)
        return poly, e % 2

    def sub(u, v):
        if u[0].is_zero():
            return (-v[0], v[1])
        if v[0].is_zero():
            return u
        assert u[1] == v[1]
        return (u[0] - v[0], u[1])

    def cube(t):
        return [t, t, t]

    def sq(t):
        return [t, t]

    k = 5
    while k <= n:
        m = k // 2
        if k % 2:
            u = mul(psi[m + 2], *cube(psi[m]))
            v = mul(psi[m - 1], *cube(psi[m + 1]))
            psi.append(sub(u, v))
        else:
            u = mul(psi[m + 2], *sq(psi[m - 1]))
            v = mul(psi[m - 2], *sq(psi[m + 1]))
            inner = sub(u, v)
            poly, e = mul(psi[m], inner)
            # divide by 2y
            if e == 1:
                psi.append((poly * Fraction(1, 2), 0))
            else:
                poly = poly.exact_div(cubic)
                psi.append((poly * Fraction(1, 2), 1))
        k += 1
    return psi[: n + 1]


def primitive_four_torsion_sextic(a, b) -> Poly:
    """Monic sextic whose roots are x-coordinates of points of exact order 4."""
    psi4, e4 = division_polynomials(4, a, b)[4]
    psi2, e2 = division_polynomials(2, a, b)[2]
    assert e4 == e2 == 1
    q = psi4.exact_div(psi2)
    _, lead = q.leading_term()
    return q * (1 / lead)


def delta_triple(thetas: Sequence[Fraction]) -> Tuple[Fraction, Fraction, Fraction]:
    t1, t2, t3 = thetas
    return ((t1 - t2) * (t3 - t1), (t1 - t2) * (t2 - t3), (t2 - t3) * (t3 - t1))


@dataclass(frozen=True)
class FourTorsionData:
    sextic: Poly
    thetas: Optional[Tuple[Fraction, Fraction, Fraction]]
    deltas: Optional[Tuple[Fraction, Fraction, Fraction]]


def two_torsion_roots(a, b) -> List[Fraction]:
    x = Poly.var("x")
    return sorted(rational_roots(x ** 3 + Q(a) * x + Q(b)), key=height_key)


def four_torsion_data(a, b) -> FourTorsionData:
    a, b = Q(a), Q(b)
    if discriminant_D(a, b) == 0:
        raise SingularModel("singular model")
    sextic = primitive_four_torsion_sextic(a, b)
    roots = two_torsion_roots(a, b)
    if len(roots) != 3:
        return FourTorsionData(sextic, None, None)
    thetas = tuple(roots)
    deltas = delta_triple(thetas)
    x = Poly.var("x")
    prod = Poly.const(1)
    for th, de in zip(thetas, deltas):
        prod = prod * ((x - th) ** 2 + de)
    if prod != sextic:
        raise AssertionError("sextic does not factor as prod((x - theta)^2 + delta)")
    return FourTorsionData(sextic, thetas, deltas)


def duplication_numerator_resultant(a, b) -> Poly:
    """Res_z(num(x(2P)) - z den(x(2P)), z^3 + a z + b) as a poly in x.

    Vanishes exactly where 2P is a nontrivial 2-torsion point, i.e. at the
    x-coordinates of points of exact order 4 (each with multiplicity two).
    """
    a, b = Q(a), Q(b)
    x, z = Poly.symbols("x", "z")
    num = x ** 4 - 2 * a * x ** 2 - 8 * b * x + a * a
    den = 4 * (x ** 3 + a * x + b)
    return resultant(num - z * den, z ** 3 + a * z + b, "z")


# ---------------------------------------------------------------------------
# group law over any ring with exact division

INFINITY = None


def ec_neg(C: Curve, P):
    if P is None:
        return None
    x, y = P
    return (x, -y - C.a1 * x - C.a3)


def _zero(v) -> bool:
    return v.is_zero() if hasattr(v, "is_zero") else v == 0


def ec_add(C: Curve, P, R):
    """Chord-tangent addition; None is the point at infinity.

    Coordinates may live in any ring supporting +, -, * and exact division
    (Fractions, quotient-algebra elements, ...).  Division by a non-unit
    propagates :class:`~x8twists.algebra.NotUnit`.
    """
    if P is None:
        return R
    if R is None:
        return P
    a1, a2, a3, a4, a6 = C.ainvs
    x1, y1 = P
    x2, y2 = R
    if _zero(x1 - x2):
        if _zero(y1 + y2 + a1 * x2 + a3):
            return None
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return (x3, y3)


def ec_group_law(C: Curve, P, R):
    return ec_add(C, P, R)


def ec_mul(C: Curve, n: int, P):
    if n < 0:
        return ec_mul(C, -n, ec_neg(C, P))
    result = None
    addend = P
    while n:
        if n & 1:
            result = ec_add(C, result, addend)
        addend = ec_add(C, addend, addend)
        n >>= 1
    return result


def points_equal(P, R) -> bool:
    if P is None or R is None:
        return P is None and R is None
    return _zero(P[0] - R[0]) and _zero(P[1] - R[1])
