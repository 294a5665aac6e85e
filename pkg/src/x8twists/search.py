"""Rational points on X^r_E(8): fiber solving, sweeps, explicit families."""

from __future__ import annotations

import logging
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .algebra import Poly, Q, RationalFunction, height, height_key, rational_roots, \
    rationals_up_to_height, resultant, ugcd
from .elliptic import Curve, SingularModel
from .twists8 import VALID_R, VARS, X8Point, build_system, evaluate, system_values

log = logging.getLogger(__name__)


class DegenerateParameter(ValueError):
    pass


# ---------------------------------------------------------------------------
# fiber solving


def _fiber_equations(a, b, r: int, t) -> Tuple[Poly, Poly, Poly]:
    a0, a1, a2 = Poly.symbols("a0", "a1", "a2")
    names = ("a0", "a1", "a2")
    out = []
    for v in system_values(Q(a), Q(b), r, Q(t), a0, a1, a2):
        out.append(Poly._coerce(v).with_vars(names))
    return tuple(out)


def _strip_var_power(p: Poly, var: str) -> Poly:
    """Divide out the largest power of ``var`` dividing p."""
    if p.is_zero() or var not in p.vars:
        return p
    i = p.vars.index(var)
    k = min(m[i] for m in p.terms)
    if not k:
        return p
    terms = {}
    for m, c in p.terms.items():
        mm = list(m)
        mm[i] -= k
        terms[tuple(mm)] = c
    return Poly(p.vars, terms)


def _univariate_roots(polys: Sequence[Poly], var: str) -> Optional[List[Fraction]]:
    """Common rational roots in ``var`` of univariate polys; None if all vanish."""
    g: List[Fraction] = []
    for p in polys:
        if p.is_zero():
            continue
        name, coeffs = p.with_vars((var,)).univariate()
        g = coeffs if not g else ugcd(g, coeffs)
        if len(g) == 1:
            return []
    if not g:
        return None
    return rational_roots(g) if len(g) > 1 else []


def _solve_a2_zero(f: Poly, g: Poly, h: Poly) -> List[Tuple[Fraction, Fraction, Fraction]]:
    sub = [p.subs({"a2": Fraction(0)}) for p in (f, g, h)]
    sub = [Poly._coerce(p).with_vars(("a0", "a1")) for p in sub]
    f0, g0, h0 = sub
    if f0.degree("a0") > 0:
        raise AssertionError("f_r depends on a0 when a2 = 0")
    out = []
    roots = _univariate_roots([f0], "a1")
    for x1 in roots or []:
        rest = [Poly._coerce(p.subs({"a1": x1})).with_vars(("a0",)) for p in (g0, h0)]
        r0 = _univariate_roots(rest, "a0")
        if r0 is None:
            warnings.warn("positive-dimensional fiber component at a2=0 skipped")
            continue
        out.extend((x0, x1, Fraction(0)) for x0 in r0)
    return out


def _common_factor_fallback(G: Poly, H: Poly) -> Tuple[Poly, Poly, Poly]:
    """Split off the common factor of two bivariate polys (via sympy gcd)."""
    import sympy

    syms = sympy.symbols("a1 a2")

    def to_sym(p: Poly):
        p = p.with_vars(("a1", "a2"))
        return sum(sympy.Rational(c.numerator, c.denominator) * syms[0] ** m[0] * syms[1] ** m[1]
                   for m, c in p.terms.items())

    def from_sym(e) -> Poly:
        sp = sympy.Poly(e, *syms)
        return Poly(("a1", "a2"), {m: Fraction(int(c.p), int(c.q)) for m, c in sp.terms()})

    g = sympy.gcd(to_sym(G), to_sym(H))
    common = from_sym(g)
    return common, G.exact_div(common), H.exact_div(common)


def _solve_a2_nonzero(f: Poly, g: Poly, h: Poly) -> List[Tuple[Fraction, Fraction, Fraction]]:
    # f_r = c*a0 + R with c = +-2*a2; g_r is linear in a0 too
    fc = f.coeffs_in("a0")
    gc = g.coeffs_in("a0")
    hc = h.coeffs_in("a0") + [Poly(("a1", "a2"))] * 3
    if len(fc) != 2 or len(gc) > 2:
        raise AssertionError("unexpected a0-degrees in the system")
    R, c = fc
    g0, g1 = (gc + [Poly(("a1", "a2"))])[:2]
    h0, h1, h2 = hc[:3]
    G = g1 * (-R) + g0 * c
    H = h2 * R * R - h1 * R * c + h0 * c * c
    G = _strip_var_power(G.with_vars(("a1", "a2")), "a2")
    H = _strip_var_power(H.with_vars(("a1", "a2")), "a2")
    pieces = [(G, H)]
    if G.is_zero() or H.is_zero():
        pieces = []
        warnings.warn("eliminated fiber equation vanishes identically")
    elif "a1" in G.used_vars() or "a1" in H.used_vars():
        res = resultant(G, H, "a1")
        if res.is_zero():
            warnings.warn("degenerate resultant; splitting off the common factor")
            common, G2, H2 = _common_factor_fallback(G, H)
            log.info("common component %s dropped (positive-dimensional)", common)
            pieces = [(G2, H2)]
    candidates: List[Tuple[Fraction, Fraction]] = []
    for Gp, Hp in pieces:
        if "a1" in Gp.used_vars() or "a1" in Hp.used_vars():
            res = resultant(Gp, Hp, "a1")
            if res.is_zero():
                continue
            a2_roots = [] if res.is_constant() else rational_roots(res.with_vars(("a2",)))
        else:
            a2_roots = _univariate_roots([Gp, Hp], "a2") or []
        for x2 in a2_roots:
            if x2 == 0:
                continue
            sub = [Poly._coerce(p.subs({"a2": x2})).with_vars(("a1",)) for p in (Gp, Hp)]
            r1 = _univariate_roots(sub, "a1")
            if r1 is None:
                warnings.warn("positive-dimensional fiber component skipped")
                continue
            candidates.extend((x1, x2) for x1 in r1)
    out = []
    for x1, x2 in candidates:
        cv = c.eval({"a1": x1, "a2": x2})
        x0 = -R.eval({"a1": x1, "a2": x2}) / cv
        out.append((x0, x1, x2))
    return out


def solve_fiber(a, b, r: int, t) -> List[X8Point]:
    """All rational points of X^r_E(8) lying over the given t."""
    if r not in VALID_R:
        raise ValueError(f"r must be one of {VALID_R}")
    a, b, t = Q(a), Q(b), Q(t)
    f, g, h = _fiber_equations(a, b, r, t)
    found = set()
    for x0, x1, x2 in _solve_a2_zero(f, g, h) + _solve_a2_nonzero(f, g, h):
        found.add(X8Point(t, x0, x1, x2))
    verified = []
    for P in found:
        # never trust the elimination: re-check exactly
        if system_values(a, b, r, *P.as_tuple()) == (0, 0, 0):
            verified.append(P)
        else:
            log.debug("discarded spurious candidate %s", P)
    return sorted(verified, key=_point_key)


def _point_key(P: X8Point):
    return tuple(height_key(c) for c in P.as_tuple())


# ---------------------------------------------------------------------------
# sweeps

FIBER, SWEEP, SURFACE = "fiber", "sweep", "surface"


@dataclass
class SearchConfig:
    height: int
    r: int
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    mode: str = SWEEP
    t: Optional[Fraction] = None
    a_values: Optional[List[Fraction]] = None
    workers: int = 1

    def __post_init__(self):
        if self.height < 0:
            raise ValueError("height bound must be non-negative")
        if self.r not in VALID_R:
            raise ValueError(f"r must be one of {VALID_R}")
        if self.mode not in (FIBER, SWEEP, SURFACE):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == FIBER and self.t is None:
            raise ValueError("fiber mode needs t")
        self.a, self.b = Q(self.a), Q(self.b)


@dataclass(frozen=True)
class SearchHit:
    a: Fraction
    b: Fraction
    point: X8Point

    def to_json(self) -> dict:
        out = self.point.to_json()
        out.update({"a": str(self.a), "b": str(self.b)})
        return out


def t_values(bound: int) -> List[Fraction]:
    """Rationals of height <= max(bound, 1) in enumeration order."""
    return rationals_up_to_height(max(bound, 1))


def _fiber_job(args) -> List[SearchHit]:
    a, b, r, t = args
    try:
        pts = solve_fiber(a, b, r, t)
    except SingularModel:
        return []
    return [SearchHit(a, b, P) for P in pts]


def sweep(config: SearchConfig) -> List[SearchHit]:
    """Solve fibers over a height box; one representative per pair {P, -P}."""
    if config.mode == FIBER:
        jobs = [(config.a, config.b, config.r, Q(config.t))]
    elif config.mode == SWEEP:
        jobs = [(config.a, config.b, config.r, t) for t in t_values(config.height)]
    else:
        avals = config.a_values if config.a_values is not None else t_values(config.height)
        jobs = [(Q(a), Q(a), config.r, t)
                for a in avals if -4 * Q(a) ** 3 - 27 * Q(a) ** 2 != 0
                for t in t_values(config.height)]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            results = list(pool.map(_fiber_job, jobs, chunksize=8))
    else:
        results = [_fiber_job(j) for j in jobs]
    seen = set()
    hits = []
    for batch in results:
        for hit in batch:
            key = (hit.a, hit.b, hit.point.canonical())
            if key in seen:
                continue
            seen.add(key)
            hits.append(SearchHit(hit.a, hit.b, hit.point.canonical()))
    hits.sort(key=lambda h: (height_key(h.a), height_key(h.b)) + _point_key(h.point))
    return hits


# ---------------------------------------------------------------------------
# rational surface S_{a,1}


def _h1(p, q):
    return (q ** 6 - Fraction(3, 2) * q ** 5 + 3 * q ** 4 + Fraction(1, 2) * q ** 3 * p
            - Fraction(9, 2) * q ** 3 - Fraction(3, 2) * q ** 2 * p + Fraction(1, 2) * q ** 2
            + 3 * q * p - q - Fraction(1, 2) * p ** 2 + Fraction(1, 2))


def _h2(p, q):
    return q ** 6 - 3 * q ** 5 + 3 * q ** 4 + q ** 3 * p - 9 * q ** 3 - 3 * q ** 2 * p + 6 * q * p - 2 * q + 2


_h3, _h5 = _h1, _h2   # h3, h5 coincide with h1, h2


def _h4(p, q):
    return (q ** 10 - 2 * q ** 9 + 10 * q ** 8 + 2 * q ** 7 * p - 8 * q ** 7 - 8 * q ** 6 * p
            + 26 * q ** 6 + 12 * q ** 5 * p - 6 * q ** 5 + q ** 4 * p ** 2 - 32 * q ** 4 * p
            + 16 * q ** 4 - 6 * q ** 3 * p ** 2 + 6 * q ** 3 * p - 4 * q ** 3 + 11 * q ** 2 * p ** 2
            - 16 * q ** 2 * p + q ** 2 + 4 * q * p - 4 * q + 2 * p ** 2 + 2)


def closed_form_71(p, q) -> Tuple[Fraction, Fraction]:
    """(a, t) from the closed-form rational map on the (p, q) plane."""
    p, q = Q(p), Q(q)
    d1 = q ** 4 + 3 * q ** 2 - 2 * p
    d2 = q ** 6 + 3 * q ** 4 + q ** 2 - p ** 2 - 1
    den_a = (q - 1) * d1 * d2 ** 2 * _h2(p, q)
    den_t = 3 * (q - 1) * d1 * d2 * _h5(p, q)
    if den_a == 0 or den_t == 0:
        raise DegenerateParameter("degenerate parameter")
    a = -8 * (q + 1) * (q ** 2 + 2) ** 2 * _h1(p, q) ** 3 / den_a
    t = -(q ** 2 + 2) * _h3(p, q) * _h4(p, q) / den_t
    return a, t


def _conic_hq(a1, a2):
    return (a1 ** 6 * a2 ** 2 + 3 * a1 ** 5 * a2 + 3 * a1 ** 4 * a2 ** 2 + Fraction(9, 4) * a1 ** 4
            + 9 * a1 ** 3 * a2 + a1 ** 2 * a2 ** 2 + 9 * a1 ** 2 + 2 * a1 * a2 - a2 ** 2 + 1)


def pencil_slope(p, q) -> Fraction:
    """Slope of the line through the base point that corresponds to (p, q)."""
    p, q = Q(p), Q(q)
    h20 = _h2(Fraction(0), q)
    cp = (q ** 3 - 3 * q) * (q ** 3 - 3 * q ** 2 + 6 * q) - h20
    if h20 == 0 or _h2(p, q) == 0:
        raise DegenerateParameter("degenerate parameter")
    beta = ((q ** 3 - 3 * q) * h20 + cp * (q ** 4 + 3 * q ** 2) / 2) / h20
    return h20 * (p + beta) / _h2(p, q)


@dataclass(frozen=True)
class Param71:
    a: Fraction
    point: X8Point
    reference_t: Fraction

    @property
    def t_orientation(self) -> int:
        """+1 if the replayed t equals the closed form, -1 if it is its negative."""
        if self.point.t == self.reference_t:
            return 1
        if self.point.t == -self.reference_t:
            return -1
        return 0


def replay_71(s, m) -> Tuple[Fraction, X8Point]:
    """Point of S_{a,1} from the conic parameter s and pencil slope m."""
    s, m = Q(s), Q(m)
    if s == 1:
        raise DegenerateParameter("degenerate parameter")
    # base point of the conic w^2 = hq(s, x)
    x_base = -1 / (s - 1)
    w_base = (3 * s - Fraction(3, 2) * s ** 2 + Fraction(1, 2) * s ** 3) / (s - 1)
    c0 = _conic_hq(s, 0)
    c1 = (_conic_hq(s, 1) - _conic_hq(s, -1)) / 2
    c2 = _conic_hq(s, 1) - c0 - c1
    if c2 == m * m:
        raise DegenerateParameter("degenerate parameter")
    d = (2 * w_base * m - 2 * c2 * x_base - c1) / (c2 - m * m)
    A2 = x_base + d
    w = w_base + m * d
    A1 = s * A2
    A = -A1 ** 2 - 2 * A1 + A2 ** 2 - 1
    B = (-2 * A1 ** 4 - 3 * A1 ** 3 - 4 * A1 ** 2 * A2 ** 2 - A1 ** 2 - 10 * A1 * A2 ** 2
         + 2 * A2 ** 4 - 2 * A2 ** 2)
    if A == 0 or A2 == 0:
        raise DegenerateParameter("degenerate parameter")
    A0 = (2 * A2 ** 3 * w - B) / (2 * A)
    a = 2 * A0 + A1 ** 2 + 2 * A2 ** 2
    t_aux = (-2 * a * A1 - a + 2 * A0 * A1) / (2 * A2)
    # undo (t, a0, a1, a2) -> (-t/a2, a0/a2, a1/a2, 1/(3 a2))
    a2 = 1 / (3 * A2)
    return a, X8Point(-t_aux * a2, A0 * a2, A1 * a2, a2)


def param_71(p, q) -> Param71:
    a, t_ref = closed_form_71(p, q)
    if a == 0 or 4 * a ** 3 + 27 * a ** 2 == 0:
        raise DegenerateParameter("degenerate parameter")
    a_rep, P = replay_71(q, pencil_slope(p, q))
    if a_rep != a:
        raise AssertionError("replayed a differs from the closed form")
    if system_values(a, a, 1, *P.as_tuple()) != (0, 0, 0):
        raise AssertionError("replayed point is not on S_{a,1}")
    return Param71(a, P, t_ref)


# ---------------------------------------------------------------------------
# genus zero curves on S_{a,5}, S_{a,3}, S_{a,7}

P73, P74, P75 = "P73", "P74", "P75"
GENUS0_R = {P73: 5, P74: 3, P75: 7}


def _p73(p: Fraction):
    u = p ** 2 - 12 * p + 12
    v = p ** 2 - 4 * p + 12
    w = p ** 2 - 12
    if w == 0 or u == 0:
        raise DegenerateParameter("degenerate parameter")
    a = Fraction(27, 8) * u ** 2 / w ** 2
    t = -Fraction(1, 2) * u / w
    a0 = Fraction(-243, 32) * u ** 3 * v / w ** 4
    a1 = Fraction(81, 8) * u ** 2 * v / w ** 3
    return a, X8Point(t, a0, a1, Fraction(0))


def p74_values(r, a2_linear=lambda r: r + Fraction(1, 8)):
    """Closed forms on S_{a,3}; ``a2_linear`` is the lone linear factor of a2."""
    n1 = r ** 2 - 2 * r - Fraction(15, 8)
    n2 = r ** 2 + Fraction(1, 8)
    d1 = r ** 2 - r + Fraction(11, 8)
    d2 = r ** 2 + r + Fraction(3, 8)
    d3 = r ** 2 + 2 * r - Fraction(1, 8)
    m1 = r ** 2 - 2 * r + Fraction(21, 8)
    m2 = r ** 2 - r / 2 - Fraction(3, 8)
    m3 = r ** 2 + r / 2 + Fraction(5, 8)
    m4 = r ** 2 + Fraction(6, 5) * r + Fraction(17, 40)
    a = Fraction(-135, 4) * n1 * n2 / (d1 * d2 * d3)
    t = Fraction(1, 2) * n1 * n2 / (d1 * d2)
    a0 = -135 * m1 * m2 * n2 ** 2 * m3 * m4 / (d1 ** 2 * d2 ** 2 * d3 ** 3)
    a2 = 6 * m2 ** 2 * a2_linear(r) / (d1 * d2 * d3)
    return a, t, a0, a2


def _p74(r: Fraction, a2_linear=None):
    dens = (r ** 2 - r + Fraction(11, 8)) * (r ** 2 + r + Fraction(3, 8)) * (r ** 2 + 2 * r - Fraction(1, 8))
    if dens == 0:
        raise DegenerateParameter("degenerate parameter")
    kw = {} if a2_linear is None else {"a2_linear": a2_linear}
    a, t, a0, a2 = p74_values(r, **kw)
    if a == 0 or 4 * a + 27 == 0:
        raise DegenerateParameter("degenerate parameter")
    return a, X8Point(t, a0, Fraction(0), a2)


P75_POINT = (Fraction(-135, 32), X8Point.of(0, Fraction(75, 32), Fraction(5, 4), Fraction(-1, 3)))


def genus0_point(family: str, s) -> Tuple[Fraction, X8Point]:
    """(a, point) on S_{a,r} without the membership assertion."""
    s = Q(s)
    if family == P73:
        return _p73(s)
    if family == P74:
        return _p74(s)
    if family == P75:
        return P75_POINT
    raise ValueError(f"unknown family {family!r}")


def param_genus0(family: str, s=0) -> Tuple[Curve, X8Point]:
    a, P = genus0_point(family, s)
    r = GENUS0_R[family]
    if system_values(a, a, r, *P.as_tuple()) != (0, 0, 0):
        raise AssertionError(f"{family} point at s={s} is not on S_(a,{r})")
    try:
        E = Curve.short(a, a)
    except SingularModel:
        raise DegenerateParameter("degenerate parameter") from None
    return E, P


# ---------------------------------------------------------------------------
# isogeny sections X_0(3), X_0(5), X_0(7)

SECTION_R = {3: 3, 5: 5, 7: 7}


def _section_formulas(l: int, s):
    """(a_s, b_s, t, a0, a1, a2) in generic ring arithmetic."""
    if l == 5:
        a = -27 * s ** 4 + 324 * s ** 3 - 378 * s ** 2 - 324 * s - 27
        b = 54 * s ** 6 - 972 * s ** 5 + 4050 * s ** 4 + 4050 * s ** 2 + 972 * s + 54
        t = s ** 2 + 1
        a0 = -1944 * s * (s ** 3 - 11 * s ** 2 + 7 * s + 1) * (s ** 3 - 7 * s ** 2 - 11 * s - 1)
        a1 = 324 * s * (s ** 2 - 12 * s - 1) * (s ** 2 + 1)
        a2 = 108 * s * (s ** 2 - 6 * s - 1)
        return a, b, t, a0, a1, a2
    if l == 3:
        return (18 * s - 27, 9 * s ** 2 - 54 * s + 54, 1 - s,
                36 * s ** 2 - 126 * s + 108, 15 * s - 18, 3 * s - 6)
    if l == 7:
        a = (-27 * s ** 8 + 324 * s ** 7 - 1134 * s ** 6 + 1512 * s ** 5 - 945 * s ** 4
             + 378 * s ** 2 - 108 * s - 27)
        b = (54 * s ** 12 - 972 * s ** 11 + 6318 * s ** 10 - 19116 * s ** 9 + 30780 * s ** 8
             - 26244 * s ** 7 + 14742 * s ** 6 - 11988 * s ** 5 + 9396 * s ** 4 - 2484 * s ** 3
             - 810 * s ** 2 + 324 * s + 54)
        den = s ** 2 - s + 1
        tn = s ** 6 - 7 * s ** 5 - 14 * s ** 4 + 53 * s ** 3 - 34 * s ** 2 + s + 1
        a0 = 12 * (-s ** 8 + 15 * s ** 7 - 72 * s ** 6 + 125 * s ** 5 - 113 * s ** 4
                   + 48 * s ** 3 + 5 * s ** 2 - 7 * s - 1)
        a1n = 2 * s ** 6 - 26 * s ** 5 + 80 * s ** 4 - 50 * s ** 3 - 20 * s ** 2 + 14 * s + 2
        if isinstance(s, Fraction):
            return a, b, tn / den, a0, a1n / den, Fraction(2, 3)
        return (a, b, RationalFunction(tn, den), a0, RationalFunction(a1n, den),
                Poly.const(Fraction(2, 3)))
    raise ValueError("l must be 3, 5 or 7")


def section_point(l: int, s) -> Tuple[Fraction, Fraction, X8Point]:
    """(a_s, b_s, point) with no requirement that E_s be nonsingular."""
    a, b, *pt = _section_formulas(l, Q(s))
    return a, b, X8Point.of(*pt)


def isogeny_section(l: int, s) -> Tuple[Curve, X8Point]:
    a, b, P = section_point(l, s)
    try:
        E = Curve.short(a, b)
    except SingularModel:
        raise SingularModel("singular E_s") from None
    r = SECTION_R[l]
    if system_values(a, b, r, *P.as_tuple()) != (0, 0, 0):
        raise AssertionError(f"X_0({l}) point at s={s} is not on the r={r} system")
    return E, P


def _is_zero_value(v) -> bool:
    if isinstance(v, (RationalFunction, Poly)):
        return v.is_zero()
    return v == 0


def section_identity(l: int) -> bool:
    """Membership identically in s, with s a polynomial variable."""
    s = Poly.var("s")
    a, b, *pt = _section_formulas(l, s)
    return all(_is_zero_value(v) for v in system_values(a, b, SECTION_R[l], *pt))


def genus0_identity(family: str) -> bool:
    """Symbolic membership for the one-parameter families on S_{a,r}."""
    s = Poly.var("s")
    if family == P73:
        u = s ** 2 - 12 * s + 12
        v = s ** 2 - 4 * s + 12
        w = s ** 2 - 12
        a = RationalFunction(Fraction(27, 8) * u ** 2, w ** 2)
        pt = (RationalFunction(-Fraction(1, 2) * u, w),
              RationalFunction(Fraction(-243, 32) * u ** 3 * v, w ** 4),
              RationalFunction(Fraction(81, 8) * u ** 2 * v, w ** 3), Poly.const(0))
    elif family == P74:
        rf = RationalFunction
        n1 = s ** 2 - 2 * s - Fraction(15, 8)
        n2 = s ** 2 + Fraction(1, 8)
        d1 = s ** 2 - s + Fraction(11, 8)
        d2 = s ** 2 + s + Fraction(3, 8)
        d3 = s ** 2 + 2 * s - Fraction(1, 8)
        m1 = s ** 2 - 2 * s + Fraction(21, 8)
        m2 = s ** 2 - s * Fraction(1, 2) - Fraction(3, 8)
        m3 = s ** 2 + s * Fraction(1, 2) + Fraction(5, 8)
        m4 = s ** 2 + Fraction(6, 5) * s + Fraction(17, 40)
        a = rf(Fraction(-135, 4) * n1 * n2, d1 * d2 * d3)
        pt = (rf(Fraction(1, 2) * n1 * n2, d1 * d2),
              rf(-135 * m1 * m2 * n2 ** 2 * m3 * m4, d1 ** 2 * d2 ** 2 * d3 ** 3),
              Poly.const(0),
              rf(6 * m2 ** 2 * (s + Fraction(1, 8)), d1 * d2 * d3))
    else:
        raise ValueError(f"no symbolic form for {family!r}")
    return all(_is_zero_value(v) for v in system_values(a, a, GENUS0_R[family], *pt))
