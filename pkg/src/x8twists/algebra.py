"""Exact arithmetic kernel.

Rationals are :class:`fractions.Fraction`.  On top of that this module
provides sparse multivariate polynomials (:class:`Poly`), Sylvester
resultants, rational root extraction, square classes, p-adic valuations and
finite-dimensional commutative Q-algebras presented by generator-power
relations (:class:`QuotientAlgebra`).
"""

from __future__ import annotations

import functools
import itertools
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

MAX_VARS = 4

Scalar = Union[int, Fraction]


class NotUnit(ZeroDivisionError):
    """Raised when an element of a quotient algebra has no inverse."""


# ---------------------------------------------------------------------------
# rationals


def Q(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def qstr(x) -> str:
    """Serialise a rational as "p/q" (or "n" when q == 1)."""
    return str(Q(x))


def height(x) -> int:
    x = Q(x)
    return max(abs(x.numerator), x.denominator)


def height_key(x) -> Tuple[int, int, int, bool]:
    """Sort key matching the order of :func:`rationals_up_to_height`."""
    x = Q(x)
    return (height(x), x.denominator, abs(x.numerator), x < 0)


def rationals_up_to_height(h: int) -> List[Fraction]:
    """Every reduced fraction n/d with max(|n|, d) <= h, each exactly once.

    Ordered by height, then denominator, then numerator.
    """
    out = [Fraction(0)]
    for k in range(1, h + 1):
        level = set()
        for d in range(1, k + 1):
            for n in range(1, k + 1):
                if max(n, d) == k and math.gcd(n, d) == 1:
                    level.add(Fraction(n, d))
        for x in sorted(level, key=lambda f: (f.denominator, f.numerator)):
            out.append(x)
            out.append(-x)
    return out


def valuation(x, p: int) -> int:
    """Exact p-adic valuation of a nonzero rational."""
    x = Q(x)
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    n, d = abs(x.numerator), x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def _is_square_int(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_rational_square(x) -> bool:
    x = Q(x)
    return _is_square_int(x.numerator) and _is_square_int(x.denominator)


def rational_sqrt(x) -> Fraction:
    x = Q(x)
    if not is_rational_square(x):
        raise ValueError(f"{x} is not a square in Q")
    return Fraction(math.isqrt(x.numerator), math.isqrt(x.denominator))


def square_class_equal(x, y) -> bool:
    """True iff x*y is the square of a rational."""
    x, y = Q(x), Q(y)
    if x == 0 or y == 0:
        raise ValueError("zero has no square class")
    return is_rational_square(x * y)


def divisors(n: int) -> List[int]:
    n = abs(n)
    if n == 0:
        raise ValueError("divisors of zero")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


# ---------------------------------------------------------------------------
# polynomials

Monomial = Tuple[int, ...]


class Poly:
    """Sparse polynomial with rational coefficients in at most four variables.

    ``terms`` maps exponent tuples (aligned with ``vars``) to nonzero
    Fractions.  Polys over different variable lists combine by merging the
    lists; a Poly with no variables is a constant.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str] = (), terms: Dict[Monomial, Scalar] | None = None):
        vars = tuple(vars)
        if len(vars) > MAX_VARS:
            raise ValueError(f"at most {MAX_VARS} variables supported, got {vars}")
        if len(set(vars)) != len(vars):
            raise ValueError(f"repeated variable in {vars}")
        self.vars = vars
        clean = {}
        for mono, c in (terms or {}).items():
            c = Q(c)
            if c:
                if len(mono) != len(vars):
                    raise ValueError("monomial length does not match variables")
                clean[tuple(mono)] = c
        self.terms = clean

    # -- construction ------------------------------------------------------
    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls((name,), {(1,): 1})

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((), {(): Q(c)})

    @classmethod
    def from_coeffs(cls, name: str, coeffs: Sequence[Scalar]) -> "Poly":
        """Univariate poly from coefficients listed by increasing degree."""
        return cls((name,), {(k,): c for k, c in enumerate(coeffs)})

    @staticmethod
    def symbols(*names: str) -> Tuple["Poly", ...]:
        return tuple(Poly.var(n) for n in names)

    # -- variable bookkeeping ---------------------------------------------
    def with_vars(self, vars: Sequence[str]) -> "Poly":
        vars = tuple(vars)
        if vars == self.vars:
            return self
        missing = [v for v in self.vars if v not in vars]
        for v in missing:
            if self.degree(v) > 0:
                raise ValueError(f"variable {v} occurs but is dropped")
        idx = [self.vars.index(v) if v in self.vars else None for v in vars]
        terms = {}
        for mono, c in self.terms.items():
            terms[tuple(mono[i] if i is not None else 0 for i in idx)] = c
        return Poly(vars, terms)

    def _align(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if self.vars == other.vars:
            return self, other
        merged = list(self.vars)
        for v in other.vars:
            if v not in merged:
                merged.append(v)
        return self.with_vars(merged), other.with_vars(merged)

    def used_vars(self) -> Tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars)
                     if any(m[i] for m in self.terms))

    def trim(self) -> "Poly":
        return self.with_vars(self.used_vars())

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return Poly.const(x)

    def __add__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        a, b = self._align(self._coerce(other))
        terms = dict(a.terms)
        for m, c in b.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Poly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(self.vars, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._align(other)
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return Poly(a.vars, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Q(other)
            if other == 0:
                raise ZeroDivisionError("division of Poly by zero")
            return self * (1 / other)
        if isinstance(other, Poly) and other.is_constant():
            return self / other.constant_value()
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of Poly")
        result = Poly.const(1).with_vars(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        t = self.trim()
        return hash((t.vars, frozenset(t.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()), Fraction(0))

    # -- structure ---------------------------------------------------------
    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree if None); -1 for the zero poly."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(m) for m in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(m[i] for m in self.terms)

    def coeffs_in(self, var: str) -> List["Poly"]:
        """Coefficients w.r.t. ``var`` by increasing degree, as Polys in the rest."""
        if var not in self.vars:
            return [self]
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        d = self.degree(var)
        buckets: List[Dict[Monomial, Fraction]] = [dict() for _ in range(max(d, 0) + 1)]
        for m, c in self.terms.items():
            buckets[m[i]][m[:i] + m[i + 1:]] = c
        return [Poly(rest, b) for b in buckets]

    def coefficient(self, **powers: int) -> "Poly":
        """Coefficient of the given monomial in the named variables."""
        p = self
        for v, k in powers.items():
            cs = p.coeffs_in(v)
            p = cs[k] if k < len(cs) else Poly(tuple(x for x in p.vars if x != v))
        return p

    def subs(self, values: Dict[str, object]) -> object:
        """Substitute values (rationals, Polys or ring elements) for variables.

        Returns a Poly when all substituted values are rationals or Polys,
        otherwise whatever the ring arithmetic of the values produces.
        """
        keep = [v for v in self.vars if v not in values]
        keep_idx = [self.vars.index(v) for v in keep]
        sub_idx = [(self.vars.index(v), values[v]) for v in self.vars if v in values]
        generic = any(not isinstance(val, (int, Fraction, Poly)) for _, val in sub_idx)
        # cache powers
        cache: Dict[Tuple[int, int], object] = {}

        def power(i, val, k):
            key = (i, k)
            if key not in cache:
                cache[key] = val ** k if k else 1
            return cache[key]

        total: object = Poly(keep)
        for m, c in self.terms.items():
            term: object = Poly(keep, {tuple(m[i] for i in keep_idx): c})
            if generic:
                term = c
                if keep:
                    term = Poly(keep, {tuple(m[i] for i in keep_idx): 1}) * c
            for i, val in sub_idx:
                if m[i]:
                    term = term * power(i, val, m[i])
            total = total + term
        if isinstance(total, Poly) and not total.used_vars():
            return total.constant_value() if not generic else total
        return total

    def __call__(self, *args, **kwargs):
        values = dict(zip(self.vars, args))
        values.update(kwargs)
        out = self.subs(values)
        return out

    def eval(self, values: Dict[str, Scalar]) -> Fraction:
        """Exact evaluation at a full rational assignment."""
        out = self.subs({k: Q(v) for k, v in values.items()})
        if isinstance(out, Poly):
            if out.used_vars():
                raise ValueError(f"unassigned variables {out.used_vars()}")
            return out.constant_value()
        return Q(out)

    def derivative(self, var: str) -> "Poly":
        if var not in self.vars:
            return Poly(self.vars)
        i = self.vars.index(var)
        terms = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                terms[tuple(mm)] = c * m[i]
        return Poly(self.vars, terms)

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        m = max(self.terms)
        return m, self.terms[m]

    def content_primitive(self) -> Tuple[Fraction, "Poly"]:
        """(c, P) with self = c*P and P having coprime integer coefficients."""
        if not self.terms:
            return Fraction(0), self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in self.terms.values()]
        g = 0
        for n in nums:
            g = math.gcd(g, n)
        m, lc = self.leading_term()
        if lc < 0:
            g = -g
        content = Fraction(g, den)
        return content, self * (1 / content)

    def exact_div(self, other: "Poly") -> "Poly":
        """Exact multivariate division; raises ValueError if not divisible."""
        a, b = self._align(other)
        if b.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        bm, bc = b.leading_term()
        rem = Poly(a.vars, dict(a.terms))
        quot: Dict[Monomial, Fraction] = {}
        while rem.terms:
            rm, rc = rem.leading_term()
            if any(x < y for x, y in zip(rm, bm)):
                raise ValueError("polynomial division is not exact")
            qm = tuple(x - y for x, y in zip(rm, bm))
            qc = rc / bc
            quot[qm] = qc
            rem = rem - Poly(a.vars, {qm: qc}) * b
        return Poly(a.vars, quot)

    # -- univariate helpers ------------------------------------------------
    def univariate(self) -> Tuple[str, List[Fraction]]:
        """(name, coefficients by increasing degree) for a univariate poly."""
        used = self.used_vars()
        if len(used) > 1:
            raise ValueError(f"not univariate: {used}")
        if not used:
            return (self.vars[0] if self.vars else "x"), [self.constant_value()] if self.terms else []
        v = used[0]
        return v, [c.constant_value() if c.terms else Fraction(0) for c in self.coeffs_in(v)]

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, m) if k)
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            parts.append(s)
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


# univariate arithmetic on coefficient lists (increasing degree)

def _strip(c: List[Fraction]) -> List[Fraction]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def udivmod(f: Sequence[Fraction], g: Sequence[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    f, g = _strip([Q(x) for x in f]), _strip([Q(x) for x in g])
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    while len(r) >= len(g) and r:
        k = len(r) - len(g)
        c = r[-1] / g[-1]
        q[k] = c
        for i, gc in enumerate(g):
            r[i + k] -= c * gc
        r = _strip(r)
    return q, r


def ugcd(f: Sequence[Fraction], g: Sequence[Fraction]) -> List[Fraction]:
    """Monic gcd of two univariate coefficient lists."""
    a, b = _strip([Q(x) for x in f]), _strip([Q(x) for x in g])
    while b:
        _, r = udivmod(a, b)
        a, b = b, r
    if not a:
        return []
    lc = a[-1]
    return [c / lc for c in a]


def ueval(c: Sequence[Fraction], x):
    acc = 0
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


_TRIAL_DIVISION_LIMIT = 10 ** 12


def _linear_factor_roots(ints: List[int]) -> List[Fraction]:
    # divisor lists of large end coefficients are impractical; read the
    # roots off the linear factors of an integer factorisation instead
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(ints)), x, domain="ZZ")
    out = []
    for fac, _ in poly.factor_list()[1]:
        if fac.degree() == 1:
            c1, c0 = fac.all_coeffs()
            out.append(Fraction(-int(c0), int(c1)))
    return out


def rational_roots(f) -> List[Fraction]:
    """All rational roots of a univariate polynomial, sorted, without repeats.

    Accepts a univariate :class:`Poly` or a coefficient list (increasing
    degree).  Denominators are cleared and the rational root criterion is
    applied to the primitive integer model.
    """
    if isinstance(f, Poly):
        if f.is_zero():
            raise ValueError("identically zero")
        _, coeffs = f.univariate()
    else:
        coeffs = [Q(c) for c in f]
    coeffs = _strip(coeffs)
    if not coeffs:
        raise ValueError("identically zero")
    roots = set()
    # factor out x^k
    k = 0
    while coeffs[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    coeffs = coeffs[k:]
    if len(coeffs) == 1:
        return sorted(roots)
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for n in ints:
        g = math.gcd(g, n)
    ints = [n // g for n in ints]
    if max(abs(ints[0]), abs(ints[-1])) > _TRIAL_DIVISION_LIMIT:
        roots.update(_linear_factor_roots(ints))
        return sorted(roots)
    work = [Fraction(n) for n in ints]
    for pnum in divisors(ints[0]):
        for qden in divisors(ints[-1]):
            if math.gcd(pnum, qden) != 1:
                continue
            for s in (1, -1):
                r = Fraction(s * pnum, qden)
                if r in roots:
                    continue
                if ueval(work, r) == 0:
                    roots.add(r)
    return sorted(roots)


# ---------------------------------------------------------------------------
# determinants and resultants


def bareiss_det(matrix: List[List[Poly]]) -> Poly:
    """Fraction-free determinant (Bareiss) of a square matrix of Polys."""
    n = len(matrix)
    if n == 0:
        return Poly.const(1)
    m = [[Poly._coerce(x) for x in row] for row in matrix]
    sign = 1
    prev = Poly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return Poly.const(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev) if not prev.is_constant() else num / prev.constant_value()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(f: Poly, g: Poly, var: str) -> List[List[Poly]]:
    fc = f.coeffs_in(var)[::-1]  # leading first
    gc = g.coeffs_in(var)[::-1]
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    zero = Poly(())
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: Poly, g: Poly, var: str) -> Poly:
    """Sylvester resultant of f and g with respect to ``var``."""
    f, g = Poly._coerce(f), Poly._coerce(g)
    if f.is_zero() and g.is_zero():
        raise ValueError("both polynomials are zero")
    if var not in f.used_vars() and var not in g.used_vars():
        raise ValueError("variable absent")
    f, g = f._align(g)
    rest = tuple(v for v in f.vars if v != var)
    if f.degree(var) == 0 or g.degree(var) == 0:
        # Res(c, g) = c^deg g
        if f.degree(var) <= 0:
            return (f.coeffs_in(var)[0] ** max(g.degree(var), 0)).with_vars(rest)
        return (g.coeffs_in(var)[0] ** max(f.degree(var), 0)).with_vars(rest)
    det = bareiss_det(sylvester_matrix(f, g, var))
    return det.with_vars(rest)


# ---------------------------------------------------------------------------
# rational functions (numerator/denominator pairs, unreduced)


class RationalFunction:
    """num/den with Poly parts; only used for exact zero tests."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        self.num = Poly._coerce(num)
        self.den = Poly._coerce(den)
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    @staticmethod
    def _c(x) -> "RationalFunction":
        return x if isinstance(x, RationalFunction) else RationalFunction(x)

    def __add__(self, o):
        o = self._c(o)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, o):
        return self + (-self._c(o))

    def __rsub__(self, o):
        return self._c(o) - self

    def __mul__(self, o):
        o = self._c(o)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._c(o)
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __pow__(self, n: int):
        return RationalFunction(self.num ** n, self.den ** n)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def subs(self, values):
        return Q(self.num.subs(values)) / Q(self.den.subs(values))


# ---------------------------------------------------------------------------
# quotient algebras


class QuotientAlgebra:
    """Commutative Q-algebra Q[g_1, ..., g_n] / (g_i^{k_i} - r_i).

    Each relation rewrites ``g_i^{k_i}`` as a rational linear combination of
    monomials in which g_i has exponent < k_i and only g_1..g_{i-1} otherwise
    appear (a tower).  ``relations`` is a list of ``(name, k, rhs)`` where
    ``rhs`` maps exponent tuples (length n) to rationals.

    Elements may carry coefficients from any commutative ring that accepts
    rational scalars (Fractions, Polys); inversion needs rational ones.
    """

    def __init__(self, relations: Sequence[Tuple[str, int, Dict[Monomial, Scalar]]]):
        self.names = tuple(r[0] for r in relations)
        self.degrees = tuple(r[1] for r in relations)
        if any(k < 1 for k in self.degrees):
            raise ValueError("relation degrees must be positive")
        n = len(self.names)
        self.rhs = []
        for i, (_, k, rhs) in enumerate(relations):
            clean = {}
            for mono, c in rhs.items():
                mono = tuple(mono)
                if len(mono) != n:
                    raise ValueError("relation monomial has wrong length")
                if mono[i] >= k or any(mono[j] for j in range(i + 1, n)):
                    raise ValueError("relation is not of tower shape")
                if Q(c):
                    clean[mono] = Q(c)
            self.rhs.append(clean)
        self.basis: Tuple[Monomial, ...] = tuple(
            itertools.product(*[range(k) for k in self.degrees]))
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.dimension = len(self.basis)
        self._reduce_cache: Dict[Monomial, Dict[int, Fraction]] = {}
        self._table = [[self._reduce_monomial(tuple(x + y for x, y in zip(mi, mj)))
                        for mj in self.basis] for mi in self.basis]

    @classmethod
    def simple(cls, name: str, coeffs: Sequence[Scalar]) -> "QuotientAlgebra":
        """Q[x]/(x^k + c_{k-1} x^{k-1} + ... + c_0) from [c_0, ..., c_{k-1}]."""
        k = len(coeffs)
        return cls([(name, k, {(j,): -Q(c) for j, c in enumerate(coeffs)})])

    def _reduce_monomial(self, mono: Monomial) -> Dict[int, Fraction]:
        if mono in self._reduce_cache:
            return self._reduce_cache[mono]
        if mono in self.index:
            out = {self.index[mono]: Fraction(1)}
            self._reduce_cache[mono] = out
            return out
        # reduce the highest generator that overflows
        i = max(j for j, (e, k) in enumerate(zip(mono, self.degrees)) if e >= k)
        base = list(mono)
        base[i] -= self.degrees[i]
        out: Dict[int, Fraction] = {}
        for rm, c in self.rhs[i].items():
            nm = tuple(b + r for b, r in zip(base, rm))
            for idx, cc in self._reduce_monomial(nm).items():
                out[idx] = out.get(idx, 0) + c * cc
        out = {k: v for k, v in out.items() if v}
        self._reduce_cache[mono] = out
        return out

    # -- elements ----------------------------------------------------------
    def element(self, coords: Sequence) -> "AlgebraElement":
        if len(coords) != self.dimension:
            raise ValueError("dimension mismatch")
        return AlgebraElement(self, list(coords))

    def scalar(self, c) -> "AlgebraElement":
        coords = [Fraction(0)] * self.dimension
        coords[0] = c if isinstance(c, Poly) else Q(c)
        return AlgebraElement(self, coords)

    def one(self) -> "AlgebraElement":
        return self.scalar(1)

    def zero(self) -> "AlgebraElement":
        return self.scalar(0)

    def gen(self, name: str) -> "AlgebraElement":
        i = self.names.index(name)
        mono = [0] * len(self.names)
        mono[i] = 1
        return self.monomial(tuple(mono))

    def gens(self) -> Tuple["AlgebraElement", ...]:
        return tuple(self.gen(n) for n in self.names)

    def monomial(self, mono: Monomial) -> "AlgebraElement":
        coords = [Fraction(0)] * self.dimension
        for idx, c in self._reduce_monomial(tuple(mono)).items():
            coords[idx] = c
        return AlgebraElement(self, coords)

    def __repr__(self):
        rels = ", ".join(f"{n}^{k}" for n, k in zip(self.names, self.degrees))
        return f"QuotientAlgebra({rels}; dim={self.dimension})"


def _is_zero(c) -> bool:
    if isinstance(c, Poly):
        return c.is_zero()
    return c == 0


class AlgebraElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: QuotientAlgebra, coords: List):
        self.algebra = algebra
        self.coords = coords

    def _lift(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra:
                raise ValueError("elements of different algebras")
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return self.algebra.scalar(other)
        raise TypeError(f"cannot combine AlgebraElement with {type(other)}")

    def __add__(self, other):
        o = self._lift(other)
        return AlgebraElement(self.algebra, [x + y for x, y in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, [-x for x in self.coords])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return AlgebraElement(self.algebra, [x * other for x in self.coords])
        o = self._lift(other)
        A = self.algebra
        out = [Fraction(0)] * A.dimension
        nz_self = [(i, c) for i, c in enumerate(self.coords) if not _is_zero(c)]
        nz_other = [(j, c) for j, c in enumerate(o.coords) if not _is_zero(c)]
        for i, ci in nz_self:
            row = A._table[i]
            for j, cj in nz_other:
                prod = ci * cj
                for k, t in row[j].items():
                    out[k] = out[k] + prod * t
        return AlgebraElement(A, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.algebra.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        o = self._lift(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return all(_is_zero(x - y) for x, y in zip(self.coords, o.coords))

    def __hash__(self):
        return hash(tuple(self.coords))

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coords)

    def multiplication_matrix(self) -> List[List[Fraction]]:
        """Matrix of y -> self*y on the monomial basis (columns = images)."""
        A = self.algebra
        cols = []
        for j in range(A.dimension):
            e = [Fraction(0)] * A.dimension
            e[j] = Fraction(1)
            cols.append((self * AlgebraElement(A, e)).coords)
        return [[cols[j][i] for j in range(A.dimension)] for i in range(A.dimension)]

    def inverse(self) -> "AlgebraElement":
        A = self.algebra
        if len(self.coords) != A.dimension:
            raise ValueError("dimension mismatch")
        if any(isinstance(c, Poly) for c in self.coords):
            raise TypeError("inversion needs rational coordinates")
        m = self.multiplication_matrix()
        rhs = [Fraction(0)] * A.dimension
        rhs[0] = Fraction(1)
        sol = solve_linear(m, rhs)
        if sol is None:
            raise NotUnit("non-invertible denominator")
        return AlgebraElement(A, sol)

    def __repr__(self):
        terms = []
        for mono, c in zip(self.algebra.basis, self.coords):
            if _is_zero(c):
                continue
            name = "*".join(n if e == 1 else f"{n}^{e}"
                            for n, e in zip(self.algebra.names, mono) if e)
            terms.append(f"({c})" + (f"*{name}" if name else ""))
        return " + ".join(terms) or "0"


def algebra_inverse(e: AlgebraElement, A: QuotientAlgebra):
    """Inverse of ``e`` in ``A``; returns the :class:`NotUnit` class on failure."""
    if e.algebra is not A or len(e.coords) != A.dimension:
        raise ValueError("dimension mismatch")
    try:
        return e.inverse()
    except NotUnit:
        return NotUnit


def solve_linear(m: List[List[Fraction]], rhs: List[Fraction]):
    """Solve m x = rhs exactly; None if m is singular."""
    n = len(m)
    a = [list(row) + [r] for row, r in zip(m, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        if pv != 1:
            a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                rowc = a[col]
                a[r] = [x - f * y for x, y in zip(a[r], rowc)]
    return [a[i][n] for i in range(n)]


@functools.lru_cache(maxsize=None)
def gaussian_rationals() -> QuotientAlgebra:
    """Q(i) as Q[i]/(i^2 + 1)."""
    return QuotientAlgebra.simple("i", [1, 0])


@functools.lru_cache(maxsize=None)
def cyclotomic8() -> QuotientAlgebra:
    """Q(zeta_8) as Q[zeta]/(zeta^4 + 1)."""
    return QuotientAlgebra.simple("zeta", [1, 0, 0, 0])


def cubic_algebra(a, b) -> QuotientAlgebra:
    """Q[theta]/(theta^3 + a theta + b); one shared instance per (a, b)."""
    return _cubic_algebra(Q(a), Q(b))


@functools.lru_cache(maxsize=4096)
def _cubic_algebra(a: Fraction, b: Fraction) -> QuotientAlgebra:
    return QuotientAlgebra.simple("theta", [Q(b), Q(a), 0])


def iter_rationals(values: Iterable) -> List[Fraction]:
    return [Q(v) for v in values]
