"""Finite matrix-group checks over Z/2, Z/4, Z/8 and the sqrt(delta) sign tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple


@dataclass(frozen=True)
class ResidueMatrix:
    """2x2 matrix over Z/n acting on column vectors; ``pm`` = work modulo +-I."""

    n: int
    a: int
    b: int
    c: int
    d: int
    pm: bool = False

    def __post_init__(self):
        if self.n not in (2, 4, 8):
            raise ValueError("modulus must be 2, 4 or 8")
        vals = [x % self.n for x in (self.a, self.b, self.c, self.d)]
        if self.pm:
            neg = [(-x) % self.n for x in vals]
            vals = min(vals, neg)
        for name, v in zip("abcd", vals):
            object.__setattr__(self, name, v)

    @classmethod
    def of(cls, n: int, rows, pm: bool = False) -> "ResidueMatrix":
        (a, b), (c, d) = rows
        return cls(n, a, b, c, d, pm)

    @property
    def entries(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.n

    def is_invertible(self) -> bool:
        return self.det() % 2 == 1

    def __mul__(self, o: "ResidueMatrix") -> "ResidueMatrix":
        if o.n != self.n:
            raise ValueError("moduli differ")
        return ResidueMatrix(self.n,
                             self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                             self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d,
                             self.pm or o.pm)

    def __neg__(self):
        return ResidueMatrix(self.n, -self.a, -self.b, -self.c, -self.d, self.pm)

    def inverse(self) -> "ResidueMatrix":
        di = pow(self.det(), -1, self.n)
        return ResidueMatrix(self.n, self.d * di, -self.b * di, -self.c * di, self.a * di, self.pm)

    def apply(self, v: Tuple[int, int]) -> Tuple[int, int]:
        x, y = v
        return ((self.a * x + self.b * y) % self.n, (self.c * x + self.d * y) % self.n)

    def reduce(self, m: int, pm: Optional[bool] = None) -> "ResidueMatrix":
        return ResidueMatrix(m, self.a, self.b, self.c, self.d, self.pm if pm is None else pm)

    def modpm(self) -> "ResidueMatrix":
        return ResidueMatrix(self.n, self.a, self.b, self.c, self.d, True)

    def exact(self) -> "ResidueMatrix":
        return ResidueMatrix(self.n, self.a, self.b, self.c, self.d, False)

    def rows(self) -> List[List[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self):
        return f"({self.a} {self.b}; {self.c} {self.d}) mod {self.n}" + (" /+-I" if self.pm else "")


def M(n: int, a: int, b: int, c: int, d: int, pm: bool = False) -> ResidueMatrix:
    return ResidueMatrix(n, a, b, c, d, pm)


def identity(n: int, pm: bool = False) -> ResidueMatrix:
    return ResidueMatrix(n, 1, 0, 0, 1, pm)


def gl2(n: int) -> List[ResidueMatrix]:
    out = []
    for a, b, c, d in itertools.product(range(n), repeat=4):
        if (a * d - b * c) % 2 == 1:
            out.append(ResidueMatrix(n, a, b, c, d))
    return out


def sl2(n: int) -> List[ResidueMatrix]:
    return [g for g in gl2(n) if g.det() == 1]


def conj(s: ResidueMatrix, x: ResidueMatrix) -> ResidueMatrix:
    return s * x * s.inverse()


# fixed matrices --------------------------------------------------------------

S_GENS = {
    "s1": M(8, 7, 0, 0, 1),
    "s2": M(8, 5, 0, 0, 1),
    "s3": M(8, 0, 1, -1, 0),
    "s4": M(8, 1, 1, 0, 1),
}
V = M(4, 1, 2, 2, 3)
V_PRIME = M(8, 1, 2, 6, 3)
H_GENS = {"S1": M(8, 1, 4, 4, 1), "S2": M(8, 3, 4, 4, 3), "S3": M(8, 1, 0, 4, 1)}
CHI = {"S1": (-1, -1, 1), "S2": (1, 1, -1), "S3": (1, -1, 1)}
EXPECTED_C = {"s1": H_GENS["S1"], "s2": identity(8), "s3": H_GENS["S2"], "s4": H_GENS["S3"]}
EXPECTED_COCYCLE = {"s1": (-1, -1, 1), "s2": (1, 1, 1), "s3": (1, 1, -1), "s4": (1, -1, 1)}
# s(sqrt(delta_k)) = sign * sqrt(delta_target) (reference table)
EXPECTED_SQRT_ACTION = {
    "s1": ((1, -1), (2, -1), (3, 1)),
    "s2": ((1, 1), (2, 1), (3, 1)),
    "s3": ((2, 1), (1, 1), (3, -1)),
    "s4": ((1, 1), (3, 1), (2, -1)),
}
EXPECTED_RATIOS = {
    "s1": (-1, -1, 1),
    "s2": (1, 1, 1),
    "s3": (1, 1, -1),
    "s4": (1, -1, 1),
}

# two-torsion T1 = 4P, T2 = 4Q, T3 = 4P + 4Q as vectors mod 2
TWO_TORSION = ((1, 0), (0, 1), (1, 1))


def two_torsion_permutation(s: ResidueMatrix) -> Tuple[int, int, int]:
    """sigma_s with s(T_k) = T_{sigma(k)} (1-based)."""
    s2 = s.reduce(2, pm=False)
    out = []
    for v in TWO_TORSION:
        out.append(TWO_TORSION.index(s2.apply(v)) + 1)
    return tuple(out)


def _perm_inverse(p: Tuple[int, ...]) -> Tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j - 1] = i + 1
    return tuple(inv)


def _perm_sign(p: Tuple[int, ...]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


# ---------------------------------------------------------------------------
# the subgroups H and H'


def subgroup_H() -> List[ResidueMatrix]:
    """Kernel of PSL2(Z/8) -> PSL2(Z/4), as matrices modulo +-I."""
    I4 = identity(4, pm=True)
    return sorted({g.modpm() for g in sl2(8) if g.reduce(4, pm=True) == I4},
                  key=lambda m: m.entries)


def subgroup_H_prime() -> List[ResidueMatrix]:
    """Kernel of GL2(Z/8)/{+-I} -> GL2(Z/4)/{+-I, +-v}."""
    allowed = {identity(4, pm=True), V.modpm()}
    return sorted({g.modpm() for g in gl2(8) if g.reduce(4, pm=True) in allowed},
                  key=lambda m: m.entries)


def _h_lookup() -> Dict[ResidueMatrix, Tuple[int, int, int]]:
    """Each element of H as S1^e1 S2^e2 S3^e3 modulo +-I."""
    table = {}
    for e in itertools.product((0, 1), repeat=3):
        g = identity(8, pm=True)
        for k, name in zip(e, ("S1", "S2", "S3")):
            if k:
                g = g * H_GENS[name].modpm()
        table[g] = e
    return table


def pi(x: ResidueMatrix, lookup=None) -> Tuple[int, int, int]:
    """The map H -> M = Map(E[2] - O, mu_2) sending S_j to chi_j."""
    lookup = lookup or _h_lookup()
    e = lookup[x.modpm()]
    out = [1, 1, 1]
    for k, name in zip(e, ("S1", "S2", "S3")):
        if k:
            out = [u * w for u, w in zip(out, CHI[name])]
    return tuple(out)


def cocycle_matrix(s: ResidueMatrix, vp: ResidueMatrix = V_PRIME) -> ResidueMatrix:
    """C_s = s v' s^-1 v'^-1."""
    return s * vp * s.inverse() * vp.inverse()


# ---------------------------------------------------------------------------
# lemma checks


@dataclass
class LemmaReport:
    id: str
    passed: bool
    details: Dict[str, object] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"id": self.id, "pass": self.passed, "details": self.details}


def _check_l31() -> LemmaReport:
    phi = M(4, 1, 2, 2, 3)
    vs = {"v1": (M(4, 3, 0, 0, 1), 1), "v2": (M(4, 0, 1, 3, 0), -1), "v3": (M(4, 1, 1, 0, 1), -1)}
    # expected images (coefficients of p', q') of v_j phi(p), v_j phi(q)
    expected = {"v1": ((3, 2), (2, 3)), "v2": ((2, 1), (1, 2)), "v3": ((1, 2), (3, 1))}
    details = {}
    ok = True
    for name, (v, eps) in vs.items():
        # Galois acts on E^Delta[4] through eps * v (sqrt(Delta) sign)
        lhs = M(4, eps, 0, 0, eps) * v * phi
        rhs = phi * v
        cols_l = ((lhs.a, lhs.c), (lhs.b, lhs.d))
        cols_r = ((rhs.a, rhs.c), (rhs.b, rhs.d))
        good = cols_l == cols_r == expected[name]
        details[name] = {"v_phi": cols_l, "phi_v": cols_r, "expected": expected[name], "pass": good}
        ok &= good
    details["det_phi"] = phi.det()
    ok &= phi.det() == 3
    return LemmaReport("L3.1", ok, details)


def _check_l42() -> LemmaReport:
    G = gl2(8)
    phi = M(8, 5, 0, 0, 1)
    commuting = {g for g in G if g * phi == phi * g}
    even = {g for g in G if g.b % 2 == 0 and g.c % 2 == 0}
    ok = commuting == even
    return LemmaReport("L4.2", ok, {"group_order": len(G), "commuting": len(commuting),
                                    "even_off_diagonal": len(even)})


def _check_l43(which: str) -> LemmaReport:
    G = gl2(8)
    T = {"T3": M(8, 1, 0, 0, 5), "T4": M(8, 1, 4, 4, 5)}[which]
    stab = [s for s in G if conj(s, T) in (T, -T)]
    perms = {two_torsion_permutation(s) for s in stab}
    if which == "T3":
        ok = perms == {(1, 2, 3)}
    else:
        ok = all(_perm_sign(p) == 1 for p in perms)
    A, B = M(8, 1, 0, 1, 1), M(8, 1, 1, 0, 1)
    T1, T2, T3 = M(8, 1, 0, 4, 5), M(8, 1, 4, 0, 5), M(8, 1, 0, 0, 5)
    conj_ok = A.inverse() * T3 * A == T1 and B.inverse() * T3 * B == T2
    return LemmaReport(f"L4.3-{which}", ok and conj_ok,
                       {"stabiliser_size": len(stab), "permutations": sorted(perms),
                        "conjugacy_identities": conj_ok})


def _check_l53() -> LemmaReport:
    details = {}
    ok = True
    for name, s in S_GENS.items():
        C = cocycle_matrix(s)
        good = C.modpm() == EXPECTED_C[name].modpm()
        details[name] = {"computed": C.rows(), "expected": EXPECTED_C[name].rows(), "pass": good}
        ok &= good
    return LemmaReport("L5.3", ok, details)


def _check_l54() -> LemmaReport:
    lookup = _h_lookup()
    details = {}
    ok = len(lookup) == 8
    for sname, s in S_GENS.items():
        sigma = two_torsion_permutation(s)
        sinv = _perm_inverse(sigma)
        for hname, Sj in H_GENS.items():
            image = conj(s, Sj).modpm()
            if image not in lookup:
                ok = False
                details[f"{sname},{hname}"] = "conjugate leaves H"
                continue
            lhs = pi(image, lookup)
            chi = CHI[hname]
            rhs = tuple(chi[sinv[j] - 1] for j in range(3))
            good = lhs == rhs
            ok &= good
            details[f"{sname},{hname}"] = {"pi(sSs^-1)": lhs, "s.chi": rhs, "pass": good}
    return LemmaReport("L5.4", ok, details)


def _is_elementary_abelian(elems: List[ResidueMatrix]) -> bool:
    one = identity(8, pm=True)
    commute = all(x * y == y * x for x in elems for y in elems)
    return commute and all(x * x == one for x in elems)


def _check_exact_sequence() -> LemmaReport:
    H = subgroup_H()
    Hp = subgroup_H_prime()
    kernel = sorted([g for g in Hp if g.det() == 1], key=lambda m: m.entries)
    dets = sorted({g.det() for g in Hp})
    closed = all((x * y) in set(Hp) for x in Hp for y in Hp)
    ok = (kernel == H and dets == [1, 3, 5, 7] and len(H) == 8 and _is_elementary_abelian(H)
          and len(Hp) == 32 and closed)
    vp = V_PRIME
    ok_vp = vp.modpm() in set(Hp) and vp.det() == 7 and vp.reduce(4) == V.exact()
    return LemmaReport("exact-sequence", ok and ok_vp,
                       {"|H|": len(H), "|H'|": len(Hp), "det_image": dets,
                        "H_elementary_abelian": _is_elementary_abelian(H),
                        "v'_in_H'": vp.modpm() in set(Hp), "det_v'": vp.det(),
                        "v'_mod4_is_v": vp.reduce(4) == V.exact()})


def _check_h_prime_abelian() -> LemmaReport:
    Hp = subgroup_H_prime()
    ok = all(x * y == y * x for x in Hp for y in Hp)
    return LemmaReport("H-prime-abelian", ok, {"|H'|": len(Hp)})


LEMMA_IDS = ("L3.1", "L4.2", "L4.3-T3", "L4.3-T4", "L5.3", "L5.4", "exact-sequence",
             "H-prime-abelian")


def verify_group_lemma(lemma_id: str) -> LemmaReport:
    checks = {
        "L3.1": _check_l31,
        "L4.2": _check_l42,
        "L4.3-T3": lambda: _check_l43("T3"),
        "L4.3-T4": lambda: _check_l43("T4"),
        "L5.3": _check_l53,
        "L5.4": _check_l54,
        "exact-sequence": _check_exact_sequence,
        "H-prime-abelian": _check_h_prime_abelian,
    }
    if lemma_id not in checks:
        raise ValueError(f"unknown id {lemma_id!r}")
    return checks[lemma_id]()


# ---------------------------------------------------------------------------
# sign actions on sqrt(delta_j)

# 2P, 2Q, 2P + 2Q in coordinates of E[4] with respect to (2P, 2Q)
FOUR_TORSION = ((1, 0), (0, 1), (1, 1))


def sqrt_delta_action(s: ResidueMatrix) -> Tuple[Tuple[int, int], ...]:
    """(target, sign) with s(sqrt(delta_k)) = sign * sqrt(delta_target).

    x(R_k) = theta_k + i sqrt(delta_k) for R_k in {2P, 2Q, 2P+2Q}; the
    other half points of T_k have x = theta_k - i sqrt(delta_k).  So
    s(i) s(sqrt(delta_k)) = +-i sqrt(delta_sigma(k)) with + iff
    s(R_k) = +-R_sigma(k), and s(i) = -i iff det s = 3 mod 4.
    """
    s4 = s.reduce(4, pm=False)
    chi_i = 1 if s.det() % 4 == 1 else -1
    sigma = two_torsion_permutation(s)
    out = []
    for k, base in enumerate(FOUR_TORSION):
        img = s4.apply(base)
        tgt = FOUR_TORSION[sigma[k] - 1]
        neg = tuple((-x) % 4 for x in tgt)
        eps = 1 if img in (tgt, neg) else -1
        out.append((sigma[k], eps * chi_i))
    return tuple(out)


def cocycle_triple(s: ResidueMatrix) -> Tuple[int, int, int]:
    """s(sqrt(delta_{sigma^-1(j)})) / sqrt(delta_j), j = 1, 2, 3."""
    act = sqrt_delta_action(s)
    sinv = _perm_inverse(two_torsion_permutation(s))
    return tuple(act[sinv[j] - 1][1] for j in range(3))


@dataclass
class SignTables:
    actions: Dict[str, Tuple[Tuple[int, int], ...]]
    ratios: Dict[str, Tuple[int, int, int]]
    cocycles_from_matrices: Dict[str, Tuple[int, int, int]]
    mismatches: List[str]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"actions": {k: [list(x) for x in v] for k, v in self.actions.items()},
                "ratios": {k: list(v) for k, v in self.ratios.items()},
                "pi_of_C": {k: list(v) for k, v in self.cocycles_from_matrices.items()},
                "mismatches": self.mismatches, "pass": self.passed}


def sign_action_tables() -> SignTables:
    actions, ratios, from_c, bad = {}, {}, {}, []
    lookup = _h_lookup()
    for name, s in S_GENS.items():
        actions[name] = sqrt_delta_action(s)
        ratios[name] = cocycle_triple(s)
        from_c[name] = pi(cocycle_matrix(s), lookup)
        if actions[name] != EXPECTED_SQRT_ACTION[name]:
            bad.append(f"{name}: sqrt(delta) action")
        if ratios[name] != EXPECTED_RATIOS[name]:
            bad.append(f"{name}: ratio row")
        if ratios[name] != EXPECTED_COCYCLE[name]:
            bad.append(f"{name}: cocycle triple")
        if from_c[name] != EXPECTED_COCYCLE[name]:
            bad.append(f"{name}: pi(C_s) differs from the cocycle triple")
    return SignTables(actions, ratios, from_c, bad)


def all_reports() -> List[LemmaReport]:
    reps = [verify_group_lemma(i) for i in LEMMA_IDS]
    t = sign_action_tables()
    reps.append(LemmaReport("L6.2/L6.3", t.passed, t.to_json()))
    return reps


def group_orders() -> Dict[str, int]:
    return {"GL2(Z/8)": len(gl2(8)), "SL2(Z/8)": len(sl2(8)), "H": len(subgroup_H()),
            "H'": len(subgroup_H_prime())}


def iter_ids() -> Iterable[str]:
    return iter(LEMMA_IDS)
