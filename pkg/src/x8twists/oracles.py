"""Independent brute-force checks used to validate the exact solvers."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Set, Tuple

from .algebra import Q, rationals_up_to_height
from .twists8 import X8Point, system_values


def _float_system(a: float, b: float, r: int, t: float, a0, a1, a2):
    # same formulas as the exact system, on numpy arrays
    F = -a * a2 * a2 + 2 * a0 * a2 + a1 * a1
    G = -2 * a * a1 * a2 - b * a2 * a2 + 2 * a0 * a1
    H = -2 * b * a1 * a2 + a0 * a0
    if r == 1:
        return F + 2 / 9, G + 2 / 3 * t, H - t * t + a / 9
    if r == 5:
        D = -4 * a ** 3 - 27 * b * b
        return F + 2 * D / 9, G + 2 * D / 3 * t, H + D * (-t * t + a / 9)
    if r == 3:
        return (-2 / 9 * a * a + 6 * a * t * t + 6 * b * t - F,
                4 / 3 * a * a * t + a * b / 3 - 9 * b * t * t - G,
                -4 / 9 * a ** 3 + 4 * a * a * t * t + 4 * a * b * t - 2 * b * b - H)
    return (3 * t * t + a / 9 + F, 4 / 3 * a * t + 2 / 3 * b + G,
            a * t * t + 2 * b * t - a * a / 9 + H)


def grid_points(a, b, r: int, t, bound: int = 30) -> Set[X8Point]:
    """Every point over t whose a-coordinates all have height <= bound.

    Two coordinates are scanned on the full grid; the third is read off
    the equation that is linear in it (f_r in a0 when a2 != 0, and the
    a2 = 0 slice is scanned over (a0, a1) directly).  Float residues
    pre-filter candidates; every survivor is confirmed exactly.
    """
    import numpy as np

    a, b, t = Q(a), Q(b), Q(t)
    vals = rationals_up_to_height(bound)
    grid = np.array([float(v) for v in vals])
    af, bf, tf = float(a), float(b), float(t)
    scale = (1 + abs(af) + abs(bf)) ** 3 * (1 + tf * tf)
    found: Set[X8Point] = set()

    def confirm(idx_pairs, build):
        for i, j in idx_pairs:
            P = build(i, j)
            if P is not None and system_values(a, b, r, *P.as_tuple()) == (0, 0, 0):
                found.add(P)

    # a2 = 0 slice, scanning (a0, a1)
    A0, A1 = np.meshgrid(grid, grid, indexing="ij")
    zero = np.zeros_like(A0)
    res = _float_system(af, bf, r, tf, A0, A1, zero)
    mag = 1 + A0 * A0 + A1 * A1
    mask = np.ones_like(A0, dtype=bool)
    for e in res:
        mask &= np.abs(e) <= 1e-7 * scale * mag
    confirm(zip(*np.nonzero(mask)), lambda i, j: X8Point(t, vals[i], vals[j], Fraction(0)))

    # a2 != 0: f_r = c*a0 + R with c = +-2*a2, so a0 is determined by (a1, a2)
    nz = [k for k, v in enumerate(vals) if v != 0]
    A1, A2 = np.meshgrid(grid, grid[nz], indexing="ij")
    f0 = _float_system(af, bf, r, tf, np.zeros_like(A1), A1, A2)[0]
    f1 = _float_system(af, bf, r, tf, np.ones_like(A1), A1, A2)[0]
    A0 = -f0 / (f1 - f0)
    res = _float_system(af, bf, r, tf, A0, A1, A2)
    mag = 1 + A0 * A0 + A1 * A1 + A2 * A2
    mask = np.abs(A0) <= bound + 0.5
    for e in res[1:]:
        mask &= np.abs(e) <= 1e-7 * scale * mag

    def build(i, j):
        x1, x2 = vals[i], vals[nz[j]]
        e0 = system_values(a, b, r, t, Fraction(0), x1, x2)[0]
        e1 = system_values(a, b, r, t, Fraction(1), x1, x2)[0]
        x0 = -e0 / (e1 - e0)
        if max(abs(x0.numerator), x0.denominator) > bound:
            return None
        return X8Point(t, x0, x1, x2)

    confirm(zip(*np.nonzero(mask)), build)
    return found


def height_of_point(P: X8Point) -> int:
    return max(max(abs(c.numerator), c.denominator) for c in (P.a0, P.a1, P.a2))
