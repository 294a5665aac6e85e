"""Trace-of-Frobenius comparison of candidate mod-8 congruent pairs."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .elliptic import GOOD, SPLIT, NONSPLIT, Curve, ReductionInfo, primes_up_to, reduction_type

AGREE = "agree"
DISAGREE = "disagree"
EXCEPTION = "exception"
MULTIPLICATIVE = (SPLIT, NONSPLIT)


@dataclass(frozen=True)
class TraceRow:
    p: int
    E: ReductionInfo
    F: ReductionInfo
    status: str
    reason: str = ""

    @property
    def apE(self) -> int:
        return self.E.ap

    @property
    def apF(self) -> int:
        return self.F.ap

    def to_json(self) -> dict:
        return {"p": self.p, "apE": self.apE, "apF": self.apF,
                "apE_mod8": self.apE % 8, "apF_mod8": self.apF % 8,
                "typeE": self.E.type, "typeF": self.F.type,
                "status": self.status, "reason": self.reason}


def _row(E: Curve, F: Curve, p: int, modulus: int = 8) -> TraceRow:
    rE, rF = reduction_type(E, p), reduction_type(F, p)
    if rE.type != GOOD or rF.type != GOOD:
        bad = [f"{n}: {r.type}" for n, r in (("E", rE), ("F", rF)) if r.type != GOOD]
        return TraceRow(p, rE, rF, EXCEPTION, "bad reduction (" + ", ".join(bad) + ")")
    ok = (rE.ap - rF.ap) % modulus == 0
    return TraceRow(p, rE, rF, AGREE if ok else DISAGREE)


def ap_table(E: Curve, F: Curve, primes: Sequence[int]) -> List[TraceRow]:
    return [_row(E, F, p) for p in primes]


@dataclass(frozen=True)
class ValuationNote:
    p: int
    vE: int
    vF: int
    typeE: str
    typeF: str

    @property
    def both_split(self) -> bool:
        return self.typeE == SPLIT and self.typeF == SPLIT

    def to_json(self) -> dict:
        return {"p": self.p, "v_disc_E": self.vE, "v_disc_F": self.vF,
                "typeE": self.typeE, "typeF": self.typeF}


def _bad_primes(C: Curve) -> List[int]:
    import sympy

    d = C.discriminant
    return sorted(set(sympy.factorint(abs(d.numerator))) | set(sympy.factorint(d.denominator)))


def valuation_report(E: Curve, F: Curve, split_only: bool = True,
                     primes: Optional[Sequence[int]] = None) -> List[ValuationNote]:
    """(v_p(disc E), v_p(disc F)) at primes where both reductions are multiplicative.

    By default only primes where both are split are listed.  Without an
    explicit prime list the common prime divisors of the discriminants are
    used.
    """
    if primes is None:
        primes = sorted(set(_bad_primes(E)) & set(_bad_primes(F)))
    notes = []
    for p in primes:
        rE, rF = reduction_type(E, p), reduction_type(F, p)
        if rE.type in MULTIPLICATIVE and rF.type in MULTIPLICATIVE:
            note = ValuationNote(p, rE.vdelta, rF.vdelta, rE.type, rF.type)
            if note.both_split or not split_only:
                notes.append(note)
    return notes


@dataclass
class CongruenceReport:
    E: Curve
    F: Curve
    r: int
    bound: int
    rows: List[TraceRow]
    witness: Optional[int]
    j_distinct: bool
    valuations: List[ValuationNote] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.status != DISAGREE for row in self.rows)

    @property
    def exceptions(self) -> List[int]:
        return [row.p for row in self.rows if row.status == EXCEPTION]

    @property
    def failures(self) -> List[int]:
        return [row.p for row in self.rows if row.status == DISAGREE]

    def to_json(self) -> dict:
        return {
            "E": self.E.to_json(), "F": self.F.to_json(), "r": self.r, "bound": self.bound,
            "passed": self.passed, "exceptions": self.exceptions, "failures": self.failures,
            "witness": self.witness, "j_distinct": self.j_distinct,
            "rows": [row.to_json() for row in self.rows],
            "valuations": [v.to_json() for v in self.valuations],
        }

    @classmethod
    def from_json(cls, d: dict) -> "CongruenceReport":
        return verify_congruence(Curve.from_json(d["E"]), Curve.from_json(d["F"]), d["r"], d["bound"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "apE", "apF", "apE_mod8", "apF_mod8", "status"])
        for row in self.rows:
            w.writerow([row.p, row.apE, row.apF, row.apE % 8, row.apF % 8, row.status])
        return buf.getvalue()


def _witness_from_rows(rows: Sequence[TraceRow]) -> Optional[int]:
    for row in rows:
        if row.E.type == GOOD and row.F.type == GOOD and row.apE != row.apF:
            return row.p
    return None


def non_isogeny_witness(E: Curve, F: Curve, bound: int) -> Optional[int]:
    """Smallest prime <= bound, good for both curves, with different traces."""
    if bound < 5:
        raise ValueError("bound must be at least 5")
    for p in primes_up_to(bound):
        rE, rF = reduction_type(E, p), reduction_type(F, p)
        if rE.type == GOOD and rF.type == GOOD and rE.ap != rF.ap:
            # re-validate before returning
            assert reduction_type(E, p).ap != reduction_type(F, p).ap
            return p
    return None


def verify_congruence(E: Curve, F: Curve, r: int, bound: int) -> CongruenceReport:
    if bound < 5:
        raise ValueError("bound must be at least 5")
    rows = ap_table(E, F, primes_up_to(bound))
    return CongruenceReport(E=E, F=F, r=r, bound=bound, rows=rows,
                            witness=_witness_from_rows(rows), j_distinct=E.j != F.j,
                            valuations=valuation_report(E, F, primes=[row.p for row in rows
                                                                     if row.status == EXCEPTION]))


def write_report(report: CongruenceReport, json_path=None, csv_path=None) -> None:
    if json_path is not None:
        with open(json_path, "w") as fh:
            json.dump(report.to_json(), fh, indent=2)
    if csv_path is not None:
        with open(csv_path, "w") as fh:
            fh.write(report.to_csv())
