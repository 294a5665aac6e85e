"""Command line entry point: ``x8twists <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from .elliptic import Curve, SingularModel

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _load_curve(path: str) -> Curve:
    try:
        with open(path) as fh:
            data = json.load(fh)
        return Curve.from_json(data)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: not a curve JSON ({exc})") from None


def _nonsingular(a: Fraction, b: Fraction) -> None:
    if -4 * a ** 3 - 27 * b * b == 0:
        raise InputError(f"singular curve y^2 = x^3 + ({a})x + ({b})")


def _out_dir(args) -> Optional[Path]:
    if getattr(args, "out", None) is None:
        return None
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


# ---------------------------------------------------------------------------


def cmd_equations(args) -> int:
    from .twists8 import build_system

    _nonsingular(args.a, args.b)
    sys_ = build_system(args.a, args.b, args.r)
    print(sys_)
    out = _out_dir(args)
    if out:
        (out / "system.json").write_text(json.dumps(sys_.to_json(), indent=2))
    return EXIT_OK


def cmd_search(args) -> int:
    from .search import FIBER, SURFACE, SearchConfig, sweep
    from .twists8 import recover_curve

    if args.mode == FIBER and args.t is None:
        raise InputError("--mode fiber needs --t")
    if args.mode != SURFACE and (args.a is None or args.b is None):
        raise InputError("--a and --b are required outside surface mode")
    if args.mode != SURFACE:
        _nonsingular(args.a, args.b)
    cfg = SearchConfig(height=args.height, r=args.r, a=args.a or 0, b=args.b or 0,
                       mode=args.mode, t=args.t, workers=args.workers)
    hits = sweep(cfg)
    lines = []
    for hit in hits:
        rec = hit.point.to_json()
        try:
            rec["curveF"] = recover_curve(hit.a, hit.b, args.r, hit.point).to_json()
        except (SingularModel, ValueError) as exc:
            rec["curveF"] = None
            rec["note"] = str(exc)
        if args.mode == SURFACE:
            rec["a"] = str(hit.a)
            rec["b"] = str(hit.b)
        lines.append(rec)
        _emit(rec)
    out = _out_dir(args)
    if out:
        with open(out / "points.jsonl", "w") as fh:
            for rec in lines:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
        from .plots import search_plot
        search_plot(hits, out / "search.png")
    return EXIT_OK


def cmd_family(args) -> int:
    from .modular_x4x8 import CuspError, family_x4

    _nonsingular(args.a, args.b)
    try:
        F = family_x4(args.a, args.b, args.t, args.power)
    except CuspError as exc:
        raise InputError(str(exc)) from None
    _emit({"a": str(args.a), "b": str(args.b), "t": str(args.t), "power": args.power,
           "curve": F.to_json(), "j": str(F.j)})
    return EXIT_OK


def cmd_verify(args) -> int:
    from .congruence import write_report, verify_congruence

    if args.bound < 5:
        raise InputError("--bound must be at least 5")
    E, F = _load_curve(args.E), _load_curve(args.F)
    rep = verify_congruence(E, F, args.r, args.bound)
    _emit({"passed": rep.passed, "exceptions": rep.exceptions, "failures": rep.failures,
           "witness": rep.witness, "j_distinct": rep.j_distinct,
           "valuations": [v.to_json() for v in rep.valuations]})
    out = _out_dir(args)
    if out:
        write_report(rep, out / "congruence.json", out / "congruence.csv")
        from .plots import trace_plot
        trace_plot(rep, out / "traces.png")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_cocycle(args) -> int:
    from .cocycle import all_reports, group_orders

    reps = all_reports()
    for rep in reps:
        print(f"{'PASS' if rep.passed else 'FAIL'} {rep.id}")
    out = _out_dir(args)
    if out:
        payload = {"orders": group_orders(), "reports": [r.to_json() for r in reps]}
        (out / "cocycle.json").write_text(json.dumps(payload, indent=2, default=str))
    return EXIT_OK if all(r.passed for r in reps) else EXIT_FAIL


def cmd_reproduce(args) -> int:
    from .reproduce import reproduce

    try:
        results = reproduce(args.suite)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    for res in results:
        print(res.line())
        if not res.passed:
            print("    computed:", json.dumps(res.to_json()["computed"], default=str))
            if res.expected:
                print("    expected:", json.dumps(res.to_json()["expected"], default=str))
            if res.note:
                print("    note:", res.note)
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    out = _out_dir(args)
    if out:
        (out / "acceptance.json").write_text(
            json.dumps([r.to_json() for r in results], indent=2, default=str))
        from .plots import summary_plot
        summary_plot(results, out / "acceptance.png")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="x8twists",
                                description="Twists of X(8) and mod-8 congruent elliptic curves")
    sub = p.add_subparsers(dest="command", required=True)

    def add_r(sp):
        sp.add_argument("--r", type=int, required=True, choices=(1, 3, 5, 7))

    sp = sub.add_parser("equations", help="print the quadric system for X^r_E(8)")
    sp.add_argument("--a", type=_rational, required=True)
    sp.add_argument("--b", type=_rational, required=True)
    add_r(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_equations)

    sp = sub.add_parser("search", help="rational points by fiber solving")
    sp.add_argument("--a", type=_rational)
    sp.add_argument("--b", type=_rational)
    add_r(sp)
    sp.add_argument("--mode", choices=("fiber", "sweep", "surface"), default="sweep")
    sp.add_argument("--height", type=int, default=3)
    sp.add_argument("--t", type=_rational)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("family", help="member of the X_E(4) family at t")
    sp.add_argument("--a", type=_rational, required=True)
    sp.add_argument("--b", type=_rational, required=True)
    sp.add_argument("--t", type=_rational, required=True)
    sp.add_argument("--power", type=int, choices=(1, 3), default=1)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("verify", help="compare traces of Frobenius mod 8")
    sp.add_argument("--E", required=True)
    sp.add_argument("--F", required=True)
    add_r(sp)
    sp.add_argument("--bound", type=int, default=100)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("cocycle", help="check the finite group computations")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_cocycle)

    sp = sub.add_parser("reproduce", help="run the acceptance checks")
    sp.add_argument("--suite", default="all")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (InputError, SingularModel) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
