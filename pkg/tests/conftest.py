import os
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def small_rationals(h: int = 12):
    return st.builds(Fraction, st.integers(-h, h), st.integers(1, h))


def nonzero_rationals(h: int = 12):
    return small_rationals(h).filter(lambda x: x != 0)


def nonsingular_ab(h: int = 8):
    return st.tuples(small_rationals(h), small_rationals(h)).filter(
        lambda ab: -4 * ab[0] ** 3 - 27 * ab[1] ** 2 != 0)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(results):
        res = results[cid]
        terminalreporter.write_line(res.line())
        if not res.passed and res.note:
            terminalreporter.write_line(f"    note: {res.note}")
    passed = sum(r.passed for r in results.values())
    terminalreporter.write_line(f"{passed}/{len(results)} criteria passed")
