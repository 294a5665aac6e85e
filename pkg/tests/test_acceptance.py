"""One test per acceptance criterion; the PASS/FAIL lines are echoed in the terminal summary."""

import pytest

from x8twists.reproduce import CRITERIA, run_criterion

RESULTS = {}


@pytest.mark.parametrize("cid", sorted(CRITERIA))
def test_criterion(cid):
    res = run_criterion(cid)
    RESULTS[cid] = res
    print(res.line())
    assert res.passed, res.note or res.to_json()["computed"]
