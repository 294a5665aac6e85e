from fractions import Fraction

from x8twists.congruence import verify_congruence
from x8twists.plots import search_plot, summary_plot, trace_plot
from x8twists.reproduce import CURVES, CriterionResult
from x8twists.search import SearchHit
from x8twists.twists8 import X8Point

PNG = b"\x89PNG"


def test_trace_plot(tmp_path):
    rep = verify_congruence(CURVES["96a2"], CURVES["1056d2"], 5, 31)
    path = trace_plot(rep, tmp_path / "t.png")
    assert path.read_bytes().startswith(PNG)


def test_search_plot_with_and_without_hits(tmp_path):
    hit = SearchHit(Fraction(9), Fraction(-18), X8Point.of(-1, 0, 12, 0))
    assert search_plot([hit], tmp_path / "s.png").read_bytes().startswith(PNG)
    assert search_plot([], tmp_path / "e.png").read_bytes().startswith(PNG)


def test_summary_plot(tmp_path):
    res = [CriterionResult(1, "a", True, seconds=0.5), CriterionResult(2, "b", False, seconds=1.0)]
    assert summary_plot(res, tmp_path / "a.png").read_bytes().startswith(PNG)
