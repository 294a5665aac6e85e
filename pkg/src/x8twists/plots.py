"""Figures for CLI reports (matplotlib, file output only)."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .congruence import AGREE, DISAGREE, CongruenceReport  # noqa: E402

_STATUS_COLOURS = {AGREE: "tab:green", DISAGREE: "tab:red"}


def trace_plot(report: CongruenceReport, path) -> Path:
    """Traces of both curves per prime, with bad primes shaded."""
    path = Path(path)
    ps = [row.p for row in report.rows]
    fig, ax = plt.subplots(figsize=(8, 3.5))
    ax.plot(ps, [row.apE for row in report.rows], "o-", label="a_p(E)", ms=4)
    ax.plot(ps, [row.apF for row in report.rows], "s--", label="a_p(F)", ms=4)
    for row in report.rows:
        if row.status in _STATUS_COLOURS:
            ax.axvline(row.p, color=_STATUS_COLOURS[row.status], alpha=0.12, lw=3)
        else:
            ax.axvline(row.p, color="grey", alpha=0.35, lw=3)
    ax.set_xlabel("p")
    ax.set_ylabel("trace of Frobenius")
    verdict = "congruent mod 8" if report.passed else f"fails at {report.failures}"
    ax.set_title(f"r={report.r}: {verdict}; exceptions {report.exceptions}")
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def search_plot(hits: Sequence, path) -> Path:
    """t against the height of the solution, one marker per point pair."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6, 4))
    if hits:
        ts = [float(h.point.t) for h in hits]
        hs = [max(max(abs(c.numerator), c.denominator) for c in h.point.as_tuple()[1:])
              for h in hits]
        ax.scatter(ts, hs, s=18)
        ax.set_yscale("log")
    else:
        ax.text(0.5, 0.5, "no points in range", ha="center", va="center", transform=ax.transAxes)
    ax.set_xlabel("t")
    ax.set_ylabel("height of (a0, a1, a2)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def summary_plot(results: Sequence, path) -> Path:
    """Per-criterion runtime bars coloured by outcome."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ids = [str(r.id) for r in results]
    ax.bar(ids, [r.seconds for r in results],
           color=["tab:green" if r.passed else "tab:red" for r in results])
    ax.set_xlabel("criterion")
    ax.set_ylabel("seconds")
    passed = sum(r.passed for r in results)
    ax.set_title(f"{passed}/{len(results)} passed")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
