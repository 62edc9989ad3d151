"""Figures for benchmark reports."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import NullFormatter  # noqa: E402

from .harness import BenchRow  # noqa: E402


def plot_settings(fontsize=10):
    plt.rc("font", size=fontsize)
    plt.rc("axes", labelsize=fontsize, titlesize=fontsize)
    plt.rc("legend", fontsize=fontsize - 1)


def plot_bench(rows: Sequence[BenchRow], path, title="solve scaling"):
    """Median time against table size, with a linear-in-cells guide.

    Writes the figure to ``path`` (format from the suffix) and returns it.
    """
    if not rows:
        raise ValueError("nothing to plot")
    plot_settings()
    cells = [row.table_cells for row in rows]
    times = [row.median_s for row in rows]

    fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(9, 3.6))
    ax0.loglog(cells, times, "o", label="median")
    for row in rows:
        ax0.loglog([row.table_cells] * len(row.samples), row.samples, ".", color="0.6", ms=3)
    # Slope-1 guide scaled by the mean time per cell.
    scale = sum(t / c for t, c in zip(times, cells)) / len(rows)
    lo, hi = min(cells), max(cells)
    ax0.loglog([lo, hi], [scale * lo, scale * hi], "--", color="k", lw=0.8, label="O(mnr)")
    ax0.xaxis.set_minor_formatter(NullFormatter())
    ax0.set_xlabel("table cells (m+1)(n+1)(r+1)")
    ax0.set_ylabel("seconds")
    ax0.legend()

    labels = [f"{r.m}x{r.n}x{r.r}" for r in rows]
    ax1.bar(range(len(rows)), [r.ns_per_cell for r in rows], color="C1")
    ax1.set_xticks(range(len(rows)))
    ax1.set_xticklabels(labels, rotation=45, ha="right")
    ax1.set_ylabel("ns per cell")

    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return fig
