"""Figure rendering for scan reports."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .forms import ScalarField
from .ratios import ScanReport

__all__ = ["RatioHistogram", "render_scan_figure"]


class RatioHistogram:
    """Streaming histogram of ratio values fed chunk by chunk."""

    def __init__(self, bins: int = 200, lo: float = 0.0, hi: float = 1.5):
        self.edges = np.linspace(lo, hi, bins + 1)
        self.counts = np.zeros(bins, dtype=np.int64)

    def add(self, ratios: np.ndarray) -> None:
        counts, _ = np.histogram(ratios, bins=self.edges)
        self.counts += counts


def render_scan_figure(report: ScanReport, hist: RatioHistogram, path: str) -> None:
    """Write a PNG summarizing the ratio distribution of a grid scan."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    centers = (hist.edges[:-1] + hist.edges[1:]) / 2.0
    width = hist.edges[1] - hist.edges[0]
    ax.bar(centers, hist.counts, width=width, color="steelblue", log=True)
    ax.axvline(report.max_ratio, color="crimson", linestyle="-", label=f"max = {report.max_ratio:.9f}")
    if report.config.field is ScalarField.REAL:
        ax.axvline(math.sqrt(2.0), color="gray", linestyle="--", label="sqrt(2)")
    else:
        ax.axvline(1.0, color="gray", linestyle="--", label="1")
    ax.set_xlabel("4/3-norm / operator norm")
    ax.set_ylabel("grid points")
    ax.set_title(
        f"Littlewood ratio over [{report.config.box[0]}, {report.config.box[1]}]^4, "
        f"step {report.config.step}, {report.config.field.value} field"
    )
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
