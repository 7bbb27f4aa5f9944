"""Raster and PDF rendering of the wedge chart with matplotlib."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from . import tokens  # noqa: E402
from .chart import GRAY, IRREGULAR, RED, ChartDot  # noqa: E402


def render_chart(dots: list[ChartDot], path: str | Path, labels: bool = True, dpi: int = 150) -> Path:
    """Draw the dots with grid lines every two units; the format follows the file suffix."""
    path = Path(path)
    stems = [d.stem for d in dots]
    filts = [d.filtration for d in dots]
    width = max(6.0, 0.32 * (max(stems) - min(stems) + 4))
    height = max(4.0, 0.32 * (max(filts) - min(filts) + 4))
    fig, ax = plt.subplots(figsize=(width, height))
    try:
        colors = [RED if d.cls == IRREGULAR else GRAY for d in dots]
        ax.scatter(stems, filts, c=colors, s=18, zorder=3)
        if labels:
            for d in dots:
                ax.annotate(tokens.display(d.label), (d.stem, d.filtration), xytext=(0, -9),
                            textcoords="offset points", ha="center", fontsize=5)
        lo_s, hi_s = min(stems) - min(stems) % 2 - 2, max(stems) + 2
        lo_f, hi_f = min(filts) - min(filts) % 2 - 2, max(filts) + 2
        ax.set_xlim(lo_s, hi_s)
        ax.set_ylim(lo_f, hi_f)
        ax.set_xticks(range(lo_s, hi_s + 1, 2))
        ax.set_yticks(range(lo_f, hi_f + 1, 2))
        ax.tick_params(labelsize=6)
        ax.grid(True, color="#dddddd", linewidth=0.5, zorder=0)
        ax.set_xlabel("stem")
        ax.set_ylabel("filtration")
        fig.tight_layout()
        fig.savefig(path, dpi=dpi)
    finally:
        plt.close(fig)
    return path
