"""Bar chart of a determinant spectrum, written straight to a file."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .fh import SpectrumReport  # noqa: E402


def plot_spectrum(report: SpectrumReport, path: str | Path, title: str | None = None) -> Path:
    """Save a bar chart of ``report`` (value vs. number of signatures) to ``path``."""
    path = Path(path)
    values = sorted(report.counts)
    counts = [report.counts[v] for v in values]
    fig, ax = plt.subplots(figsize=(6.0, 3.2))
    try:
        pos = range(len(values))
        ax.bar(pos, counts, width=0.7, color="0.35", edgecolor="black", linewidth=0.5)
        ax.set_xticks(list(pos))
        ax.set_xticklabels([str(v) for v in values])
        ax.set_xlabel("signed value" if report.signed else "determinant")
        ax.set_ylabel("signatures")
        for p, c in zip(pos, counts):
            ax.annotate(str(c), (p, c), ha="center", va="bottom", fontsize=7,
                        xytext=(0, 1), textcoords="offset points")
        ax.spines["top"].set_visible(False)
        ax.spines["right"].set_visible(False)
        ax.set_title(title if title is not None else report.note(), fontsize=9)
        fig.tight_layout()
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path)
    finally:
        plt.close(fig)
    return path
