"""Matplotlib figures for sweeps, written next to the CSV output."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .sweep import SweepRow, series  # noqa: E402

KIND_LABELS = {"beta": r"$\beta$", "p": r"$p$", "k": r"$k$"}

RC = {
    "font.size": 10,
    "axes.labelsize": 11,
    "legend.fontsize": 9,
    "xtick.labelsize": 9,
    "ytick.labelsize": 9,
    "svg.hashsalt": "abcindex",
}


def plot_sweep(rows: Sequence[SweepRow], path: str | Path, title: str | None = None) -> Path:
    """Draw one line per (n, parameter kind) series and save to ``path`` (format from suffix)."""
    if not rows:
        raise ValueError("cannot plot an empty sweep")
    path = Path(path)
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(6.4, 4.0))
        for (n, kind), pts in series(rows).items():
            ax.plot([r.param_value for r in pts], [r.abc_max for r in pts],
                    label=f"n={n}, {KIND_LABELS.get(kind, kind)}", lw=1.3)
        kinds = {r.param_kind for r in rows}
        ax.set_xlabel(KIND_LABELS[next(iter(kinds))] if len(kinds) == 1 else "parameter value")
        ax.set_ylabel("maximum ABC index")
        if title:
            ax.set_title(title)
        ax.legend(frameon=False)
        fig.tight_layout()
        # no timestamps, so reruns produce identical files
        meta = {"Date": None} if path.suffix in (".svg", ".pdf") else {}
        fig.savefig(path, metadata=meta or None)
        plt.close(fig)
    return path
