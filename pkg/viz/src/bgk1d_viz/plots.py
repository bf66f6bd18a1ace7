"""Figure builders: phase-space heatmap, moment panels, conservation curves.

Every plotted number originates in a solver output file; nothing is
recomputed here.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .readers import read_conservation, read_moments, read_snapshot

LOG_FLOOR = 1e-18


def plot_pdf_heatmap(snapshot_path, output_path) -> None:
    """Render one distribution snapshot as a heatmap, x horizontal and
    v vertical, with a labeled colorbar and the output time in the title."""
    snap = read_snapshot(snapshot_path)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    im = ax.imshow(
        snap.values.T,
        origin="lower",
        aspect="auto",
        extent=(snap.x_low, snap.x_high, snap.v_low, snap.v_high),
        cmap="viridis",
    )
    fig.colorbar(im, ax=ax, label="f(x, v)")
    ax.set_xlabel("x")
    ax.set_ylabel("v")
    ax.set_title(f"particle distribution function, t = {snap.time:g}")
    fig.tight_layout()
    fig.savefig(output_path, dpi=150)
    plt.close(fig)


def plot_moments(moments_path_a, moments_path_b, output_path) -> None:
    """3x2 panel grid: density, bulk velocity, temperature profiles as rows,
    the two requested output times as columns."""
    profiles = [read_moments(moments_path_a), read_moments(moments_path_b)]
    fig, axes = plt.subplots(3, 2, figsize=(9.0, 9.0), sharex=True)
    quantities = (("rho", r"density $\rho$"),
                  ("u", "bulk velocity $u$"),
                  ("T", "temperature $T$"))
    for col, prof in enumerate(profiles):
        for row, (attr, label) in enumerate(quantities):
            ax = axes[row][col]
            y = getattr(prof, attr)
            style = "o" if prof.x.size == 1 else "-"
            ax.plot(prof.x, y, style, lw=1.2, ms=4)
            ax.set_ylabel(label)
            ax.grid(True, alpha=0.3)
        axes[0][col].set_title(f"t = {prof.time:g}")
        axes[2][col].set_xlabel("x")
    fig.tight_layout()
    fig.savefig(output_path, dpi=150)
    plt.close(fig)


def _floor(values: np.ndarray) -> np.ndarray:
    return np.maximum(values, LOG_FLOOR)


def plot_conservation(corrected_path, uncorrected_path, output_path) -> None:
    """Two log-scale panels of conservation deviations over time: uncorrected
    run on the left, corrected on the right, three curves each.  Exact zeros
    are clamped to 1e-18 so the log axis stays defined."""
    histories = (("without correction", read_conservation(uncorrected_path)),
                 ("with correction", read_conservation(corrected_path)))
    fig, axes = plt.subplots(1, 2, figsize=(10.0, 4.2), sharey=True)
    for ax, (title, hist) in zip(axes, histories):
        ax.semilogy(hist.time, _floor(hist.drho), label=r"$\Delta\rho$")
        ax.semilogy(hist.time, _floor(hist.dm), label=r"$\Delta m$")
        ax.semilogy(hist.time, _floor(hist.dE), label=r"$\Delta E$")
        ax.set_title(title)
        ax.set_xlabel("t")
        ax.grid(True, which="both", alpha=0.3)
        ax.legend()
    axes[0].set_ylabel("relative deviation")
    fig.tight_layout()
    fig.savefig(output_path, dpi=150)
    plt.close(fig)
