"""Matplotlib rendering for the CLI report path.

Each function draws one figure from already-computed arrays and writes it
to a file; nothing here touches an interactive backend.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

_DPI = 150


def render_evolution(path, ps, discord, classical):
    """Discord and classical correlations against the damping probability."""
    fig, axes = plt.subplots(2, 1, figsize=(6, 6), sharex=True)
    axes[0].plot(ps, discord, color="tab:blue")
    axes[0].set_ylabel("discord (bits)")
    axes[1].plot(ps, classical, color="tab:red")
    axes[1].set_ylabel("classical correlations (bits)")
    axes[1].set_xlabel("damping probability p")
    for ax in axes:
        ax.grid(True, alpha=0.4)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path


def render_delta_surface(path, xs, ys, panels):
    """Heatmaps of the conditional-entropy surface.

    ``panels`` is a list of (title, grid) pairs; grid cells outside the
    region of interest are NaN and render blank.
    """
    fig, axes = plt.subplots(1, len(panels), figsize=(4 * len(panels), 3.6))
    if len(panels) == 1:
        axes = [axes]
    for ax, (title, grid) in zip(axes, panels):
        im = ax.pcolormesh(xs, ys, grid.T, shading="auto", vmin=0.0, vmax=1.0)
        ax.set_title(title)
        ax.set_xlabel("x")
        ax.set_ylabel("y")
        ax.set_aspect("equal")
        fig.colorbar(im, ax=ax, shrink=0.85)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path


def render_correlation_surfaces(path, svals, phivals, discord_grid, classical_grid):
    """Discord and classical-correlation surfaces over purity and angle."""
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.6))
    for ax, grid, title in (
        (axes[0], discord_grid, "discord (bits)"),
        (axes[1], classical_grid, "classical correlations (bits)"),
    ):
        im = ax.pcolormesh(svals, phivals, grid.T, shading="auto")
        ax.set_xlabel("s")
        ax.set_ylabel("phi (rad)")
        ax.set_title(title)
        fig.colorbar(im, ax=ax, shrink=0.85)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path


def render_trajectories(path, x_plus, z_plus, x_minus, z_minus):
    """Bloch-plane trajectories of the damped +/- X-axis states."""
    fig, ax = plt.subplots(figsize=(5, 5))
    t = np.linspace(0.0, 2.0 * np.pi, 256)
    ax.plot(np.cos(t), np.sin(t), color="0.7", lw=1.0)
    ax.plot(x_plus, z_plus, color="tab:blue", label="damped +x state")
    ax.plot(x_minus, z_minus, color="tab:red", ls="--", label="damped -x state")
    ax.set_xlabel("x")
    ax.set_ylabel("z")
    ax.set_aspect("equal")
    ax.legend(loc="lower center")
    ax.grid(True, alpha=0.4)
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path
