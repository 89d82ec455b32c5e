"""Matplotlib renderings for the CLI report paths.

Imported lazily so that plain library use never touches matplotlib.
All functions write a file and return its path; the Agg backend keeps
rendering headless.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from mpl_toolkits.mplot3d.art3d import Poly3DCollection

from .convex import Polytope
from .crystallize import ScalingRow

__all__ = ["plot_polytope", "plot_scaling", "plot_phi_sweep"]


def plot_polytope(poly: Polytope, path: str, title: str | None = None) -> str:
    """Render a polytope's facets to an image file."""
    if poly.degenerate:
        raise ValueError("cannot render a degenerate polytope")
    fig = plt.figure(figsize=(6, 6))
    ax = fig.add_subplot(111, projection="3d")
    polys = [[tuple(poly.vertices[i]) for i in facet.loop] for facet in poly.facets]
    collection = Poly3DCollection(
        polys, facecolors="#7fb2d9", edgecolors="#1f4060", linewidths=0.8, alpha=0.92
    )
    ax.add_collection3d(collection)
    span = float(np.max(np.abs(poly.vertices))) * 1.1
    ax.set_xlim(-span, span)
    ax.set_ylim(-span, span)
    ax.set_zlim(-span, span)
    ax.set_box_aspect((1, 1, 1))
    if title:
        ax.set_title(title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_scaling(rows: Sequence[ScalingRow], path: str, title: str | None = None) -> str:
    """Excess energy against cluster size with the macroscopic limit."""
    if not rows:
        raise ValueError("no rows to plot")
    ns = [r.n_atoms for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, [r.median_excess for r in rows], "o-", label="median excess energy")
    ax.plot(ns, [r.best_excess for r in rows], "s--", label="best excess energy")
    ax.axhline(rows[0].limit, color="k", linewidth=1, label="macroscopic limit")
    ax.set_xscale("log")
    ax.set_xlabel("atoms N")
    ax.set_ylabel(r"$N^{-2/3} \cdot$ energy")
    ax.legend()
    if title:
        ax.set_title(title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_phi_sweep(
    directions: np.ndarray,
    values: np.ndarray,
    path: str,
    polar_values: np.ndarray | None = None,
    title: str | None = None,
) -> str:
    """Surface density over a direction sweep, indexed by sample."""
    fig, ax = plt.subplots(figsize=(7, 4))
    idx = np.arange(len(values))
    ax.plot(idx, values, ".-", label="phi")
    if polar_values is not None:
        ax.plot(idx, polar_values, ".--", label="polar phi")
    ax.set_xlabel(f"direction index ({len(directions)} samples)")
    ax.set_ylabel("value")
    ax.legend()
    if title:
        ax.set_title(title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
