#!/usr/bin/env python3
"""Offline renderer for softnum mesh exports.

Reads a CSV with the header ``i,j,phi,A,B,x,y,X,Y,Z,color`` (as written by
``softnum mesh --format csv``) and draws one of three panels:

    mobius     the embedded strip as a 3D surface with a color bar
    sns        the flat strip, width B against height A, seen from above
    cartesian  the soft-number plane, zero-axis x against real y, from above

Usage: render.py --in mesh.csv --panel mobius --out fig.png [--dpi 150]
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib import cm

CSV_HEADER = "i,j,phi,A,B,x,y,X,Y,Z,color"
PANELS = ("sns", "cartesian", "mobius")


class SchemaMismatchError(ValueError):
    """The input file does not carry the expected mesh CSV schema."""


@dataclass(frozen=True)
class RenderJob:
    input_csv: Path
    panel: str
    output_image: Path
    dpi: int = 150

    def __post_init__(self) -> None:
        if self.panel not in PANELS:
            raise ValueError(f"unknown panel {self.panel!r}; choose from {PANELS}")


def load_mesh(path: Path) -> dict[str, np.ndarray]:
    """Load the CSV into (n_phi, n_width) grids, one per column."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"mesh file not found: {path}")
    with open(path, "r", encoding="ascii") as handle:
        header = handle.readline().rstrip("\n")
        if header != CSV_HEADER:
            raise SchemaMismatchError(
                f"expected header {CSV_HEADER!r}, found {header!r}"
            )
        data = np.loadtxt(handle, delimiter=",", ndmin=2)
    names = CSV_HEADER.split(",")
    if data.shape[1] != len(names):
        raise SchemaMismatchError(f"expected {len(names)} columns, got {data.shape[1]}")
    n_phi = int(data[:, 0].max()) + 1
    n_width = int(data[:, 1].max()) + 1
    if n_phi * n_width != data.shape[0]:
        raise SchemaMismatchError(
            f"grid is ragged: {n_phi}x{n_width} indices but {data.shape[0]} rows"
        )
    return {name: data[:, k].reshape(n_phi, n_width) for k, name in enumerate(names)}


def _face_colors(color: np.ndarray) -> np.ndarray:
    span = color.max() - color.min()
    normalized = (color - color.min()) / span if span else np.zeros_like(color)
    return cm.jet(normalized)


def render_panel(job: RenderJob) -> Path:
    """Draw the requested panel and write the image file."""
    grids = load_mesh(job.input_csv)
    colors = _face_colors(grids["color"])

    fig = plt.figure()
    ax = fig.add_subplot(111, projection="3d")
    if job.panel == "mobius":
        surface = ax.plot_surface(
            grids["X"], grids["Y"], grids["Z"], cmap="jet", facecolors=colors, shade=False
        )
        ax.set_xlabel(r"$X$")
        ax.set_ylabel(r"$Y$")
        ax.set_zlabel(r"$Z$")
        ax.axis("equal")
        ax.set_title("Mobius Strip")
        fig.colorbar(surface, ax=ax, label="Color Code")
    elif job.panel == "sns":
        ax.plot_surface(
            grids["B"], grids["A"], grids["color"], cmap="jet", facecolors=colors, shade=False
        )
        ax.set_xlabel(r"$B$")
        ax.set_ylabel(r"$A$")
        ax.view_init(elev=90, azim=270)
        ax.set_xlim([-1.5, 1.5])
        ax.set_zticks([])
        ax.set_title("Soft Numbers Strip")
    else:
        ax.plot_surface(
            grids["x"], grids["y"], grids["color"], cmap="jet", facecolors=colors, shade=False
        )
        ax.set_xlabel(r"$x[\overline{0}]$")
        ax.set_ylabel(r"$y$")
        ax.view_init(elev=90, azim=270)
        ax.set_zticks([])
        ax.set_title("Soft Numbers Cartesian Plane")

    output = Path(job.output_image)
    fig.savefig(output, dpi=job.dpi)
    plt.close(fig)
    return output


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--in", dest="input_csv", required=True)
    parser.add_argument("--panel", choices=PANELS, required=True)
    parser.add_argument("--out", dest="output_image", required=True)
    parser.add_argument("--dpi", type=int, default=150)
    args = parser.parse_args(argv)
    try:
        render_panel(
            RenderJob(
                input_csv=Path(args.input_csv),
                panel=args.panel,
                output_image=Path(args.output_image),
                dpi=args.dpi,
            )
        )
    except (OSError, ValueError) as err:
        print(f"render: {err}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
