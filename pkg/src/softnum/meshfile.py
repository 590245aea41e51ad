"""Deterministic mesh export: CSV and OBJ writers plus a JSON manifest.

CSV schema (header exactly): ``i,j,phi,A,B,x,y,X,Y,Z,color`` -- one row per
vertex, row-major in the angle index i.  Floats are printed with 17
significant digits so a re-read reproduces the doubles bit for bit.  The
manifest sidecar ``<out>.manifest.json`` records the configuration and the
SHA-256 of the exact bytes written.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .geometry import StripMesh

CSV_HEADER = "i,j,phi,A,B,x,y,X,Y,Z,color"


@dataclass(frozen=True)
class MeshFileManifest:
    surface: str
    R: float
    resolution: tuple[int, int]
    vertexCount: int
    format: str
    checksum: str

    def to_json(self) -> str:
        payload = asdict(self)
        payload["resolution"] = list(self.resolution)
        return json.dumps(payload, indent=2) + "\n"


def _fmt(value: float) -> str:
    return format(value, ".17g")


class _HashingWriter:
    """Pushes encoded text to a file while accumulating its SHA-256."""

    def __init__(self, path: Path):
        self.path = path
        self.digest = hashlib.sha256()
        self._handle = open(path, "wb")

    def write(self, text: str) -> None:
        data = text.encode("ascii")
        self.digest.update(data)
        self._handle.write(data)

    def close(self) -> str:
        self._handle.close()
        return self.digest.hexdigest()


def write_csv(mesh: StripMesh, path: Path) -> MeshFileManifest:
    out = _HashingWriter(path)
    try:
        out.write(CSV_HEADER + "\n")
        for i in range(mesh.n_phi):
            phi = mesh.phi[i]
            height = mesh.height[i]
            width = mesh.width[i]
            px, py = mesh.plane_x[i], mesh.plane_y[i]
            mx, my, mz = mesh.mob_x[i], mesh.mob_y[i], mesh.mob_z[i]
            color = mesh.color[i]
            for j in range(mesh.n_width):
                out.write(
                    f"{i},{j},{_fmt(phi[j])},{_fmt(height[j])},{_fmt(width[j])},"
                    f"{_fmt(px[j])},{_fmt(py[j])},"
                    f"{_fmt(mx[j])},{_fmt(my[j])},{_fmt(mz[j])},{_fmt(color[j])}\n"
                )
    finally:
        checksum = out.close()
    return _manifest(mesh, "csv", checksum)


def color_to_rgb(code: float) -> tuple[float, float, float]:
    """Piecewise-linear scalar-to-RGB map (blue through green to red)."""

    def clamp(v: float) -> float:
        return min(1.0, max(0.0, v))

    return (
        clamp(1.5 - abs(4.0 * code - 3.0)),
        clamp(1.5 - abs(4.0 * code - 2.0)),
        clamp(1.5 - abs(4.0 * code - 1.0)),
    )


def write_obj(mesh: StripMesh, path: Path) -> MeshFileManifest:
    """Vertex-colored OBJ (``v x y z r g b``); each grid quad becomes two
    triangles, wound counterclockwise seen from +Z at phi = 0."""
    xs, ys, zs = mesh.positions()
    out = _HashingWriter(path)
    try:
        out.write(f"# softnum {mesh.surface.value} mesh, {mesh.vertex_count} vertices\n")
        for i in range(mesh.n_phi):
            for j in range(mesh.n_width):
                r, g, b = color_to_rgb(float(mesh.color[i, j]))
                out.write(
                    f"v {_fmt(xs[i, j])} {_fmt(ys[i, j])} {_fmt(zs[i, j])} "
                    f"{_fmt(r)} {_fmt(g)} {_fmt(b)}\n"
                )
        for i in range(mesh.n_phi - 1):
            for j in range(mesh.n_width - 1):
                v00 = i * mesh.n_width + j + 1
                v01 = v00 + 1
                v10 = v00 + mesh.n_width
                v11 = v10 + 1
                out.write(f"f {v00} {v10} {v11}\n")
                out.write(f"f {v00} {v11} {v01}\n")
    finally:
        checksum = out.close()
    return _manifest(mesh, "obj", checksum)


def _manifest(mesh: StripMesh, fmt: str, checksum: str) -> MeshFileManifest:
    return MeshFileManifest(
        surface=mesh.surface.value,
        R=mesh.radius,
        resolution=(mesh.n_phi, mesh.n_width),
        vertexCount=mesh.vertex_count,
        format=fmt,
        checksum=checksum,
    )


def write_mesh(mesh: StripMesh, path: Path, fmt: str) -> MeshFileManifest:
    """Write the mesh plus its manifest sidecar; returns the manifest."""
    path = Path(path)
    if fmt == "csv":
        manifest = write_csv(mesh, path)
    elif fmt == "obj":
        manifest = write_obj(mesh, path)
    else:
        raise ValueError(f"unsupported mesh format {fmt!r}")
    manifest_path = Path(str(path) + ".manifest.json")
    manifest_path.write_text(manifest.to_json(), encoding="ascii")
    return manifest


def read_csv(path: Path) -> dict[str, np.ndarray]:
    """Load an exported CSV back into named columns (validates the header)."""
    with open(path, "r", encoding="ascii") as handle:
        header = handle.readline().rstrip("\n")
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {header!r}")
        data = np.loadtxt(handle, delimiter=",", ndmin=2)
    names = CSV_HEADER.split(",")
    if data.shape[1] != len(names):
        raise ValueError(f"expected {len(names)} columns, got {data.shape[1]}")
    return {name: data[:, k] for k, name in enumerate(names)}
