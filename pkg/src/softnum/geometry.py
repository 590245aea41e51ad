"""The soft-number strip, its plane transforms, the reciprocal-line lemmas,
and the Moebius-strip embedding.

A strip point has a signed height A (arc-length units) and a signed width
B in [-1, 1]; B = 0 is the zero axis, B = +1/-1 the two real boundaries.
Mapping to the soft-number plane uses x = (1-|B|)*A (zero-axis coordinate)
and y = B*A (real coordinate).  Bending the bounded strip (|A| <= pi*R)
around radius R with a half twist closes it into a Moebius strip.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

_RANGE_SLACK = 1e-12  # relative slack on interval preconditions


class StripPoint(NamedTuple):
    """Point on the soft-number strip: signed height and signed width."""

    height: float
    width: float


class PlanePoint(NamedTuple):
    """Point in the soft-number plane: zero-axis coordinate x, real coordinate y."""

    x: float
    y: float


class MobiusVertex(NamedTuple):
    """Embedded strip vertex with its color class."""

    x: float
    y: float
    z: float
    color: float


def ab_to_xy(p: StripPoint) -> PlanePoint:
    """Strip coordinates to plane coordinates: x = (1-|B|)A, y = BA."""
    height, width = p
    if not -1.0 <= width <= 1.0:
        raise ValueError(f"strip width out of [-1, 1]: {width}")
    return PlanePoint((1.0 - abs(width)) * height, width * height)


def xy_to_ab(q: PlanePoint) -> StripPoint:
    """Plane coordinates back to the strip: A = (|x|+|y|)sign(x), B = y sign(x)/(|x|+|y|).

    Degenerate cases are canonicalized: the origin maps to (0, 0), and points
    with x = 0 (pure reals) map to the boundary on their own side, (|y|, sign(y)),
    which is the sign(0) := +1 resolution of the general formula.
    """
    x, y = q
    norm = abs(x) + abs(y)
    if norm == 0.0:
        return StripPoint(0.0, 0.0)
    sign_x = 1.0 if x >= 0.0 else -1.0
    return StripPoint(norm * sign_x, y * sign_x / norm)


def reciprocal(x: float) -> float:
    """1/x; maps (0, 1] one-to-one onto [1, inf)."""
    if x == 0.0:
        raise ZeroDivisionError("reciprocal of zero")
    return 1.0 / x


def reciprocal_line_intersection(x1: float, x2: float) -> tuple[float, float]:
    """Intersection of the two lines joining x on the horizontal axis to 1/x
    on the vertical axis.

    The planar embedding puts the axes' junction at the origin, the value x
    at (x-1, 0) and the value v at (0, v-1); every such line then passes
    through the absolute zero (-1, -1), one unit below the horizontal axis'
    zero.  Computed by homogeneous-coordinate cross products.
    """
    for x in (x1, x2):
        if not x > 0.0:
            raise ValueError(f"reciprocal lines are defined for x > 0, got {x}")
        if x == 1.0:
            raise ValueError("x = 1 degenerates to a single point, no line")
    if x1 == x2:
        raise ValueError("coincident lines have no unique intersection")

    def line(x: float) -> tuple[float, float, float]:
        # Through (x-1, 0, 1) and (0, 1/x - 1, 1), as a homogeneous cross product.
        px, py = x - 1.0, 0.0
        qx, qy = 0.0, 1.0 / x - 1.0
        return (py - qy, qx - px, px * qy - py * qx)

    a1, b1, c1 = line(x1)
    a2, b2, c2 = line(x2)
    w = a1 * b2 - a2 * b1
    if w == 0.0:
        raise ValueError("parallel lines do not intersect")
    px = (b1 * c2 - b2 * c1) / w
    py = (a2 * c1 - a1 * c2) / w
    return (px, py)


def phi_from_a(height: float, radius: float) -> float:
    """Bending angle from arc length: phi = A / R, for |A| <= pi*R."""
    _require_radius(radius)
    bound = math.pi * radius
    if abs(height) > bound * (1.0 + _RANGE_SLACK):
        raise ValueError(f"height {height} outside [-pi*R, pi*R] = [-{bound}, {bound}]")
    return height / radius


def a_from_phi(phi: float, radius: float) -> float:
    """Arc length from bending angle: A = phi * R, for |phi| <= pi."""
    _require_radius(radius)
    _require_angle(phi)
    return phi * radius


def _require_radius(radius: float) -> None:
    if not radius > 1.0:
        raise ValueError(f"bending radius must exceed 1, got {radius}")


def _require_angle(phi: float) -> None:
    if abs(phi) > math.pi * (1.0 + _RANGE_SLACK):
        raise ValueError(f"angle {phi} outside [-pi, pi]")


def mobius_point(phi: float, width: float, radius: float) -> tuple[float, float, float]:
    """Embedding of the bent strip:

        X = (R + B cos(phi/2)) cos(phi)
        Y = (R + B cos(phi/2)) sin(phi)
        Z =  B sin(phi/2)

    The half-angle twist glues (phi=pi, B) to (phi=-pi, -B), closing the strip
    one-sidedly.
    """
    _require_radius(radius)
    _require_angle(phi)
    if not -1.0 <= width <= 1.0:
        raise ValueError(f"strip width out of [-1, 1]: {width}")
    ring = radius + width * math.cos(phi / 2.0)
    return (ring * math.cos(phi), ring * math.sin(phi), width * math.sin(phi / 2.0))


def color_code(height: float, width: float) -> float:
    """Quadrant color class of a strip point (strict inequalities; axes get 0)."""
    if height < 0.0 and width > 0.0:
        return 1.0
    if height > 0.0 and width > 0.0:
        return 0.7
    if height < 0.0 and width < 0.0:
        return 0.5
    return 0.0


class Surface(Enum):
    """Which realization of the strip a mesh carries as its 3D positions."""

    SNS = "sns"
    CARTESIAN = "cartesian"
    MOBIUS = "mobius"


@dataclass(frozen=True)
class StripMesh:
    """Vertex grid over the bounded strip, row-major in the angle index.

    Row i carries phi_i uniform over [-pi, pi], column j carries width_j
    uniform over [-1, 1]; every 2D array is indexed [i, j].
    """

    surface: Surface
    radius: float
    n_phi: int
    n_width: int
    phi: np.ndarray
    width: np.ndarray
    height: np.ndarray
    plane_x: np.ndarray
    plane_y: np.ndarray
    mob_x: np.ndarray
    mob_y: np.ndarray
    mob_z: np.ndarray
    color: np.ndarray

    @property
    def vertex_count(self) -> int:
        return self.n_phi * self.n_width

    def positions(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """3D vertex positions for this mesh's surface choice."""
        flat = np.zeros_like(self.height)
        if self.surface is Surface.SNS:
            return (self.width, self.height, flat)
        if self.surface is Surface.CARTESIAN:
            return (self.plane_x, self.plane_y, flat)
        return (self.mob_x, self.mob_y, self.mob_z)

    def vertex(self, i: int, j: int) -> MobiusVertex:
        return MobiusVertex(
            float(self.mob_x[i, j]),
            float(self.mob_y[i, j]),
            float(self.mob_z[i, j]),
            float(self.color[i, j]),
        )


def generate_mesh(surface: Surface, radius: float, resolution: tuple[int, int]) -> StripMesh:
    """Uniform (phi, width) grid with plane and Moebius coordinates and colors.

    Deterministic function of (surface, radius, resolution); vectorized, but
    vertex-for-vertex identical to the scalar transforms.
    """
    n_phi, n_width = resolution
    if n_phi < 2 or n_width < 2:
        raise ValueError(f"resolution components must be >= 2, got {resolution}")
    _require_radius(radius)

    phi_axis = np.linspace(-math.pi, math.pi, n_phi)
    width_axis = np.linspace(-1.0, 1.0, n_width)
    width, phi = np.meshgrid(width_axis, phi_axis)
    height = phi * radius

    plane_x = (1.0 - np.abs(width)) * height
    plane_y = width * height

    ring = radius + width * np.cos(phi / 2.0)
    mob_x = ring * np.cos(phi)
    mob_y = ring * np.sin(phi)
    mob_z = width * np.sin(phi / 2.0)

    color = np.select(
        [
            (height < 0.0) & (width > 0.0),
            (height > 0.0) & (width > 0.0),
            (height < 0.0) & (width < 0.0),
        ],
        [1.0, 0.7, 0.5],
        default=0.0,
    )

    return StripMesh(
        surface=surface,
        radius=radius,
        n_phi=n_phi,
        n_width=n_width,
        phi=phi,
        width=width,
        height=height,
        plane_x=plane_x,
        plane_y=plane_y,
        mob_x=mob_x,
        mob_y=mob_y,
        mob_z=mob_z,
        color=color,
    )
