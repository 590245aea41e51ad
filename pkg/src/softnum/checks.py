"""Self-verification suites behind the ``check`` command: the reciprocal
bijection, the common intersection point of reciprocal lines, strip/plane
round trips, and the Moebius seam gluing."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

from . import geometry

#: Suite-specific default tolerances, overridable as a group via
#: SOFTNUM_TOLERANCE or the --tolerance flag.
DEFAULT_TOLERANCES = {
    "reciprocal-involution": 1e-15,
    "reciprocal-line-intersection": 1e-9,
    "strip-plane-round-trip": 1e-12,
    "seam-gluing": 1e-12,
}


@dataclass
class SuiteResult:
    name: str
    passed: bool
    cases: int
    max_error: float
    tolerance: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[{status}] {self.name}: cases={self.cases} "
            f"max_error={self.max_error:.3e} tolerance={self.tolerance:.3e}"
        )


@dataclass
class CheckReport:
    results: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def render(self) -> str:
        lines = [r.line() for r in self.results]
        lines.append("all suites passed" if self.passed else "some suites FAILED")
        return "\n".join(lines) + "\n"


def _tolerance(name: str, override: float | None) -> float:
    if override is not None:
        return override
    env = os.environ.get("SOFTNUM_TOLERANCE")
    if env:
        return float(env)
    return DEFAULT_TOLERANCES[name]


def check_reciprocal_involution(
    rng: np.random.Generator, cases: int = 2000, tolerance: float | None = None
) -> SuiteResult:
    """reciprocal(reciprocal(x)) == x on (0, 1], and 1/x is decreasing there."""
    tol = _tolerance("reciprocal-involution", tolerance)
    xs = np.sort(rng.uniform(1e-6, 1.0, cases))
    max_err = 0.0
    ok = True
    prev = math.inf
    for x in xs:
        x = float(x)
        r = geometry.reciprocal(x)
        if r < 1.0:
            ok = False  # must land in [1, inf) for x in (0, 1]
        if r > prev:
            ok = False  # must decrease as x grows
        prev = r
        err = abs(geometry.reciprocal(r) - x) / abs(x)
        max_err = max(max_err, err)
    return SuiteResult("reciprocal-involution", ok and max_err <= tol, cases, max_err, tol)


def check_reciprocal_lines(
    rng: np.random.Generator, cases: int = 1000, tolerance: float | None = None
) -> SuiteResult:
    """Every pair of reciprocal lines meets at the absolute zero (-1, -1)."""
    tol = _tolerance("reciprocal-line-intersection", tolerance)
    max_err = 0.0
    done = 0
    while done < cases:
        x1, x2 = _sample_line_inputs(rng)
        px, py = geometry.reciprocal_line_intersection(x1, x2)
        err = max(abs(px + 1.0), abs(py + 1.0))
        max_err = max(max_err, err)
        done += 1
    return SuiteResult(
        "reciprocal-line-intersection", max_err <= tol, cases, max_err, tol
    )


def _sample_line_inputs(rng: np.random.Generator) -> tuple[float, float]:
    while True:
        pair = []
        for _ in range(2):
            if rng.random() < 0.5:
                pair.append(float(rng.uniform(0.01, 0.99)))
            else:
                pair.append(float(rng.uniform(1.01, 50.0)))
        if pair[0] != pair[1]:
            return pair[0], pair[1]


def check_round_trip(
    rng: np.random.Generator, cases: int = 10_000, tolerance: float | None = None
) -> SuiteResult:
    """Strip -> plane -> strip is the identity, and |x|+|y| equals |A|."""
    tol = _tolerance("strip-plane-round-trip", tolerance)
    max_err = 0.0
    for _ in range(cases):
        height = float(rng.uniform(-100.0, 100.0))
        if height == 0.0:
            height = 1.0
        width = float(rng.uniform(-0.9999, 0.9999))
        p = geometry.StripPoint(height, width)
        q = geometry.ab_to_xy(p)
        back = geometry.xy_to_ab(q)
        scale = max(1.0, abs(height))
        err = max(
            abs(back.height - height) / scale,
            abs(back.width - width),
            abs(abs(q.x) + abs(q.y) - abs(height)) / scale,
        )
        max_err = max(max_err, err)
    return SuiteResult("strip-plane-round-trip", max_err <= tol, cases, max_err, tol)


def check_seam_gluing(
    radius: float = 10.0,
    grid: int = 1001,
    tolerance: float | None = None,
    perturb: float = 0.0,
) -> SuiteResult:
    """mobius_point(pi, B) coincides with mobius_point(-pi, -B) across B.

    A nonzero ``perturb`` offsets the far seam angle and must break the suite
    (negative control for the check pipeline itself).
    """
    tol = _tolerance("seam-gluing", tolerance)
    max_err = 0.0
    widths = np.linspace(-1.0, 1.0, grid)
    far_phi = -math.pi + perturb
    for width in widths:
        width = float(width)
        ax, ay, az = geometry.mobius_point(math.pi, width, radius)
        bx, by, bz = geometry.mobius_point(far_phi, -width, radius)
        err = math.dist((ax, ay, az), (bx, by, bz))
        max_err = max(max_err, err)
    return SuiteResult("seam-gluing", max_err <= tol, grid, max_err, tol)


def run_all(
    seed: int = 0,
    perturb: float = 0.0,
    tolerance: float | None = None,
    radius: float = 10.0,
) -> CheckReport:
    rng = np.random.default_rng(seed)
    report = CheckReport()
    report.results.append(check_reciprocal_involution(rng, tolerance=tolerance))
    report.results.append(check_reciprocal_lines(rng, tolerance=tolerance))
    report.results.append(check_round_trip(rng, tolerance=tolerance))
    report.results.append(
        check_seam_gluing(radius=radius, tolerance=tolerance, perturb=perturb)
    )
    return report
