"""Continuous distributions as CDF/PDF pairs, and the soft-probability
operator that keeps the point-event density as an infinitesimal part.

``ps_leq(d, x)`` returns the soft number ``pdf(x)*z0 + cdf(x)``: the classical
probability in the real part, the density of the equality event in the soft
part.
"""

from __future__ import annotations

import math
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np

from .core import SoftNumber

_SQRT2 = math.sqrt(2.0)
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


class Distribution(ABC):
    """A continuous distribution with closed-form CDF and PDF."""

    @abstractmethod
    def cdf(self, x: float) -> float: ...

    @abstractmethod
    def pdf(self, x: float) -> float: ...

    @abstractmethod
    def support(self) -> tuple[float, float]: ...

    def effective_support(self) -> tuple[float, float]:
        """Finite interval carrying all but a negligible (<1e-14) tail mass."""
        return self.support()

    @abstractmethod
    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray: ...


@dataclass(frozen=True)
class Uniform(Distribution):
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError("uniform bounds must be finite")
        if not self.hi > self.lo:
            raise ValueError(f"uniform requires hi > lo, got [{self.lo}, {self.hi}]")

    def cdf(self, x: float) -> float:
        if x <= self.lo:
            return 0.0
        if x >= self.hi:
            return 1.0
        return (x - self.lo) / (self.hi - self.lo)

    def pdf(self, x: float) -> float:
        if self.lo <= x <= self.hi:
            return 1.0 / (self.hi - self.lo)
        return 0.0

    def support(self) -> tuple[float, float]:
        return (self.lo, self.hi)

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        return rng.uniform(self.lo, self.hi, n)


@dataclass(frozen=True)
class Exponential(Distribution):
    rate: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.rate) and self.rate > 0.0):
            raise ValueError(f"exponential requires rate > 0, got {self.rate}")

    def cdf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        return -math.expm1(-self.rate * x)

    def pdf(self, x: float) -> float:
        if x < 0.0:
            return 0.0
        return self.rate * math.exp(-self.rate * x)

    def support(self) -> tuple[float, float]:
        return (0.0, math.inf)

    def effective_support(self) -> tuple[float, float]:
        return (0.0, 40.0 / self.rate)

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        return rng.exponential(1.0 / self.rate, n)


@dataclass(frozen=True)
class Normal(Distribution):
    mean: float
    stddev: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mean) and math.isfinite(self.stddev)):
            raise ValueError("normal parameters must be finite")
        if not self.stddev > 0.0:
            raise ValueError(f"normal requires stddev > 0, got {self.stddev}")

    def cdf(self, x: float) -> float:
        z = (x - self.mean) / (self.stddev * _SQRT2)
        return 0.5 * (1.0 + math.erf(z))

    def pdf(self, x: float) -> float:
        z = (x - self.mean) / self.stddev
        return math.exp(-0.5 * z * z) / (self.stddev * _SQRT_TWO_PI)

    def support(self) -> tuple[float, float]:
        return (-math.inf, math.inf)

    def effective_support(self) -> tuple[float, float]:
        return (self.mean - 8.0 * self.stddev, self.mean + 8.0 * self.stddev)

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        return rng.normal(self.mean, self.stddev, n)


_DIST_RE = re.compile(
    r"^\s*(uniform|exp|normal)\s*\(\s*([^,()\s]+)\s*(?:,\s*([^,()\s]+)\s*)?\)\s*$"
)


def parse_distribution(text: str) -> Distribution:
    """Parse ``uniform(lo,hi)``, ``exp(rate)`` or ``normal(mean,stddev)``."""
    m = _DIST_RE.match(text)
    if m is None:
        raise ValueError(f"unrecognized distribution literal: {text!r}")
    name, first, second = m.group(1), m.group(2), m.group(3)
    try:
        a = float(first)
        b = float(second) if second is not None else None
    except ValueError:
        raise ValueError(f"bad numeric parameter in {text!r}") from None
    if name == "uniform":
        if b is None:
            raise ValueError("uniform takes two parameters: uniform(lo,hi)")
        return Uniform(a, b)
    if name == "exp":
        if b is not None:
            raise ValueError("exp takes one parameter: exp(rate)")
        return Exponential(a)
    if b is None:
        raise ValueError("normal takes two parameters: normal(mean,stddev)")
    return Normal(a, b)


# -- soft probability ----------------------------------------------------------


@dataclass(frozen=True)
class SoftProbability:
    """A soft number whose real part is a probability and whose soft part is
    a density value."""

    value: SoftNumber

    def __post_init__(self) -> None:
        if not 0.0 <= self.value.real <= 1.0:
            raise ValueError(f"probability real part out of [0,1]: {self.value.real}")
        if self.value.soft < 0.0:
            raise ValueError(f"negative density in soft part: {self.value.soft}")

    @property
    def soft(self) -> float:
        return self.value.soft

    @property
    def real(self) -> float:
        return self.value.real

    def __str__(self) -> str:
        return str(self.value)


def ps_leq(d: Distribution, x: float) -> SoftProbability:
    """Soft probability of X <= x: density in the soft part, CDF in the real."""
    return SoftProbability(SoftNumber(d.pdf(x), d.cdf(x)))


def ps_eq(d: Distribution, x: float) -> SoftProbability:
    """Soft probability of X = x: a pure soft zero weighted by the density."""
    return SoftProbability(SoftNumber(d.pdf(x), 0.0))


def ps_lt(d: Distribution, x: float) -> SoftProbability:
    """Soft probability of X < x: the classical CDF, no soft part."""
    return SoftProbability(SoftNumber(0.0, d.cdf(x)))


def ps_interval(d: Distribution, a: float, b: float) -> SoftProbability:
    """Soft probability of a < X <= b."""
    if a > b:
        raise ValueError(f"inverted interval: ({a}, {b}]")
    return SoftProbability(SoftNumber(d.pdf(b), d.cdf(b) - d.cdf(a)))


# -- validation ----------------------------------------------------------------


@dataclass
class ValidationReport:
    """Outcome of the CDF/PDF consistency checks; passes iff all three hold."""

    derivative_ok: bool
    max_derivative_error: float
    max_error_at: float
    monotone_ok: bool
    limits_ok: bool
    lower_limit: float
    upper_limit: float
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.derivative_ok and self.monotone_ok and self.limits_ok


def central_difference(f, x: float, h: float) -> float:
    return (f(x + h) - f(x - h)) / (2.0 * h)


def validate_cdf_pdf(
    cdf,
    pdf,
    effective_support: tuple[float, float],
    grid_points: int = 1001,
    tolerance: float = 1e-6,
) -> ValidationReport:
    """Check that pdf is the derivative of cdf on a grid, that cdf is monotone,
    and that cdf reaches 0 and 1 at the effective-support endpoints.

    The derivative check skips the two endpoint grid nodes: densities may jump
    there (uniform, exponential) and a central stencil straddles the jump.
    """
    lo, hi = effective_support
    grid = np.linspace(lo, hi, grid_points)
    cdf_vals = np.array([cdf(float(x)) for x in grid])

    max_err = 0.0
    max_at = float(grid[1]) if grid_points > 2 else float(grid[0])
    derivative_ok = True
    for x in grid[1:-1]:
        x = float(x)
        h = 1e-6 * max(1.0, abs(x))
        err = abs(pdf(x) - central_difference(cdf, x, h))
        bound = tolerance * max(1.0, pdf(x))
        if err > max_err:
            max_err, max_at = err, x
        if err > bound:
            derivative_ok = False

    monotone_ok = bool(np.all(np.diff(cdf_vals) >= 0.0))
    lower, upper = float(cdf_vals[0]), float(cdf_vals[-1])
    limits_ok = abs(lower) <= 1e-9 and abs(1.0 - upper) <= 1e-9

    failures = []
    if not derivative_ok:
        failures.append(
            f"pdf/cdf-derivative mismatch, max error {max_err:.3e} at x={max_at!r}"
        )
    if not monotone_ok:
        failures.append("cdf not monotone on the grid")
    if not limits_ok:
        failures.append(f"cdf limits {lower!r}, {upper!r} not within 1e-9 of 0 and 1")

    return ValidationReport(
        derivative_ok=derivative_ok,
        max_derivative_error=max_err,
        max_error_at=max_at,
        monotone_ok=monotone_ok,
        limits_ok=limits_ok,
        lower_limit=lower,
        upper_limit=upper,
        failures=failures,
    )


def validate_distribution(d: Distribution, grid_points: int = 1001) -> ValidationReport:
    return validate_cdf_pdf(d.cdf, d.pdf, d.effective_support(), grid_points)
