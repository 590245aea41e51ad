"""Soft numbers: a commutative algebra over the reals with a nilpotent
infinitesimal unit.

A soft number is ``a*z0 + b`` where ``z0`` is a formal zero-axis unit with
``z0*z0 == 0`` and ``b`` is the ordinary real part.  Multiplication therefore
carries derivatives: lifting an analytic function f through a soft number
``a*z0 + x`` yields ``a*f'(x)*z0 + f(x)``, i.e. forward-mode differentiation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from numbers import Real
from typing import Callable, Sequence


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation too close to a pole of the lifted function."""


# Reject tan() evaluation when the real part is closer than this to an odd
# multiple of pi/2.
TAN_POLE_TOLERANCE = 1e-8


def _require_finite(value: float, what: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{what} must be finite, got {value!r}")
    return value


def _finite_result(soft: float, real: float) -> "SoftNumber":
    if not (math.isfinite(soft) and math.isfinite(real)):
        raise OverflowError(
            f"soft-number arithmetic overflowed to a non-finite value "
            f"({soft!r}, {real!r})"
        )
    return SoftNumber(soft, real)


@dataclass(frozen=True)
class SoftNumber:
    """The pair (soft, real): coefficient of z0 and of the real unit.

    Components are always finite; equality is exact and componentwise.
    Ordering is lexicographic with the real part dominant, which restricted
    to pure soft zeros reduces to ordering by the soft coefficient.
    """

    soft: float
    real: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "soft", _require_finite(self.soft, "soft part"))
        object.__setattr__(self, "real", _require_finite(self.real, "real part"))

    # -- algebra ------------------------------------------------------------

    def __add__(self, other: "SoftNumber | Real") -> "SoftNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _finite_result(self.soft + other.soft, self.real + other.real)

    __radd__ = __add__

    def __sub__(self, other: "SoftNumber | Real") -> "SoftNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _finite_result(self.soft - other.soft, self.real - other.real)

    def __rsub__(self, other: "SoftNumber | Real") -> "SoftNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: "SoftNumber | Real") -> "SoftNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (a z0 + b)(c z0 + d) = (ad + bc) z0 + bd, using z0*z0 = 0.
        return _finite_result(
            self.soft * other.real + self.real * other.soft,
            self.real * other.real,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "SoftNumber | Real") -> "SoftNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return div(self, other)

    def __rtruediv__(self, other: "SoftNumber | Real") -> "SoftNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return div(other, self)

    def __pow__(self, n: int) -> "SoftNumber":
        if not isinstance(n, int) or isinstance(n, bool):
            return NotImplemented
        return pow_nat(self, n)

    def __neg__(self) -> "SoftNumber":
        return SoftNumber(-self.soft, -self.real)

    def __pos__(self) -> "SoftNumber":
        return self

    # -- order (real part dominant, then soft part) -------------------------

    def _key(self) -> tuple[float, float]:
        return (self.real, self.soft)

    def __lt__(self, other: "SoftNumber") -> bool:
        if not isinstance(other, SoftNumber):
            return NotImplemented
        return self._key() < other._key()

    def __le__(self, other: "SoftNumber") -> bool:
        if not isinstance(other, SoftNumber):
            return NotImplemented
        return self._key() <= other._key()

    def __gt__(self, other: "SoftNumber") -> bool:
        if not isinstance(other, SoftNumber):
            return NotImplemented
        return self._key() > other._key()

    def __ge__(self, other: "SoftNumber") -> bool:
        if not isinstance(other, SoftNumber):
            return NotImplemented
        return self._key() >= other._key()

    # -- misc ---------------------------------------------------------------

    @property
    def is_soft_zero(self) -> bool:
        """True for pure multiples of z0 (zero real part)."""
        return self.real == 0.0

    def __str__(self) -> str:
        from .textform import format_soft_number

        return format_soft_number(self)


ZERO = SoftNumber(0.0, 0.0)
ONE = SoftNumber(0.0, 1.0)


def _coerce(value: object) -> SoftNumber:
    if isinstance(value, SoftNumber):
        return value
    if isinstance(value, Real):
        return SoftNumber(0.0, float(value))
    return NotImplemented


def soft_zero(coeff: float) -> SoftNumber:
    """The pure soft zero ``coeff*z0``."""
    return SoftNumber(coeff, 0.0)


def from_real(value: float) -> SoftNumber:
    """Embed a real number as ``0*z0 + value``."""
    return SoftNumber(0.0, value)


# -- bridge representations --------------------------------------------------


class BridgeSide(Enum):
    """Which axis comes first in the ordered bridge pairing."""

    LEFT = "left"    # zero-axis first:  a*z0 | b
    RIGHT = "right"  # real-axis first:  b | a*z0


@dataclass(frozen=True)
class BridgeNumber:
    """One ordered pairing of a zero-axis value with a real value.

    The pairing does not commute: LEFT(a, b) and RIGHT(a, b) are distinct
    values even though they carry the same components.
    """

    side: BridgeSide
    soft: float
    real: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "soft", _require_finite(self.soft, "soft part"))
        object.__setattr__(self, "real", _require_finite(self.real, "real part"))


@dataclass(frozen=True)
class BridgePair:
    """Both ordered bridge representations of one soft number."""

    left: BridgeNumber
    right: BridgeNumber

    def __post_init__(self) -> None:
        if self.left.side is not BridgeSide.LEFT:
            raise ValueError("left member must be a LEFT-type bridge number")
        if self.right.side is not BridgeSide.RIGHT:
            raise ValueError("right member must be a RIGHT-type bridge number")
        if (self.left.soft, self.left.real) != (self.right.soft, self.right.real):
            raise ValueError(
                "bridge pair members carry different components: "
                f"({self.left.soft}, {self.left.real}) vs "
                f"({self.right.soft}, {self.right.real})"
            )


def to_bridge_pair(p: SoftNumber) -> BridgePair:
    """Package a soft number as its two ordered bridge representations."""
    return BridgePair(
        left=BridgeNumber(BridgeSide.LEFT, p.soft, p.real),
        right=BridgeNumber(BridgeSide.RIGHT, p.soft, p.real),
    )


def from_bridge_pair(pair: BridgePair) -> SoftNumber:
    """Reconstruct the soft number from a bridge pair (inverse of to_bridge_pair)."""
    return SoftNumber(pair.left.soft, pair.left.real)


# -- named operations ---------------------------------------------------------


def add(p: SoftNumber, q: SoftNumber) -> SoftNumber:
    return p + q


def sub(p: SoftNumber, q: SoftNumber) -> SoftNumber:
    return p - q


def mul(p: SoftNumber, q: SoftNumber) -> SoftNumber:
    return p * q


def scalar_mul(k: float, p: SoftNumber) -> SoftNumber:
    """Scale both components by the real number k."""
    k = _require_finite(k, "scalar")
    return _finite_result(k * p.soft, k * p.real)


def div(p: SoftNumber, q: SoftNumber) -> SoftNumber:
    """Division; requires a strictly nonzero real part in the divisor.

    Pure soft zeros are zero divisors, so they are not invertible.
    """
    if q.real == 0.0:
        raise ZeroDivisionError("division by a soft number with zero real part")
    real = p.real / q.real
    soft = (p.soft * q.real - p.real * q.soft) / (q.real * q.real)
    return _finite_result(soft, real)


def pow_nat(p: SoftNumber, n: int) -> SoftNumber:
    """Natural power, closed form: (a z0 + b)^n = n a b^(n-1) z0 + b^n.

    n = 0 returns the multiplicative identity (empty product).
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"exponent must be an integer, got {type(n).__name__}")
    if n < 0:
        raise DomainError("natural power requires exponent >= 0")
    if n == 0:
        return ONE
    try:
        real = p.real ** n
        soft = n * p.soft * p.real ** (n - 1)
    except OverflowError:
        raise OverflowError("soft-number power overflowed") from None
    return _finite_result(soft, real)


def compare(p: SoftNumber, q: SoftNumber) -> int:
    """-1, 0 or +1 with the real part dominant, then the soft part."""
    if p._key() < q._key():
        return -1
    if p._key() > q._key():
        return 1
    return 0


def eval_poly(coeffs: Sequence[float], p: SoftNumber) -> SoftNumber:
    """Evaluate the polynomial sum(coeffs[k] * t^k) at a soft number.

    Horner evaluation of the value and the formal derivative on the real
    part; the soft part comes out as soft * P'(real).
    """
    if len(coeffs) == 0:
        raise ValueError("coefficient list must be non-empty")
    cs = [_require_finite(c, "coefficient") for c in coeffs]
    x = p.real
    value = cs[-1]
    deriv = 0.0
    for c in reversed(cs[:-1]):
        deriv = deriv * x + value
        value = value * x + c
    return _finite_result(p.soft * deriv, value)


# -- analytic lifting ---------------------------------------------------------


def _lift(p: SoftNumber, value: float, slope: float) -> SoftNumber:
    return _finite_result(p.soft * slope, value)


def exp(p: SoftNumber) -> SoftNumber:
    try:
        v = math.exp(p.real)
    except OverflowError:
        raise OverflowError("exp overflowed") from None
    return _lift(p, v, v)


def ln(p: SoftNumber) -> SoftNumber:
    if p.real <= 0.0:
        raise DomainError(f"ln requires real part > 0, got {p.real}")
    return _lift(p, math.log(p.real), 1.0 / p.real)


def sin(p: SoftNumber) -> SoftNumber:
    return _lift(p, math.sin(p.real), math.cos(p.real))


def cos(p: SoftNumber) -> SoftNumber:
    return _lift(p, math.cos(p.real), -math.sin(p.real))


def tan(p: SoftNumber) -> SoftNumber:
    # Poles at odd multiples of pi/2: remainder(x, pi) lands on +-pi/2 there.
    r = math.remainder(p.real, math.pi)
    if abs(abs(r) - math.pi / 2.0) < TAN_POLE_TOLERANCE:
        raise PoleError(f"tan evaluated within {TAN_POLE_TOLERANCE} of a pole")
    t = math.tan(p.real)
    return _lift(p, t, 1.0 + t * t)


def sqrt(p: SoftNumber) -> SoftNumber:
    if p.real <= 0.0:
        raise DomainError(f"sqrt requires real part > 0, got {p.real}")
    v = math.sqrt(p.real)
    return _lift(p, v, 0.5 / v)


def recip(p: SoftNumber) -> SoftNumber:
    if p.real <= 0.0:
        raise DomainError(f"recip requires real part > 0, got {p.real}")
    v = 1.0 / p.real
    return _lift(p, v, -v * v)


def pow_real(p: SoftNumber, exponent: float) -> SoftNumber:
    """Real power x^r lifted through the soft part; requires real part > 0."""
    exponent = _require_finite(exponent, "exponent")
    if p.real <= 0.0:
        raise DomainError(f"pow_real requires real part > 0, got {p.real}")
    return _lift(p, p.real ** exponent, exponent * p.real ** (exponent - 1.0))


#: Supported single-argument analytic functions, by name.
ANALYTIC_FUNCTIONS: dict[str, Callable[[SoftNumber], SoftNumber]] = {
    "exp": exp,
    "ln": ln,
    "sin": sin,
    "cos": cos,
    "tan": tan,
    "sqrt": sqrt,
    "recip": recip,
}


def lift_analytic(name: str, p: SoftNumber, exponent: float | None = None) -> SoftNumber:
    """Dispatch by function id; ``pow`` takes the extra real exponent."""
    if name == "pow":
        if exponent is None:
            raise ValueError("pow requires an exponent")
        return pow_real(p, exponent)
    try:
        fn = ANALYTIC_FUNCTIONS[name]
    except KeyError:
        raise ValueError(f"unsupported analytic function {name!r}") from None
    if exponent is not None:
        raise ValueError(f"{name} takes no exponent")
    return fn(p)
