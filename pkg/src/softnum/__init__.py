"""Soft numbers: nilpotent-infinitesimal arithmetic, soft probability, and
the soft-number strip with its Moebius embedding."""

from .core import (
    ANALYTIC_FUNCTIONS,
    BridgeNumber,
    BridgePair,
    BridgeSide,
    DomainError,
    PoleError,
    SoftNumber,
    add,
    compare,
    cos,
    div,
    eval_poly,
    exp,
    from_bridge_pair,
    from_real,
    lift_analytic,
    ln,
    mul,
    pow_nat,
    pow_real,
    recip,
    scalar_mul,
    sin,
    soft_zero,
    sqrt,
    sub,
    tan,
    to_bridge_pair,
)
from .geometry import (
    MobiusVertex,
    PlanePoint,
    StripMesh,
    StripPoint,
    Surface,
    ab_to_xy,
    a_from_phi,
    color_code,
    generate_mesh,
    mobius_point,
    phi_from_a,
    reciprocal,
    reciprocal_line_intersection,
    xy_to_ab,
)
from .prob import (
    Distribution,
    Exponential,
    Normal,
    SoftProbability,
    Uniform,
    parse_distribution,
    ps_eq,
    ps_interval,
    ps_leq,
    ps_lt,
    validate_distribution,
)
from .textform import SoftParseError, format_soft_number, parse_soft_number

__version__ = "0.1.0"

__all__ = [
    "ANALYTIC_FUNCTIONS",
    "BridgeNumber",
    "BridgePair",
    "BridgeSide",
    "Distribution",
    "DomainError",
    "Exponential",
    "MobiusVertex",
    "Normal",
    "PlanePoint",
    "PoleError",
    "SoftNumber",
    "SoftParseError",
    "SoftProbability",
    "StripMesh",
    "StripPoint",
    "Surface",
    "Uniform",
    "a_from_phi",
    "ab_to_xy",
    "add",
    "color_code",
    "compare",
    "cos",
    "div",
    "eval_poly",
    "exp",
    "format_soft_number",
    "from_bridge_pair",
    "from_real",
    "generate_mesh",
    "lift_analytic",
    "ln",
    "mobius_point",
    "mul",
    "parse_distribution",
    "parse_soft_number",
    "phi_from_a",
    "pow_nat",
    "pow_real",
    "ps_eq",
    "ps_interval",
    "ps_leq",
    "ps_lt",
    "recip",
    "reciprocal",
    "reciprocal_line_intersection",
    "scalar_mul",
    "sin",
    "soft_zero",
    "sqrt",
    "sub",
    "tan",
    "to_bridge_pair",
    "validate_distribution",
    "xy_to_ab",
]
