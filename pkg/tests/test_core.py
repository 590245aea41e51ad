"""Algebra of soft numbers: arithmetic, ring laws, bridge pairs, ordering."""

import math
import random

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from softnum.core import (
    ONE,
    ZERO,
    BridgeNumber,
    BridgePair,
    BridgeSide,
    DomainError,
    SoftNumber,
    add,
    compare,
    div,
    eval_poly,
    from_bridge_pair,
    mul,
    pow_nat,
    scalar_mul,
    soft_zero,
    sub,
    to_bridge_pair,
)

finite = st.floats(allow_nan=False, allow_infinity=False, min_value=-1e3, max_value=1e3)
soft_numbers = st.builds(SoftNumber, finite, finite)


def close(p: SoftNumber, q: SoftNumber, tol: float = 1e-12) -> bool:
    scale = max(1.0, abs(p.soft), abs(p.real), abs(q.soft), abs(q.real))
    return abs(p.soft - q.soft) <= tol * scale and abs(p.real - q.real) <= tol * scale


def symbolic_mul(a, b, c, d):
    """Expansion oracle: multiply (a*eps + b)(c*eps + d) and drop eps**2."""
    eps = sympy.Symbol("eps")
    product = sympy.expand((a * eps + b) * (c * eps + d))
    return float(product.coeff(eps, 1)), float(product.coeff(eps, 0))


class TestConstruction:
    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            SoftNumber(math.nan, 0.0)

    def test_rejects_infinity(self):
        with pytest.raises(ValueError):
            SoftNumber(0.0, math.inf)

    def test_equality_is_componentwise(self):
        assert SoftNumber(2.0, 3.0) == SoftNumber(2.0, 3.0)
        assert SoftNumber(2.0, 3.0) != SoftNumber(2.0000001, 3.0)
        assert soft_zero(1.0) != soft_zero(2.0)

    def test_overflow_raises(self):
        big = SoftNumber(0.0, 1e308)
        with pytest.raises(OverflowError):
            big * big


class TestAddSub:
    def test_componentwise(self):
        assert SoftNumber(2, 3) + SoftNumber(4, 5) == SoftNumber(6, 8)

    def test_identity(self):
        p = SoftNumber(-1.5, 2.25)
        assert p + ZERO == p

    def test_self_inverse(self):
        p = SoftNumber(1, 1)
        assert p - p == ZERO

    def test_named_wrappers(self):
        assert add(SoftNumber(1, 2), SoftNumber(3, 4)) == SoftNumber(4, 6)
        assert sub(SoftNumber(1, 2), SoftNumber(3, 4)) == SoftNumber(-2, -2)


class TestMul:
    def test_worked_product(self):
        # (2 z0 + 3)(4 z0 + 5): expansion with z0^2 = 0 gives (2*5 + 3*4) z0 + 15.
        assert symbolic_mul(2, 3, 4, 5) == (22.0, 15.0)
        assert SoftNumber(2, 3) * SoftNumber(4, 5) == SoftNumber(22, 15)

    def test_multiplicative_identity(self):
        p = SoftNumber(-7.5, 0.125)
        assert p * ONE == p

    def test_soft_zeros_annihilate(self):
        product = soft_zero(3.0) * soft_zero(7.0)
        assert product.soft == 0.0 and product.real == 0.0

    def test_matches_symbolic_expansion_randomized(self):
        rng = random.Random(7)
        for _ in range(200):
            a, b, c, d = (rng.randint(-50, 50) for _ in range(4))
            soft, real = symbolic_mul(a, b, c, d)
            assert SoftNumber(a, b) * SoftNumber(c, d) == SoftNumber(soft, real)

    def test_scalar_embedding_agrees_with_scalar_mul(self):
        p = SoftNumber(3, 4)
        assert 2 * p == scalar_mul(2.0, p) == SoftNumber(6, 8)
        assert 0 * p == ZERO

    def test_scalar_mul_commutes_through_soft_zeros(self):
        assert scalar_mul(5.0, soft_zero(3.0)) == soft_zero(15.0)
        assert scalar_mul(5.0, soft_zero(3.0)) == scalar_mul(3.0, soft_zero(5.0))


class TestRingLaws:
    @given(soft_numbers, soft_numbers)
    def test_add_commutes_exactly(self, p, q):
        assert p + q == q + p

    @given(soft_numbers, soft_numbers)
    def test_mul_commutes_exactly(self, p, q):
        assert p * q == q * p

    @given(soft_numbers, soft_numbers, soft_numbers)
    def test_add_associates(self, p, q, r):
        assert close((p + q) + r, p + (q + r))

    @given(soft_numbers, soft_numbers, soft_numbers)
    def test_mul_associates(self, p, q, r):
        assert close((p * q) * r, p * (q * r))

    @given(soft_numbers, soft_numbers, soft_numbers)
    def test_distributive(self, p, q, r):
        assert close(p * (q + r), p * q + p * r)

    @given(finite, finite, soft_numbers)
    def test_nilpotency_is_exact(self, a, c, r):
        product = soft_zero(a) * soft_zero(c)
        assert product.soft == 0.0 and product.real == 0.0
        # Hence adding such a product changes nothing, exactly.
        assert product + r == r


class TestPowNat:
    def test_cube(self):
        # Repeated-multiplication oracle: p*p = (4,4), then *(1,2) = (12,8).
        p = SoftNumber(1, 2)
        assert p * p * p == SoftNumber(12, 8)
        assert pow_nat(p, 3) == SoftNumber(12, 8)

    def test_exponent_one(self):
        p = SoftNumber(-2.5, 17.0)
        assert pow_nat(p, 1) == p

    def test_exponent_zero_is_identity(self):
        assert pow_nat(SoftNumber(5, -3), 0) == ONE
        assert pow_nat(ZERO, 0) == ONE

    def test_square_of_pure_soft_zero_vanishes(self):
        p = soft_zero(5.0)
        assert pow_nat(p, 2) == ZERO
        assert p * p == ZERO

    @given(soft_numbers, st.integers(min_value=0, max_value=16))
    def test_matches_repeated_mul(self, p, n):
        repeated = ONE
        try:
            for _ in range(n):
                repeated = repeated * p
        except OverflowError:
            return
        assert close(pow_nat(p, n), repeated)

    def test_negative_exponent_rejected(self):
        with pytest.raises(DomainError):
            pow_nat(ONE, -1)


class TestDiv:
    def test_worked_quotient(self):
        q = div(SoftNumber(2, 6), SoftNumber(0, 2))
        assert q == SoftNumber(1, 3)
        assert q * SoftNumber(0, 2) == SoftNumber(2, 6)

    def test_self_division(self):
        p = SoftNumber(4.5, -2.0)
        assert div(p, p) == ONE

    def test_reciprocal_of_one_plus_soft(self):
        q = div(ONE, SoftNumber(1, 1))
        assert q == SoftNumber(-1, 1)
        assert q * SoftNumber(1, 1) == ONE

    @given(soft_numbers, soft_numbers)
    def test_mul_round_trip(self, p, q):
        # Tiny real parts make r.soft * q.real cancel catastrophically.
        assume(abs(q.real) >= 1e-2)
        r = div(p, q)
        assert close(r * q, p, tol=1e-9)

    def test_zero_real_part_rejected(self):
        with pytest.raises(ZeroDivisionError):
            div(ONE, soft_zero(3.0))


class TestCompare:
    def test_soft_zeros_ordered_by_coefficient(self):
        assert compare(soft_zero(1.0), soft_zero(2.0)) == -1
        assert soft_zero(1.0) < soft_zero(2.0)

    def test_real_part_dominates(self):
        assert compare(SoftNumber(5, 3), SoftNumber(1, 4)) == -1

    def test_reflexive(self):
        p = SoftNumber(2, 2)
        assert compare(p, p) == 0

    @given(st.lists(finite, min_size=2, max_size=20))
    def test_soft_zero_order_matches_real_order(self, coeffs):
        by_soft = sorted(soft_zero(c) for c in coeffs)
        assert [p.soft for p in by_soft] == sorted(coeffs)

    @given(soft_numbers, soft_numbers)
    def test_trichotomy(self, p, q):
        assert (compare(p, q) == 0) == (p == q)
        assert (compare(p, q) == -1) == (p < q)
        assert (compare(p, q) == 1) == (p > q)


class TestEvalPoly:
    def test_square_polynomial(self):
        # P(t) = t^2 at (1, 3): powNat oracle gives (2*1*3, 9).
        assert pow_nat(SoftNumber(1, 3), 2) == SoftNumber(6, 9)
        assert eval_poly([0.0, 0.0, 1.0], SoftNumber(1, 3)) == SoftNumber(6, 9)

    def test_constant_has_zero_derivative(self):
        assert eval_poly([4.25], SoftNumber(9, -2)) == SoftNumber(0, 4.25)

    def test_identity_polynomial(self):
        p = SoftNumber(-3, 7)
        assert eval_poly([0.0, 1.0], p) == p

    def test_empty_coefficients_rejected(self):
        with pytest.raises(ValueError):
            eval_poly([], ONE)

    @given(st.lists(st.floats(-10, 10), min_size=1, max_size=9),
           st.builds(SoftNumber, st.floats(-10, 10), st.floats(-10, 10)))
    def test_matches_power_composition(self, coeffs, p):
        direct = ZERO
        for k, c in enumerate(coeffs):
            direct = direct + scalar_mul(c, pow_nat(p, k))
        assert close(eval_poly(coeffs, p), direct)


class TestBridgePairs:
    def test_packaging(self):
        pair = to_bridge_pair(SoftNumber(2, 3))
        assert pair.left == BridgeNumber(BridgeSide.LEFT, 2, 3)
        assert pair.right == BridgeNumber(BridgeSide.RIGHT, 2, 3)

    def test_sides_never_compare_equal(self):
        assert BridgeNumber(BridgeSide.LEFT, 2, 3) != BridgeNumber(BridgeSide.RIGHT, 2, 3)

    @given(soft_numbers)
    def test_round_trip(self, p):
        assert from_bridge_pair(to_bridge_pair(p)) == p

    def test_mismatched_components_rejected(self):
        with pytest.raises(ValueError):
            BridgePair(
                left=BridgeNumber(BridgeSide.LEFT, 2, 3),
                right=BridgeNumber(BridgeSide.RIGHT, 2, 4),
            )

    def test_wrong_side_tags_rejected(self):
        with pytest.raises(ValueError):
            BridgePair(
                left=BridgeNumber(BridgeSide.RIGHT, 2, 3),
                right=BridgeNumber(BridgeSide.RIGHT, 2, 3),
            )
