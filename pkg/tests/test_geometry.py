"""Strip/plane transforms, reciprocal-line lemmas, Moebius embedding, mesh."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from softnum.geometry import (
    PlanePoint,
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


class TestStripToPlane:
    def test_worked_point(self):
        # height 5 at width 0.5 splits evenly between the two axes
        assert ab_to_xy(StripPoint(5.0, 0.5)) == PlanePoint(2.5, 2.5)

    def test_zero_axis(self):
        assert ab_to_xy(StripPoint(7.0, 0.0)) == PlanePoint(7.0, 0.0)

    def test_boundary_is_pure_real(self):
        assert ab_to_xy(StripPoint(3.0, 1.0)) == PlanePoint(0.0, 3.0)

    def test_width_out_of_range(self):
        with pytest.raises(ValueError):
            ab_to_xy(StripPoint(1.0, 1.5))

    @given(st.floats(-1e6, 1e6), st.floats(-1.0, 1.0))
    def test_norm_identity(self, height, width):
        q = ab_to_xy(StripPoint(height, width))
        assert abs(q.x) + abs(q.y) == pytest.approx(abs(height), rel=1e-12, abs=1e-300)


class TestPlaneToStrip:
    def test_worked_point(self):
        assert xy_to_ab(PlanePoint(2.5, 2.5)) == StripPoint(5.0, 0.5)

    def test_pure_real_positive(self):
        assert xy_to_ab(PlanePoint(0.0, 3.0)) == StripPoint(3.0, 1.0)

    def test_pure_real_negative(self):
        # canonical representative sits on the left boundary at positive height
        assert xy_to_ab(PlanePoint(0.0, -3.0)) == StripPoint(3.0, -1.0)

    def test_origin(self):
        assert xy_to_ab(PlanePoint(0.0, 0.0)) == StripPoint(0.0, 0.0)

    def test_degenerate_representatives_round_trip(self):
        for q in (PlanePoint(0.0, 3.0), PlanePoint(0.0, -3.0), PlanePoint(0.0, 0.0)):
            assert ab_to_xy(xy_to_ab(q)) == q

    @given(
        st.floats(-1e3, 1e3).filter(lambda a: abs(a) > 1e-9),
        st.floats(-0.999999, 0.999999),
    )
    def test_round_trip(self, height, width):
        p = StripPoint(height, width)
        back = xy_to_ab(ab_to_xy(p))
        assert back.height == pytest.approx(height, rel=1e-12)
        assert back.width == pytest.approx(width, rel=1e-12, abs=1e-12)


class TestReciprocal:
    def test_half(self):
        assert reciprocal(0.5) == 2.0

    def test_fixed_point(self):
        assert reciprocal(1.0) == 1.0

    def test_quarter(self):
        assert reciprocal(0.25) == 4.0

    def test_zero_rejected(self):
        with pytest.raises(ZeroDivisionError):
            reciprocal(0.0)

    @given(st.floats(1e-300, 1.0))
    def test_involution_on_unit_interval(self, x):
        assert reciprocal(x) >= 1.0
        assert reciprocal(reciprocal(x)) == pytest.approx(x, rel=1e-15)


class TestReciprocalLines:
    def _solve_oracle(self, x1, x2):
        # independent 2x2 solve: each line is y = X/x - (x-1)/x
        a = np.array([[-1.0 / x1, 1.0], [-1.0 / x2, 1.0]])
        b = np.array([-(x1 - 1.0) / x1, -(x2 - 1.0) / x2])
        return np.linalg.solve(a, b)

    @pytest.mark.parametrize("x1,x2", [(0.5, 0.25), (1 / 3, 0.75), (0.9, 42.0), (2.0, 3.0)])
    def test_meets_at_absolute_zero(self, x1, x2):
        px, py = reciprocal_line_intersection(x1, x2)
        ox, oy = self._solve_oracle(x1, x2)
        assert (px, py) == pytest.approx((ox, oy), abs=1e-9)
        assert (px, py) == pytest.approx((-1.0, -1.0), abs=1e-9)

    def test_coincident_inputs_rejected(self):
        with pytest.raises(ValueError):
            reciprocal_line_intersection(0.5, 0.5)

    def test_unit_input_rejected(self):
        with pytest.raises(ValueError):
            reciprocal_line_intersection(1.0, 0.5)

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError):
            reciprocal_line_intersection(-0.5, 0.5)


class TestArcLength:
    def test_endpoint(self):
        assert phi_from_a(math.pi * 7.0, 7.0) == pytest.approx(math.pi, rel=1e-15)

    def test_zero(self):
        assert phi_from_a(0.0, 10.0) == 0.0

    def test_simple_division(self):
        assert phi_from_a(5.0, 10.0) == 0.5
        assert a_from_phi(0.5, 10.0) == 5.0

    @given(st.floats(-math.pi, math.pi), st.floats(1.5, 100.0))
    def test_mutually_inverse(self, phi, radius):
        assert phi_from_a(a_from_phi(phi, radius), radius) == pytest.approx(
            phi, rel=1e-12, abs=1e-15
        )

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            phi_from_a(4.0 * math.pi, 1.1)
        with pytest.raises(ValueError):
            a_from_phi(3.5, 10.0)

    def test_radius_must_exceed_one(self):
        with pytest.raises(ValueError):
            phi_from_a(0.0, 1.0)


class TestMobiusPoint:
    def test_at_angle_zero(self):
        assert mobius_point(0.0, 0.0, 10.0) == (10.0, 0.0, 0.0)

    def test_at_half_turn(self):
        x, y, z = mobius_point(math.pi, 0.75, 10.0)
        assert x == pytest.approx(-10.0, abs=1e-12)
        assert y == pytest.approx(0.0, abs=1e-12)
        assert z == pytest.approx(0.75, abs=1e-12)

    def test_seam_identification(self):
        for width in np.linspace(-1, 1, 11):
            a = mobius_point(math.pi, float(width), 10.0)
            b = mobius_point(-math.pi, -float(width), 10.0)
            assert math.dist(a, b) < 1e-12

    def test_domain_checks(self):
        with pytest.raises(ValueError):
            mobius_point(4.0, 0.0, 10.0)
        with pytest.raises(ValueError):
            mobius_point(0.0, 2.0, 10.0)
        with pytest.raises(ValueError):
            mobius_point(0.0, 0.0, 0.5)


class TestColorCode:
    @pytest.mark.parametrize(
        "height,width,expected",
        [
            (-1.0, 0.5, 1.0),
            (2.0, 0.3, 0.7),
            (-2.0, -0.3, 0.5),
            (2.0, -0.3, 0.0),
            (0.0, 0.0, 0.0),
            (0.0, 1.0, 0.0),
            (1.0, 0.0, 0.0),
        ],
    )
    def test_classes(self, height, width, expected):
        assert color_code(height, width) == expected


class TestMesh:
    def test_figure_defaults_vertex_count(self):
        mesh = generate_mesh(Surface.MOBIUS, 10.0, (100, 100))
        assert mesh.vertex_count == 100 * 100
        assert mesh.phi[0, 0] == -math.pi
        assert mesh.phi[-1, 0] == math.pi

    def test_sns_corners(self):
        mesh = generate_mesh(Surface.SNS, 10.0, (3, 3))
        xs, ys, _ = mesh.positions()
        corners = {(xs[i, j], ys[i, j]) for i in (0, -1) for j in (0, -1)}
        expected = {(w, a) for w in (-1.0, 1.0) for a in (-10 * math.pi, 10 * math.pi)}
        assert {(round(x, 9), round(y, 9)) for x, y in corners} == {
            (round(x, 9), round(y, 9)) for x, y in expected
        }

    def test_cartesian_diamond_bound(self):
        mesh = generate_mesh(Surface.CARTESIAN, 7.0, (51, 37))
        xs, ys, _ = mesh.positions()
        assert np.max(np.abs(xs) + np.abs(ys)) <= math.pi * 7.0 + 1e-9

    def test_vectorized_matches_scalar_transforms(self):
        mesh = generate_mesh(Surface.MOBIUS, 5.0, (9, 7))
        for i in range(0, 9, 2):
            for j in range(0, 7, 3):
                phi = float(mesh.phi[i, j])
                width = float(mesh.width[i, j])
                height = float(mesh.height[i, j])
                assert height == a_from_phi(phi, 5.0)
                q = ab_to_xy(StripPoint(height, width))
                assert (mesh.plane_x[i, j], mesh.plane_y[i, j]) == (q.x, q.y)
                assert mobius_point(phi, width, 5.0) == (
                    mesh.mob_x[i, j],
                    mesh.mob_y[i, j],
                    mesh.mob_z[i, j],
                )
                assert mesh.color[i, j] == color_code(height, width)

    def test_tube_bound(self):
        mesh = generate_mesh(Surface.MOBIUS, 10.0, (101, 41))
        radial = np.sqrt(mesh.mob_x**2 + mesh.mob_y**2)
        assert np.max(np.abs(radial - 10.0)) <= 1.0 + 1e-12
        assert np.max(np.abs(mesh.mob_z)) <= 1.0 + 1e-12

    def test_color_quadrants_balance(self):
        mesh = generate_mesh(Surface.SNS, 10.0, (10, 10))
        flat = mesh.color.ravel()
        assert np.sum(flat == 1.0) == 25
        assert np.sum(flat == 0.7) == 25
        assert np.sum(flat == 0.5) == 25
        assert np.sum(flat == 0.0) == 25

    def test_odd_resolution_axes_get_zero_class(self):
        mesh = generate_mesh(Surface.SNS, 10.0, (5, 5))
        # middle row (height 0) and column (width 0) fall in the default class
        assert np.all(mesh.color[2, :] == 0.0)
        assert np.all(mesh.color[:, 2] == 0.0)

    def test_resolution_validation(self):
        with pytest.raises(ValueError):
            generate_mesh(Surface.SNS, 10.0, (1, 5))
        with pytest.raises(ValueError):
            generate_mesh(Surface.SNS, 0.9, (5, 5))

    def test_deterministic(self):
        a = generate_mesh(Surface.MOBIUS, 10.0, (20, 20))
        b = generate_mesh(Surface.MOBIUS, 10.0, (20, 20))
        assert np.array_equal(a.mob_x, b.mob_x)
        assert np.array_equal(a.color, b.color)

    def test_vertex_accessor(self):
        mesh = generate_mesh(Surface.MOBIUS, 10.0, (5, 5))
        v = mesh.vertex(1, 3)
        assert v == (mesh.mob_x[1, 3], mesh.mob_y[1, 3], mesh.mob_z[1, 3], mesh.color[1, 3])
        assert math.hypot(v.x, v.y) == pytest.approx(10.0, abs=1.0 + 1e-12)
        assert abs(v.z) <= 1.0
