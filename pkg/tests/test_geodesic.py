import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hyplambert.errors import CoincidentPoints, DomainError
from hyplambert.geodesic import (
    Diameter,
    OrthoCircle,
    carrier_through,
    exact_cross,
    ideal_endpoints,
    radius_by_formula,
)


@st.composite
def disk_points(draw, max_norm=0.95):
    rad = draw(st.floats(0.01, max_norm))
    ang = draw(st.floats(0.0, 2 * math.pi))
    return (rad * math.cos(ang), rad * math.sin(ang))


def scaled_orthogonality(c):
    a2 = c.center[0] ** 2 + c.center[1] ** 2
    return abs(c.orthogonality_residual()) / max(1.0, a2)


def test_known_circle():
    # through (0.5, 0) and (0, 0.5): center (1.25, 1.25), radius^2 = 2 * 1.25^2 - 1
    c = carrier_through((0.5, 0.0), (0.0, 0.5))
    assert isinstance(c, OrthoCircle)
    assert c.center == pytest.approx((1.25, 1.25), abs=1e-15)
    assert c.radius == pytest.approx(math.sqrt(2 * 1.25**2 - 1), abs=1e-15)


def test_origin_gives_diameter():
    c = carrier_through((0.0, 0.0), (0.3, 0.4))
    assert isinstance(c, Diameter)
    assert c.direction == pytest.approx((0.6, 0.8), abs=1e-15)
    assert ideal_endpoints(c) == ((-0.6, -0.8), (0.6, 0.8))


def test_collinear_pair_gives_diameter():
    assert isinstance(carrier_through((-0.2, -0.2), (0.5, 0.5)), Diameter)
    assert isinstance(carrier_through((0.1, 0.0), (0.7, 0.0)), Diameter)


def test_diameter_orientation_follows_x_to_y():
    c = carrier_through((0.5, 0.0), (-0.2, 0.0))
    assert c.direction == (-1.0, 0.0)


def test_coincident():
    with pytest.raises(CoincidentPoints):
        carrier_through((0.2, 0.2), (0.2, 0.2))


def test_outside_disk():
    with pytest.raises(DomainError):
        carrier_through((1.2, 0.0), (0.0, 0.1))


def test_radius_formula_rejects_collinear():
    with pytest.raises(DomainError):
        radius_by_formula((0.1, 0.1), (0.3, 0.3))


def test_exact_cross_is_correctly_rounded():
    x, y = (0.1, 0.2), (0.2, 0.4000000000000001)
    assert exact_cross(x, y) == pytest.approx(0.1 * 1e-16, rel=0.2)
    assert exact_cross((0.1, 0.2), (0.2, 0.4)) == 0.0


def test_circle_endpoints_on_unit_circle():
    c = carrier_through((0.5, 0.0), (0.0, 0.5))
    for e in ideal_endpoints(c):
        assert math.hypot(*e) == pytest.approx(1.0, abs=1e-15)
        assert c.membership_residual(e) == pytest.approx(0.0, abs=1e-14)


@settings(max_examples=400)
@given(disk_points(), disk_points())
def test_orthogonal_and_passes_through(x, y):
    assume(x != y)
    c = carrier_through(x, y)
    if isinstance(c, Diameter):
        assert abs(c.membership_residual(x)) < 1e-12
        assert abs(c.membership_residual(y)) < 1e-12
        return
    assert scaled_orthogonality(c) < 1e-10
    assert abs(c.membership_residual(x)) < 1e-10 * max(1.0, c.radius)
    assert abs(c.membership_residual(y)) < 1e-10 * max(1.0, c.radius)


@settings(max_examples=300)
@given(disk_points(), disk_points())
def test_radius_formula_agrees(x, y):
    assume(x != y)
    c = carrier_through(x, y)
    assume(isinstance(c, OrthoCircle))
    assert radius_by_formula(x, y) == pytest.approx(c.radius, rel=1e-9)


@given(disk_points(), disk_points())
def test_carrier_symmetric(x, y):
    assume(x != y)
    a, b = carrier_through(x, y), carrier_through(y, x)
    if isinstance(a, OrthoCircle):
        assert a == b
    else:
        assert a.direction == tuple(-u for u in b.direction)


@given(disk_points(), disk_points())
def test_endpoints_unit_norm(x, y):
    assume(x != y)
    for e in ideal_endpoints(carrier_through(x, y)):
        assert math.hypot(*e) == pytest.approx(1.0, abs=1e-9)
