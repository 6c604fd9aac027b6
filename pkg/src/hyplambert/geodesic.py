"""Hyperbolic lines of the unit disk through two given points.

A hyperbolic line is carried either by a circle orthogonal to the unit
circle or, when the two points are collinear with the origin, by a
diameter.  The ideal endpoints are where the carrier meets the unit circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from hyplambert.errors import CoincidentPoints, DomainError
from hyplambert.points import DiskPoint, as_disk_point

COLLINEAR_TOL = 1e-12


@dataclass(frozen=True)
class OrthoCircle:
    """Circle S(center, radius) orthogonal to the unit circle."""

    center: tuple[float, float]
    radius: float

    def __post_init__(self):
        if not self.radius > 0.0:
            raise DomainError(f"radius must be positive, got {self.radius}")

    def orthogonality_residual(self) -> float:
        """|center|^2 - 1 - radius^2; zero for an orthogonal circle."""
        cx, cy = self.center
        return (cx * cx + cy * cy - 1.0) - self.radius * self.radius

    def membership_residual(self, p) -> float:
        px, py = p
        return math.hypot(px - self.center[0], py - self.center[1]) - self.radius


@dataclass(frozen=True)
class Diameter:
    """Euclidean line through the origin with unit direction vector."""

    direction: tuple[float, float]

    def membership_residual(self, p) -> float:
        # signed distance of p from the line
        px, py = p
        ux, uy = self.direction
        return px * uy - py * ux


GeodesicCarrier = Union[OrthoCircle, Diameter]


def exact_cross(x, y) -> float:
    """x1*y2 - x2*y1, correctly rounded (exact rational evaluation)."""
    x1, x2 = x
    y1, y2 = y
    return float(Fraction(x1) * Fraction(y2) - Fraction(x2) * Fraction(y1))


def _unit(vx: float, vy: float) -> tuple[float, float]:
    n = math.hypot(vx, vy)
    return vx / n, vy / n


def carrier_through(x, y) -> GeodesicCarrier:
    """Carrier of the hyperbolic line through disk points `x` and `y`.

    Returns an :class:`OrthoCircle` when 0, x, y are noncollinear and a
    :class:`Diameter` otherwise (including when either point is the origin).

    Raises
    ------
    CoincidentPoints
        If ``x == y``.
    """
    x, y = as_disk_point(x), as_disk_point(y)
    if x == y:
        raise CoincidentPoints(f"carrier through a single point {x}")
    cross = exact_cross(x, y)
    nx, ny = x.norm, y.norm
    if abs(cross) <= COLLINEAR_TOL * max(nx, ny):
        # direction of the longer vector (ties broken by coordinates so the
        # choice does not depend on argument order), oriented from x towards y
        _, px, py = max((nx, x.x1, x.x2), (ny, y.x1, y.x2))
        ux, uy = _unit(px, py)
        if (y.x1 - x.x1) * ux + (y.x2 - x.x2) * uy < 0.0:
            ux, uy = -ux, -uy
        return Diameter((ux, uy))

    nx2 = x.x1 * x.x1 + x.x2 * x.x2
    ny2 = y.x1 * y.x1 + y.x2 * y.x2
    den = -2.0 * cross  # 2 (x2 y1 - x1 y2)
    wx = (y.x1 * (1.0 + nx2) - x.x1 * (1.0 + ny2)) / den
    wy = (y.x2 * (1.0 + nx2) - x.x2 * (1.0 + ny2)) / den
    # multiplication by i: quarter turn counterclockwise
    ax, ay = -wy, wx
    # averaging keeps the carrier bitwise symmetric in (x, y)
    radius = 0.5 * (math.hypot(x.x1 - ax, x.x2 - ay) + math.hypot(y.x1 - ax, y.x2 - ay))
    return OrthoCircle((ax, ay), radius)


def radius_by_formula(x, y) -> float:
    """Closed-form radius |x-y| |x|y|^2 - y| / (2|y| |x1 y2 - x2 y1|)."""
    x, y = as_disk_point(x), as_disk_point(y)
    cross = exact_cross(x, y)
    if cross == 0.0:
        raise DomainError("0, x, y are collinear; no finite circle")
    ny = y.norm
    ny2 = ny * ny
    dxy = math.hypot(x.x1 - y.x1, x.x2 - y.x2)
    w = math.hypot(x.x1 * ny2 - y.x1, x.x2 * ny2 - y.x2)
    return dxy * w / (2.0 * ny * abs(cross))


def ideal_endpoints(c: GeodesicCarrier) -> tuple[tuple[float, float], tuple[float, float]]:
    """The two points where the carrier meets the unit circle.

    For a diameter these are ``(-direction, +direction)``.  For a circle they
    are symmetric about the line through the origin and the center, returned
    clockwise-then-counterclockwise as seen from the origin.
    """
    if isinstance(c, Diameter):
        ux, uy = c.direction
        return (-ux, -uy), (ux, uy)
    ax, ay = c.center
    a2 = ax * ax + ay * ay
    # the chord of intersection lies on the polar line <z, a> = 1
    fx, fy = ax / a2, ay / a2
    h = c.radius / a2
    return (fx + h * ay, fy - h * ax), (fx - h * ay, fy + h * ax)
