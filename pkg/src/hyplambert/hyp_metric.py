"""Chordal metric, absolute ratio and hyperbolic distances.

The disk distance is available through three independent routes, which
serve as oracles for one another:

* :func:`rho_disk`, the closed form through ``arsh``;
* :func:`rho_by_endpoints`, the log of the absolute ratio built from the
  ideal endpoints of the geodesic;
* :func:`rho_by_integration`, quadrature of the density 2/(1-|z|^2) along
  the geodesic arc.
"""

from __future__ import annotations

import math

import numpy as np

from hyplambert.errors import CoincidentPoints, DegenerateQuadruple, DomainError
from hyplambert.geodesic import Diameter, carrier_through, ideal_endpoints
from hyplambert.points import INFINITY, DiskPoint, HalfPlanePoint, as_disk_point, as_pair

MIN_PANELS = 16


def _is_inf(p) -> bool:
    return p is INFINITY


def _same(p, q) -> bool:
    if _is_inf(p) or _is_inf(q):
        return _is_inf(p) and _is_inf(q)
    return as_pair(p) == as_pair(q)


def chordal_distance(x, y) -> float:
    """Chordal distance q(x, y) on the extended plane, in [0, 1].

    Either argument may be :data:`~hyplambert.points.INFINITY`.
    """
    if _is_inf(x) and _is_inf(y):
        return 0.0
    if _is_inf(x):
        x, y = y, x
    x1, x2 = as_pair(x)
    sx = math.sqrt(1.0 + x1 * x1 + x2 * x2)
    if _is_inf(y):
        return 1.0 / sx
    y1, y2 = as_pair(y)
    sy = math.sqrt(1.0 + y1 * y1 + y2 * y2)
    return math.hypot(x1 - y1, x2 - y2) / (sx * sy)


def _check_distinct(points) -> None:
    for i in range(4):
        for j in range(i + 1, 4):
            if _same(points[i], points[j]):
                raise DegenerateQuadruple(f"points {i} and {j} coincide: {points[i]!r}")


def absolute_ratio(a, b, c, d) -> float:
    """|a,b,c,d| = q(a,c) q(b,d) / (q(a,b) q(c,d)) for distinct extended points."""
    _check_distinct((a, b, c, d))
    q = chordal_distance
    return (q(a, c) * q(b, d)) / (q(a, b) * q(c, d))


def absolute_ratio_euclidean(a, b, c, d) -> float:
    """The same ratio from Euclidean distances; finite points only."""
    _check_distinct((a, b, c, d))
    a, b, c, d = (as_pair(p) for p in (a, b, c, d))

    def dist(u, v):
        return math.hypot(u[0] - v[0], u[1] - v[1])

    return (dist(a, c) * dist(b, d)) / (dist(a, b) * dist(c, d))


def rho_halfplane(x, y) -> float:
    """Hyperbolic distance in the upper half-plane.

    Evaluates arcosh(1 + |x-y|^2 / (2 x2 y2)) in the equivalent form
    2 arsh(|x-y| / (2 sqrt(x2 y2))), which keeps full relative accuracy for
    nearby points.
    """
    x = x if isinstance(x, HalfPlanePoint) else HalfPlanePoint(*x)
    y = y if isinstance(y, HalfPlanePoint) else HalfPlanePoint(*y)
    d = math.hypot(x.x1 - y.x1, x.x2 - y.x2)
    return 2.0 * math.asinh(d / (2.0 * math.sqrt(x.x2 * y.x2)))


def rho_disk(x, y) -> float:
    """Hyperbolic distance in the unit disk, 2 arsh(|x-y| / sqrt((1-|x|^2)(1-|y|^2)))."""
    x, y = as_disk_point(x), as_disk_point(y)
    d = math.hypot(x.x1 - y.x1, x.x2 - y.x2)
    return 2.0 * math.asinh(d / math.sqrt(x.one_minus_norm_sq() * y.one_minus_norm_sq()))


def _canonical(x: DiskPoint, y: DiskPoint) -> tuple[DiskPoint, DiskPoint]:
    # fixed argument order makes the routes below exactly symmetric
    return (x, y) if (x.x1, x.x2) <= (y.x1, y.x2) else (y, x)


def rho_by_endpoints(x, y) -> float:
    """Distance as log |x*, x, y, y*| from the ideal endpoints of the geodesic.

    The endpoints are labelled so that the ratio is at least 1.

    Raises
    ------
    CoincidentPoints
        If ``x == y``.
    """
    x, y = as_disk_point(x), as_disk_point(y)
    if x == y:
        raise CoincidentPoints(f"distance by endpoints needs distinct points, got {x} twice")
    x, y = _canonical(x, y)
    e1, e2 = ideal_endpoints(carrier_through(x, y))
    xp, yp = (x.x1, x.x2), (y.x1, y.x2)
    ratio = max(absolute_ratio(e1, xp, yp, e2), absolute_ratio(e2, xp, yp, e1))
    return math.log(ratio)


def _midpoint_sum(x: DiskPoint, y: DiskPoint, carrier, n: int) -> float:
    k = np.arange(n, dtype=float) + 0.5
    if isinstance(carrier, Diameter):
        u = k / n
        zx = x.x1 + u * (y.x1 - x.x1)
        zy = x.x2 + u * (y.x2 - x.x2)
        jac = math.hypot(y.x1 - x.x1, y.x2 - x.x2) / n
    else:
        ax, ay = carrier.center
        rad = carrier.radius
        tx = math.atan2(x.x2 - ay, x.x1 - ax)
        ty = math.atan2(y.x2 - ay, y.x1 - ax)
        # arc inside the disk subtends less than pi as seen from the center
        sweep = math.remainder(ty - tx, 2.0 * math.pi)
        step = sweep / n
        ang = tx + k * step
        zx = ax + rad * np.cos(ang)
        zy = ay + rad * np.sin(ang)
        jac = rad * abs(step)
    nz = np.hypot(zx, zy)
    w = 2.0 / ((1.0 - nz) * (1.0 + nz))
    return float(np.sum(w) * jac)


def rho_by_integration(x, y, n_steps: int = 4096, extrapolate: bool = True) -> float:
    """Distance as the weighted length of the geodesic arc from `x` to `y`.

    Composite midpoint rule over `n_steps` equal-angle panels of the carrier
    circle (equal-parameter panels on a diameter).  With `extrapolate` the
    result is combined with a run on ``n_steps // 2`` panels by one
    Richardson step, which cancels the h^2 error term; pass
    ``extrapolate=False`` for the plain second-order rule.

    Raises
    ------
    CoincidentPoints
        If ``x == y``.
    DomainError
        If ``n_steps < 16``.
    """
    x, y = as_disk_point(x), as_disk_point(y)
    if x == y:
        raise CoincidentPoints(f"distance by integration needs distinct points, got {x} twice")
    n = int(n_steps)
    if n < MIN_PANELS:
        raise DomainError(f"n_steps must be at least {MIN_PANELS}, got {n_steps}")
    x, y = _canonical(x, y)
    carrier = carrier_through(x, y)
    fine = _midpoint_sum(x, y, carrier, n)
    if not extrapolate:
        return fine
    m = n // 2
    coarse = _midpoint_sum(x, y, carrier, m)
    k2 = (n / m) ** 2
    return (k2 * fine - coarse) / (k2 - 1.0)
