"""Seeded invariant suite behind ``hyplambert verify``.

Every property draws from its own Philox stream spawned from one seed, so
results do not depend on which other properties run or in what order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from hyplambert import geodesic, holder, hyp_metric, lambert
from hyplambert.errors import VerificationFailure
from hyplambert.geodesic import OrthoCircle
from hyplambert.points import INFINITY

SWEEP_S = (0.1, 0.3, 0.5, 0.7, 0.9, 0.95)
CONVEXITY_GRID = np.round(np.linspace(-4.0, 4.0, 21), 12)
# sign changes of g_{p,q} on the grid occur out to r ~ 1.3e5
WITNESS_RANGE = 1e12


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    worst: float
    detail: str = ""


def random_disk_pairs(rng: np.random.Generator, n: int, max_norm: float = 0.95):
    """`n` pairs of points uniform in the disk of radius `max_norm`."""
    rad = max_norm * np.sqrt(rng.random((n, 2)))
    ang = 2.0 * math.pi * rng.random((n, 2))
    xs = np.stack([rad * np.cos(ang), rad * np.sin(ang)], axis=-1)
    return [((float(a[0, 0]), float(a[0, 1])), (float(a[1, 0]), float(a[1, 1]))) for a in xs]


def orthocircle_scaled_residual(c: OrthoCircle) -> float:
    """Orthogonality residual relative to |center|^2 (absolute when |center| <= 1)."""
    cx, cy = c.center
    return abs(c.orthogonality_residual()) / max(1.0, cx * cx + cy * cy)


def _result(name, worst, tol, detail=""):
    return PropertyResult(name, bool(worst <= tol), float(worst), detail)


def prop_metric_symmetry(rng, n):
    worst = 0.0
    for x, y in random_disk_pairs(rng, n):
        for f in (hyp_metric.rho_disk, hyp_metric.rho_by_endpoints, hyp_metric.chordal_distance):
            worst = max(worst, abs(f(x, y) - f(y, x)))
        hx, hy = (x[0], x[1] + 1.0), (y[0], y[1] + 1.0)
        worst = max(worst, abs(hyp_metric.rho_halfplane(hx, hy) - hyp_metric.rho_halfplane(hy, hx)))
    for x, y in random_disk_pairs(rng, max(n // 20, 1)):
        f = hyp_metric.rho_by_integration
        worst = max(worst, abs(f(x, y, 256) - f(y, x, 256)))
    return _result("metric_symmetry", worst, 1e-15)


def prop_oracle_triangle(rng, n):
    w_end = w_int = 0.0
    for x, y in random_disk_pairs(rng, n):
        d = hyp_metric.rho_disk(x, y)
        w_end = max(w_end, abs(d - hyp_metric.rho_by_endpoints(x, y)))
        w_int = max(w_int, abs(d - hyp_metric.rho_by_integration(x, y, 4096)))
    ok = w_end <= 1e-10 and w_int <= 1e-6
    return PropertyResult("oracle_triangle", ok, max(w_end, w_int),
                          f"endpoints {w_end:.3e} integration {w_int:.3e}")


def prop_positivity(rng, n):
    ok = True
    for x, y in random_disk_pairs(rng, n):
        ok &= hyp_metric.rho_disk(x, y) > 0.0 and hyp_metric.rho_disk(x, x) == 0.0
        ok &= hyp_metric.chordal_distance(x, x) == 0.0
        hx = (x[0], x[1] + 1.0)
        ok &= hyp_metric.rho_halfplane(hx, hx) == 0.0
    return PropertyResult("positivity", ok, 0.0)


def prop_chordal_bound(rng, n):
    pts = 10.0 ** rng.uniform(-3, 3, (n, 1)) * rng.standard_normal((n, 2))
    worst = -math.inf
    for a, b in zip(pts, pts[::-1]):
        worst = max(worst, hyp_metric.chordal_distance(a, b) - 1.0,
                    hyp_metric.chordal_distance(a, INFINITY) - 1.0)
    anchor = abs(hyp_metric.chordal_distance((0.0, 0.0), INFINITY) - 1.0)
    return PropertyResult("chordal_bound", worst <= 0.0 and anchor == 0.0, worst)


def prop_absolute_ratio_forms(rng, n):
    worst = 0.0
    for quad in rng.uniform(-2, 2, (n, 4, 2)):
        pts = [tuple(p) for p in quad]
        a = hyp_metric.absolute_ratio(*pts)
        b = hyp_metric.absolute_ratio_euclidean(*pts)
        worst = max(worst, abs(a - b) / b)
    return _result("absolute_ratio_forms", worst, 1e-12)


def prop_orthogonality(rng, n):
    w_orth = w_mem = w_rad = 0.0
    for x, y in random_disk_pairs(rng, n):
        c = geodesic.carrier_through(x, y)
        if not isinstance(c, OrthoCircle):
            continue
        scale = max(1.0, math.hypot(*c.center))
        w_orth = max(w_orth, orthocircle_scaled_residual(c))
        w_mem = max(w_mem, abs(c.membership_residual(x)) / scale,
                    abs(c.membership_residual(y)) / scale)
        w_rad = max(w_rad, abs(geodesic.radius_by_formula(x, y) - c.radius) / max(1.0, c.radius))
    ok = w_orth <= 1e-10 and w_mem <= 1e-10 and w_rad <= 1e-9
    return PropertyResult("orthogonality", ok, max(w_orth, w_mem, w_rad),
                          f"orth {w_orth:.3e} member {w_mem:.3e} radius {w_rad:.3e}")


def identity_grid(n=100):
    ts = np.linspace(0.05, 0.95, n)
    thetas = np.linspace(0.05 * math.pi / 2, 0.95 * math.pi / 2, n)
    return [(float(t), float(th)) for t in ts for th in thetas]


def _identity_worst(params):
    w12 = w4 = 0.0
    for t, th in params:
        res = lambert.build_quad(lambert.QuadParams(t, th)).identity_residuals()
        w12 = max(w12, abs(res["th_identity"]), abs(res["sh_identity"]), abs(res["angle_identity"]))
        w4 = max(w4, abs(res["four_sides"]))
    return w12, w4


def prop_lambert_identities(rng, n):
    params = identity_grid() + [
        (float(t), float(th))
        for t, th in zip(rng.uniform(0.05, 0.95, n), rng.uniform(0.05, 0.95, n) * math.pi / 2)
    ]
    w12, w4 = _identity_worst(params)
    return PropertyResult("lambert_identities", w12 <= 1e-12 and w4 <= 1e-10, max(w12, w4),
                          f"two-side {w12:.3e} four-side {w4:.3e}")


def prop_direct_sides(rng, n):
    w_side = w_id = 0.0
    params = identity_grid(30) + [
        (float(t), float(th))
        for t, th in zip(rng.uniform(0.05, 0.95, n), rng.uniform(0.05, 0.95, n) * math.pi / 2)
    ]
    for t, th in params:
        ds = lambert.direct_sides(lambert.build_quad(lambert.QuadParams(t, th)))
        w_side = max(w_side, ds.max_disagreement())
        w_id = max(w_id, ds.proof_identity_residual)
    return PropertyResult("direct_sides", w_side <= 1e-10 and w_id <= 1e-12, max(w_side, w_id),
                          f"sides {w_side:.3e} identity {w_id:.3e}")


def prop_bound_sweeps(rng, n):
    svals = list(SWEEP_S) + [float(s) for s in rng.uniform(0.01, 0.99, 4)]
    worst = -math.inf
    try:
        for s in svals:
            worst = max(worst, lambert.verify_theorems(s, 1001).max_violation)
    except VerificationFailure as exc:
        return PropertyResult("bound_sweeps", False, exc.residual, str(exc))
    return PropertyResult("bound_sweeps", True, worst)


def prop_bound_forms(rng, n):
    worst = 0.0
    for s in list(np.round(np.linspace(0.1, 0.99, 90), 12)) + list(rng.uniform(1e-3, 0.999, n)):
        s = float(s)
        worst = max(worst, abs(lambert.product_bound(s) - lambert.product_bound_log_form(s)))
        a, b = lambert.sum_bounds(s), lambert.sum_bounds_log_form(s)
        worst = max(worst, abs(a.lower - b.lower), abs(a.upper - b.upper))
    return _result("bound_forms", worst, 1e-12)


def prop_critical_curve(rng, n):
    ps = rng.uniform(-2.0, 0.0, max(n // 20, 5))
    bracket_ok = True
    agree = 0.0
    for p in ps:
        p = float(p)
        c = holder.critical_curve_C(p)
        bracket_ok &= p < c < 1.0
        agree = max(agree, abs(c - holder.critical_curve_C_by_maximization(p)))
    limits = max(abs(holder.critical_curve_C(-2.0 + 1e-6) + 2.0),
                 abs(holder.critical_curve_C(-1e-6) - 1.0))
    ok = bracket_ok and agree <= 1e-9 and limits < 1e-3
    return PropertyResult("critical_curve", ok, agree, f"limits {limits:.3e}")


def prop_critical_f(rng, n):
    rs = np.logspace(-6, 6, max(n, 100))
    vals = [holder.critical_f(float(r)) for r in rs]
    mono = holder.check_monotone(zip(rs, vals), "increasing")
    inside = all(-2.0 < v < 0.0 for v in vals)
    return PropertyResult("critical_f_monotone", mono and inside, 0.0)


def prop_h_shape(rng, n):
    ok = True
    for p in rng.uniform(-1.95, -0.05, 5):
        p = float(p)
        r0 = holder.critical_point(p)
        left = np.geomspace(1e-3 * r0, 0.999 * r0, 200)
        right = np.geomspace(1.001 * r0, 1e3 * r0, 200)
        ok &= holder.check_monotone([(r, holder.h_p(p, r)) for r in left], "increasing")
        ok &= holder.check_monotone([(r, holder.h_p(p, r)) for r in right], "decreasing")
    return PropertyResult("h_p_shape", ok, 0.0)


def prop_mean_sandwich(rng, n):
    worst = -math.inf
    mono = True
    pgrid = np.linspace(-5, 5, 41)
    for r, s in 10.0 ** rng.uniform(-3, 3, (n, 2)):
        lo, hi = min(r, s), max(r, s)
        means = [holder.holder_mean(p, r, s) for p in pgrid]
        for h in means:
            worst = max(worst, (lo - h) / lo, (h - hi) / hi)
        mono &= holder.check_monotone(zip(pgrid, means), "increasing", slack=1e-12 * hi)
    return PropertyResult("mean_sandwich", worst <= 1e-15 and mono, worst)


def prop_f1_f2(rng, n):
    rs = np.geomspace(1e-6, 1e6, max(n, 100))
    f1 = [holder.f1_arsh(float(r)) for r in rs]
    f2 = [holder.f2_arsh(float(r)) for r in rs]
    ok = holder.check_monotone(zip(rs, f1), "decreasing") and holder.check_monotone(zip(rs, f2), "increasing")
    ok &= all(0.0 < v < 1.0 for v in f1) and all(2.0 / 3.0 <= v < 1.0 for v in f2)
    return PropertyResult("f1_f2_monotone", ok, 0.0)


def prop_convexity_classifier(rng, n):
    anchors = {
        (1.0, 1.0): holder.ConvexityClass.STRICTLY_CONCAVE,
        (-3.0, -3.0): holder.ConvexityClass.STRICTLY_CONVEX,
        (0.0, 0.5): holder.ConvexityClass.NEITHER,
        (0.0, 0.0): holder.ConvexityClass.STRICTLY_CONCAVE,
    }
    ok = all(holder.classify_arsh_convexity(p, q) is c for (p, q), c in anchors.items())
    bad = []
    seeds = rng.integers(0, 2**63, len(CONVEXITY_GRID) ** 2)
    k = 0
    for p in CONVEXITY_GRID:
        for q in CONVEXITY_GRID:
            cls = holder.classify_arsh_convexity(p, q)
            summ = holder.empirical_convexity_test(p, q, 10_000, WITNESS_RANGE, rng=int(seeds[k]))
            k += 1
            if not summ.consistent_with(cls):
                bad.append((float(p), float(q)))
    detail = f"{len(bad)} contradictions" + (f" first {bad[0]}" if bad else "")
    return PropertyResult("convexity_classifier", ok and not bad, float(len(bad)), detail)


PROPERTIES: tuple[Callable, ...] = (
    prop_metric_symmetry,
    prop_oracle_triangle,
    prop_positivity,
    prop_chordal_bound,
    prop_absolute_ratio_forms,
    prop_orthogonality,
    prop_lambert_identities,
    prop_direct_sides,
    prop_bound_sweeps,
    prop_bound_forms,
    prop_critical_curve,
    prop_critical_f,
    prop_h_shape,
    prop_mean_sandwich,
    prop_f1_f2,
    prop_convexity_classifier,
)


def run_suite(seed: int, n: int) -> list[PropertyResult]:
    """Run every property with `n` random samples each, seeded by `seed`."""
    streams = np.random.SeedSequence(seed).spawn(len(PROPERTIES))
    results = []
    for prop, ss in zip(PROPERTIES, streams):
        rng = np.random.Generator(np.random.Philox(ss))
        results.append(prop(rng, n))
    return results
