"""Hölder means and the H_{p,q}-convexity of arsh.

arsh is strictly H_{p,q}-convex on (0, inf) exactly on

    D1 = {p < -2, q >= p}  and  D2 = {-2 <= p <= 0, q >= C(p)},

and strictly H_{p,q}-concave exactly on D3 = {p >= 0, q <= p}.  The critical
curve C(p) = sup_r h_p(r) is computed from the unique root r0 of
f(r) = p, where f is strictly increasing from (0, inf) onto (-2, 0).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from hyplambert.errors import DomainError, InsufficientSamples

P_ZERO = 1e-8
SMALL_R = 1e-4
SERIES_R = 0.5
BOUNDARY_TOL = 1e-9
ZERO_GAP = 1e-13
MONOTONE_SLACK = 1e-13


def holder_mean(p: float, r, s):
    """Power mean ((r^p + s^p) / 2)^(1/p); geometric mean when |p| < 1e-8.

    Accepts scalars or numpy arrays.  The power sums are taken relative to
    max(r, s) (p > 0) or min(r, s) (p < 0) through expm1/log1p, so neither
    overflow nor loss of accuracy occurs for small |p|.
    """
    r = np.asarray(r, dtype=float)
    s = np.asarray(s, dtype=float)
    if np.any(~(r > 0.0)) or np.any(~(s > 0.0)):
        raise DomainError("Hölder mean needs positive arguments")
    p = float(p)
    if abs(p) < P_ZERO:
        out = np.sqrt(r) * np.sqrt(s)
    else:
        ref = np.maximum(r, s) if p > 0 else np.minimum(r, s)
        a = np.log(r / ref)
        b = np.log(s / ref)
        excess = 0.5 * (np.expm1(p * a) + np.expm1(p * b))
        out = ref * np.exp(np.log1p(excess) / p)
    return float(out) if out.ndim == 0 else out


def _positive(r: float) -> float:
    r = float(r)
    if not r > 0.0:
        raise DomainError(f"r must be positive, got {r}")
    return r


def f1_arsh(r: float) -> float:
    """arsh(r) / r: strictly decreasing from 1 to 0 on (0, inf)."""
    r = _positive(r)
    if r < SMALL_R:
        r2 = r * r
        return 1.0 - r2 / 6.0 + 3.0 * r2 * r2 / 40.0
    return math.asinh(r) / r


def _f2_series(r: float) -> float:
    # r sqrt(1+r^2) - arsh r = 2 sum_k binom(-1/2, k) r^(2k+3) / (2k+3)
    r2 = r * r
    coef, power, total = 1.0, 1.0, 0.0
    k = 0
    while True:
        term = coef * power / (2 * k + 3)
        total += term
        if abs(term) < 1e-17 * abs(total):
            break
        k += 1
        coef *= -(2 * k - 1) / (2 * k)
        power *= r2
    return 2.0 * math.sqrt(1.0 + r2) * total


def f2_arsh(r: float) -> float:
    """(r(1+r^2) - sqrt(1+r^2) arsh r) / r^3: strictly increasing from 2/3 to 1."""
    r = _positive(r)
    if r < SERIES_R:
        return _f2_series(r)
    inv2 = 1.0 / (r * r)
    return (1.0 + inv2) - math.sqrt(1.0 + inv2) * math.asinh(r) * inv2


def h_p(p: float, r: float) -> float:
    """1 + p sqrt(1+r^2) arsh(r)/r - arsh(r) / (r sqrt(1+r^2)).

    Written as p sqrt(1+r^2) f1(r) + r^2 f2(r) / (1+r^2), which is free of
    cancellation near r = 0 and of overflow for large r.
    """
    r = _positive(r)
    w = math.hypot(1.0, r)
    return float(p) * w * f1_arsh(r) + f2_arsh(r) * (r / w) ** 2


def critical_f(r: float) -> float:
    """2 - 1/(1+r^2) - 2/f2(r); increases from -2 to 0 on (0, inf)."""
    r = _positive(r)
    return 2.0 - 1.0 / (1.0 + r * r) - 2.0 / f2_arsh(r)


def _check_critical_domain(p: float) -> float:
    p = float(p)
    if not -2.0 < p < 0.0:
        raise DomainError(f"critical curve is defined for p in (-2, 0), got {p}")
    return p


def critical_point(p: float) -> float:
    """The unique r0 > 0 with critical_f(r0) = p, by bisection.

    The bracket is grown geometrically from r = 1 and then halved until its
    width is below 1e-14 relative.
    """
    p = _check_critical_domain(p)
    lo = hi = 1.0
    if critical_f(1.0) < p:
        while critical_f(hi) < p:
            lo, hi = hi, 2.0 * hi
    else:
        while critical_f(lo) >= p:
            lo, hi = 0.5 * lo, lo
    for _ in range(400):
        if hi - lo <= 1e-14 * hi:
            break
        mid = 0.5 * (lo + hi)
        if critical_f(mid) < p:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def critical_curve_C(p: float) -> float:
    """C(p) = sup_r h_p(r) for p in (-2, 0), attained at the root of critical_f."""
    return h_p(p, critical_point(p))


def critical_curve_C_by_maximization(p: float, lo: float = 1e-6, hi: float = 1e6) -> float:
    """C(p) by direct maximization of h_p, for cross-checking.

    A coarse scan over a log grid of (lo, hi) brackets the maximum, which is
    then refined by golden-section search in log r.
    """
    p = _check_critical_domain(p)
    u = np.linspace(math.log(lo), math.log(hi), 2001)
    vals = [h_p(p, math.exp(x)) for x in u]
    i = int(np.argmax(vals))
    i = min(max(i, 1), len(u) - 2)
    res = minimize_scalar(
        lambda x: -h_p(p, math.exp(x)),
        bracket=(u[i - 1], u[i], u[i + 1]),
        method="golden",
        options={"xtol": 1e-12},
    )
    return max(-float(res.fun), max(vals))


def log_g_pq(p: float, q: float, r: float) -> float:
    r = _positive(r)
    return (q - 1.0) * math.log(math.asinh(r)) - (p - 1.0) * math.log(r) - math.log(math.hypot(1.0, r))


def g_pq(p: float, q: float, r: float) -> float:
    """arsh(r)^(q-1) / (r^(p-1) sqrt(1+r^2)), evaluated through logarithms."""
    return math.exp(log_g_pq(p, q, r))


def g_pq_log_derivative(p: float, q: float, r: float) -> float:
    """d/dr log g_{p,q}(r) = (q - h_p(r)) / (sqrt(1+r^2) arsh r)."""
    r = _positive(r)
    return (q - h_p(p, r)) / (math.hypot(1.0, r) * math.asinh(r))


class ConvexityClass(enum.Enum):
    STRICTLY_CONVEX = "convex"
    STRICTLY_CONCAVE = "concave"
    NEITHER = "neither"
    BOUNDARY = "boundary"


def classify_arsh_convexity(p: float, q: float, tol: float = BOUNDARY_TOL) -> ConvexityClass:
    """Classify arsh as strictly H_{p,q}-convex, -concave, or neither on (0, inf).

    Points within `tol` of the critical curve q = C(p), -2 < p < 0, are
    reported as BOUNDARY.  The edges q = p of D1 and D3 belong to their sets.
    """
    p, q = float(p), float(q)
    if p < -2.0:
        return ConvexityClass.STRICTLY_CONVEX if q >= p else ConvexityClass.NEITHER
    if p == -2.0:
        return ConvexityClass.STRICTLY_CONVEX if q >= -2.0 else ConvexityClass.NEITHER
    if p < 0.0:
        c = critical_curve_C(p)
        if abs(q - c) < tol:
            return ConvexityClass.BOUNDARY
        return ConvexityClass.STRICTLY_CONVEX if q > c else ConvexityClass.NEITHER
    if p == 0.0:
        if q >= 1.0:
            return ConvexityClass.STRICTLY_CONVEX
        if q <= 0.0:
            return ConvexityClass.STRICTLY_CONCAVE
        return ConvexityClass.NEITHER
    return ConvexityClass.STRICTLY_CONCAVE if q <= p else ConvexityClass.NEITHER


def convexity_gap(p: float, q: float, x, y):
    """arsh(H_p(x, y)) - H_q(arsh x, arsh y); <= 0 for convex, >= 0 for concave."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.arcsinh(holder_mean(p, x, y)) - holder_mean(q, np.arcsinh(x), np.arcsinh(y))


@dataclass(frozen=True)
class SignSummary:
    negative: int
    zero: int
    positive: int

    def consistent_with(self, cls: ConvexityClass) -> bool:
        if cls is ConvexityClass.STRICTLY_CONVEX:
            return self.positive == 0
        if cls is ConvexityClass.STRICTLY_CONCAVE:
            return self.negative == 0
        if cls is ConvexityClass.NEITHER:
            return self.negative > 0 and self.positive > 0
        return True


def empirical_convexity_test(
    p: float,
    q: float,
    n_pairs: int = 10_000,
    range_hi: float = 1e3,
    rng: np.random.Generator | int | None = 0,
) -> SignSummary:
    """Count the signs of convexity_gap over random pairs.

    Pairs are drawn log-uniformly from (1e-3, range_hi); gaps within 1e-13
    of zero count as zero.
    """
    if n_pairs < 100:
        raise DomainError(f"n_pairs must be at least 100, got {n_pairs}")
    if not range_hi > 1.0:
        raise DomainError(f"range_hi must exceed 1, got {range_hi}")
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    lo, hi = math.log(1e-3), math.log(range_hi)
    x = np.exp(rng.uniform(lo, hi, n_pairs))
    y = np.exp(rng.uniform(lo, hi, n_pairs))
    gap = convexity_gap(p, q, x, y)
    zero = np.abs(gap) <= ZERO_GAP
    return SignSummary(
        negative=int(np.sum((gap < 0) & ~zero)),
        zero=int(np.sum(zero)),
        positive=int(np.sum((gap > 0) & ~zero)),
    )


def check_monotone(samples, direction: str = "increasing", slack: float = MONOTONE_SLACK) -> bool:
    """Whether sampled values move in `direction` between consecutive samples.

    `samples` is a sequence of ``(r, value)`` with strictly increasing r.  A
    step against the direction of at most `slack` is treated as rounding.

    Raises
    ------
    InsufficientSamples
        With fewer than two samples or non-increasing abscissae.
    """
    if direction not in ("increasing", "decreasing"):
        raise ValueError(f"unknown direction {direction!r}")
    samples = list(samples)
    if len(samples) < 2:
        raise InsufficientSamples(f"need at least 2 samples, got {len(samples)}")
    sign = 1.0 if direction == "increasing" else -1.0
    for (r0, v0), (r1, v1) in zip(samples, samples[1:]):
        if not r1 > r0:
            raise InsufficientSamples(f"abscissae not strictly increasing at r={r1}")
        if sign * (v1 - v0) <= -slack:
            return False
    return True


def region_map(p_values, q_values, tol: float = BOUNDARY_TOL):
    """Rows (p, q, class, C(p) or None) over the grid, p-major."""
    rows = []
    for p in p_values:
        c = critical_curve_C(p) if -2.0 < p < 0.0 else None
        for q in q_values:
            rows.append((float(p), float(q), classify_arsh_convexity(p, q, tol), c))
    return rows
