"""Lambert quadrilaterals in the unit disk.

A quadrilateral is normalized with the right-angled vertex ``v_a`` at the
origin, ``v_b`` on the positive real axis, ``v_d`` on the positive
imaginary axis and ``v_c = t e^{i theta}``.  With

    s = th rho(v_a, v_c) = 2t / (1 + t^2),   m = s / sqrt(1 - s^2),
    r = cos theta,                            r' = sin theta,

the four sides are

    d1 = arth(s r),  d2 = arth(s r'),  d3 = arsh(m r'),  d4 = arsh(m r).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from hyplambert.errors import DomainError, VerificationFailure
from hyplambert.holder import check_monotone
from hyplambert.hyp_metric import rho_disk
from hyplambert.points import DiskPoint

HALF_SQRT2 = math.sqrt(2.0) / 2.0
BOUND_SLACK = 1e-13
AGREEMENT_TOL = 1e-10
PROOF_IDENTITY_TOL = 1e-12

CSV_COLUMNS = (
    "r", "d1", "d2", "d3", "d4",
    "product", "sum", "product_bound", "sum_lower", "sum_upper",
)


def _open_unit(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 < value < 1.0:
        raise DomainError(f"{name} must lie in (0, 1), got {value}")
    return value


def _complement(x: float) -> float:
    """sqrt(1 - x^2) without cancellation for x near 1."""
    return math.sqrt((1.0 - x) * (1.0 + x))


@dataclass(frozen=True)
class QuadParams:
    """Shape parameters: |v_c| = t in (0, 1) and arg v_c = theta in (0, pi/2)."""

    t: float
    theta: float

    def __post_init__(self):
        t, theta = float(self.t), float(self.theta)
        if not 0.0 < t < 1.0:
            raise DomainError(f"t must lie in (0, 1), got {t}")
        if not 0.0 < theta < math.pi / 2:
            raise DomainError(f"theta must lie in (0, pi/2), got {theta}")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "theta", theta)

    @classmethod
    def from_s_r(cls, s: float, r: float) -> QuadParams:
        s = _open_unit("s", s)
        r = _open_unit("r", r)
        # t = (1 - sqrt(1 - s^2)) / s, rearranged
        return cls(s / (1.0 + _complement(s)), math.acos(r))

    @property
    def s(self) -> float:
        t = self.t
        return 2.0 * t / (1.0 + t * t)

    @property
    def m(self) -> float:
        t = self.t
        return 2.0 * t / ((1.0 - t) * (1.0 + t))

    @property
    def r(self) -> float:
        return math.cos(self.theta)

    @property
    def r_prime(self) -> float:
        return math.sin(self.theta)


@dataclass(frozen=True)
class LambertQuad:
    v_a: DiskPoint
    v_b: DiskPoint
    v_c: DiskPoint
    v_d: DiskPoint
    d1: float
    d2: float
    d3: float
    d4: float
    phi: float
    params: QuadParams

    def identity_residuals(self) -> dict[str, float]:
        """Residuals of the side identities (all zero in exact arithmetic)."""
        s = self.params.s
        th_sum = math.tanh(self.d1) ** 2 + math.tanh(self.d2) ** 2
        sh_sum = math.sinh(self.d3) ** 2 + math.sinh(self.d4) ** 2
        return {
            "th_identity": th_sum - s * s,
            "sh_identity": sh_sum - s * s / ((1.0 - s) * (1.0 + s)),
            "angle_identity": math.sinh(self.d1) * math.sinh(self.d2) - math.cos(self.phi),
            "four_sides": 1.0 / th_sum - 1.0 / sh_sum - 1.0,
        }


def sides_from_s_r(s: float, r: float, r_prime: float | None = None) -> tuple[float, float, float, float]:
    """Closed-form (d1, d2, d3, d4) for parameters s, r in (0, 1)."""
    rp = _complement(r) if r_prime is None else r_prime
    m = s / _complement(s)
    return math.atanh(s * r), math.atanh(s * rp), math.asinh(m * rp), math.asinh(m * r)


def _axis_foot(t: float, c: float) -> float:
    # b - r_b with b = (1+t^2)/(2tc), r_b = sqrt((1+t^2)^2 - 4t^2c^2)/(2tc);
    # b^2 - r_b^2 = 1, so b - r_b = 1/(b + r_b)
    u = 1.0 + t * t
    root = math.sqrt((u - 2.0 * t * c) * (u + 2.0 * t * c))
    return 2.0 * t * c / (u + root)


def build_quad(p: QuadParams) -> LambertQuad:
    """Construct the normalized quadrilateral for shape parameters `p`."""
    if not isinstance(p, QuadParams):
        p = QuadParams(*p)
    t, r, rp = p.t, p.r, p.r_prime
    d1, d2, d3, d4 = sides_from_s_r(p.s, r, rp)
    cos_phi = math.sinh(d1) * math.sinh(d2)
    phi = math.acos(min(cos_phi, 1.0))
    return LambertQuad(
        v_a=DiskPoint(0.0, 0.0),
        v_b=DiskPoint(_axis_foot(t, r), 0.0),
        v_c=DiskPoint(t * r, t * rp),
        v_d=DiskPoint(0.0, _axis_foot(t, rp)),
        d1=d1, d2=d2, d3=d3, d4=d4,
        phi=phi,
        params=p,
    )


def g_s(s: float, r: float) -> float:
    """(1 - sqrt(1 - s^2 r^2)) / (s r): Euclidean norm of the foot at parameter r."""
    sr = s * r
    return sr / (1.0 + _complement(sr))


def f_s(s: float, r: float) -> float:
    """sh(rho(v_c, foot) / 2) for the foot at angle arccos(r) from v_c."""
    g = g_s(s, r)
    g1 = g_s(s, 1.0)
    num = g * g + g1 * g1 - 2.0 * r * g * g1
    return math.sqrt(num / ((1.0 - g) * (1.0 + g) * (1.0 - g1) * (1.0 + g1)))


@dataclass(frozen=True)
class DirectSides:
    """d3 and d4 by three routes, with the residual of f sqrt(1+f^2) = m r'/2."""

    closed_form: tuple[float, float]
    by_distance: tuple[float, float]
    by_fs: tuple[float, float]
    proof_identity_residual: float

    def max_disagreement(self) -> float:
        pairs = (self.closed_form, self.by_distance, self.by_fs)
        return max(
            abs(a[i] - b[i]) for i in range(2) for a in pairs for b in pairs
        )


def direct_sides(q: LambertQuad) -> DirectSides:
    s, m = q.params.s, q.params.m
    r, rp = q.params.r, q.params.r_prime
    fr, frp = f_s(s, r), f_s(s, rp)
    resid = max(
        abs(fr * math.sqrt(1.0 + fr * fr) - m * rp / 2.0),
        abs(frp * math.sqrt(1.0 + frp * frp) - m * r / 2.0),
    )
    return DirectSides(
        closed_form=(q.d3, q.d4),
        by_distance=(rho_disk(q.v_c, q.v_b), rho_disk(q.v_c, q.v_d)),
        by_fs=(2.0 * math.asinh(fr), 2.0 * math.asinh(frp)),
        proof_identity_residual=resid,
    )


def side_lengths_direct(q: LambertQuad) -> tuple[float, float]:
    """d3, d4 measured as disk distances from v_c to the feet v_b, v_d.

    The result is cross-checked against the closed form and the f_s route.

    Raises
    ------
    VerificationFailure
        If the routes disagree by more than 1e-10 or the proof identity
        misses by more than 1e-12.
    """
    ds = direct_sides(q)
    gap = ds.max_disagreement()
    if gap > AGREEMENT_TOL:
        raise VerificationFailure("direct side lengths", q.params.r, gap)
    if ds.proof_identity_residual > PROOF_IDENTITY_TOL:
        raise VerificationFailure("f_s proof identity", q.params.r, ds.proof_identity_residual)
    return ds.by_distance


def product_bound(s: float) -> float:
    """Sharp upper bound (arsh(m / sqrt 2))^2 for d3 d4."""
    s = _open_unit("s", s)
    m = s / _complement(s)
    return math.asinh(HALF_SQRT2 * m) ** 2


def product_bound_log_form(s: float) -> float:
    """The same bound written as (log sqrt((1 + s sqrt(2 - s^2)) / (1 - s^2)))^2."""
    s = _open_unit("s", s)
    one_minus = (1.0 - s) * (1.0 + s)
    return (0.5 * math.log1p((s * math.sqrt(2.0 - s * s) + s * s) / one_minus)) ** 2


@dataclass(frozen=True)
class SumBounds:
    lower: float
    upper: float


def sum_bounds(s: float) -> SumBounds:
    """Bounds arth s < d3 + d4 <= 2 arsh(m / sqrt 2)."""
    s = _open_unit("s", s)
    m = s / _complement(s)
    return SumBounds(math.atanh(s), 2.0 * math.asinh(HALF_SQRT2 * m))


def sum_bounds_log_form(s: float) -> SumBounds:
    """Same bounds as log sqrt((1+s)/(1-s)) and 2 log sqrt((1 + s sqrt(2-s^2))/(1-s^2))."""
    s = _open_unit("s", s)
    one_minus = (1.0 - s) * (1.0 + s)
    lower = 0.5 * math.log((1.0 + s) / (1.0 - s))
    upper = math.log1p((s * math.sqrt(2.0 - s * s) + s * s) / one_minus)
    return SumBounds(lower, upper)


@dataclass
class VerificationReport:
    """Result of a bound sweep over r for fixed s.

    ``residuals`` maps each inequality check to its largest signed residual;
    a check passes when its residual is <= 0 (strict checks need < 0).
    ``monotone`` holds the sampled monotonicity checks.
    """

    s: float
    rows: list[tuple[float, ...]] = field(default_factory=list)
    residuals: dict[str, float] = field(default_factory=dict)
    monotone: dict[str, bool] = field(default_factory=dict)
    product_argmax_r: float = math.nan
    sum_argmax_r: float = math.nan

    @property
    def max_violation(self) -> float:
        return max(self.residuals.values())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in self.rows:
            w.writerow(format_real(v) for v in row)
        return buf.getvalue()


def format_real(x: float) -> str:
    """Locale-free decimal text with 15 significant digits, zeros kept."""
    return format(float(x), "#.15g")


def _sweep_row(s, r, rp, bound, bounds):
    d1, d2, d3, d4 = sides_from_s_r(s, r, rp)
    return (r, d1, d2, d3, d4, d3 * d4, d3 + d4, bound, bounds.lower, bounds.upper)


def verify_theorems(s: float, n_samples: int = 1001) -> VerificationReport:
    """Sweep r over `n_samples` interior points of (0, 1) and check the bounds.

    Checked, for the sides d1..d4 at each grid point:

    * d3 d4 <= product_bound(s) and arth s < d3 + d4 <= upper sum bound;
    * d2 < d3 < d2 / sqrt(1 - s^2) and d1 < d4 < d1 / sqrt(1 - s^2);
    * arsh(m r) / arth(s r) strictly decreasing with values in (1, 1/sqrt(1-s^2));
    * d3 d4 and d3 + d4 increasing up to r = sqrt(2)/2 and decreasing after,
      with the grid argmax within one step of sqrt(2)/2;
    * both bounds attained at r = sqrt(2)/2 to 1e-13.

    Raises
    ------
    VerificationFailure
        On the first failed check, carrying the offending r and residual.
    """
    s = _open_unit("s", s)
    n = int(n_samples)
    if n < 10:
        raise DomainError(f"n_samples must be at least 10, got {n_samples}")
    bound = product_bound(s)
    bounds = sum_bounds(s)
    inv = 1.0 / _complement(s)
    m = s / _complement(s)
    step = 1.0 / (n + 1)
    rs = [(k + 1) * step for k in range(n)]
    rows = [_sweep_row(s, r, _complement(r), bound, bounds) for r in rs]
    report = VerificationReport(s=s, rows=rows)
    res = report.residuals

    def record(name, r, value, strict):
        if name not in res or value > res[name][1]:
            res[name] = (r, value, strict)

    for r, d1, d2, d3, d4, prod, tot, *_ in rows:
        record("product_bound", r, prod - bound - BOUND_SLACK, False)
        record("sum_upper", r, tot - bounds.upper - BOUND_SLACK, False)
        record("sum_lower", r, bounds.lower - tot, True)
        record("d2_lt_d3", r, d2 - d3, True)
        record("d3_lt_scaled_d2", r, d3 - inv * d2, True)
        record("d1_lt_d4", r, d1 - d4, True)
        record("d4_lt_scaled_d1", r, d4 - inv * d1, True)
        ratio = math.asinh(m * r) / math.atanh(s * r)
        record("ratio_gt_1", r, 1.0 - ratio, True)
        record("ratio_lt_limit", r, ratio - inv, True)

    ratios = [(r, math.asinh(m * r) / math.atanh(s * r)) for r in rs]
    left = [row for row in rows if row[0] <= HALF_SQRT2]
    right = [row for row in rows if row[0] >= HALF_SQRT2]
    mono = {
        "ratio_decreasing": check_monotone(ratios, "decreasing"),
        "product_increasing_left": check_monotone([(x[0], x[5]) for x in left], "increasing"),
        "product_decreasing_right": check_monotone([(x[0], x[5]) for x in right], "decreasing"),
        "sum_increasing_left": check_monotone([(x[0], x[6]) for x in left], "increasing"),
        "sum_decreasing_right": check_monotone([(x[0], x[6]) for x in right], "decreasing"),
    }
    report.monotone = mono
    for name, ok in mono.items():
        if not ok:
            raise VerificationFailure(name, None, math.nan)

    report.product_argmax_r = max(rows, key=lambda x: x[5])[0]
    report.sum_argmax_r = max(rows, key=lambda x: x[6])[0]
    record("product_argmax", report.product_argmax_r,
           abs(report.product_argmax_r - HALF_SQRT2) - step, False)
    record("sum_argmax", report.sum_argmax_r,
           abs(report.sum_argmax_r - HALF_SQRT2) - step, False)

    _, _, d3, d4 = sides_from_s_r(s, HALF_SQRT2, HALF_SQRT2)
    record("product_equality", HALF_SQRT2, abs(d3 * d4 - bound) - BOUND_SLACK, False)
    record("sum_equality", HALF_SQRT2, abs(d3 + d4 - bounds.upper) - BOUND_SLACK, False)

    for name, (r, value, strict) in res.items():
        if value > 0.0 or (strict and value == 0.0):
            raise VerificationFailure(name, r, value)
    report.residuals = {name: value for name, (_, value, _) in res.items()}
    return report
