import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyplambert.errors import DomainError, InsufficientSamples
from hyplambert.holder import (
    ConvexityClass,
    SignSummary,
    check_monotone,
    classify_arsh_convexity,
    convexity_gap,
    critical_curve_C,
    critical_curve_C_by_maximization,
    critical_f,
    critical_point,
    empirical_convexity_test,
    f1_arsh,
    f2_arsh,
    g_pq,
    g_pq_log_derivative,
    h_p,
    holder_mean,
    log_g_pq,
    region_map,
)

# 40-digit mpmath values: p -> (C(p), r0)
CRITICAL = {
    -1.0: (-0.86446714671991629, 1.18310957066364378),
    -0.5: (-0.12785016059671914, 2.19425118900590896),
    -1.5: (-1.47071418422074320, 0.65972443767897331),
}
F2 = {
    1e-3: 0.66666679999992381,
    0.1: 0.66799243137944243,
    0.3: 0.67808428523771118,
    0.49: 0.69488709024650756,
    0.51: 0.69694496280394251,
    1.0: 0.75354951971953900,
    2.0: 0.84649161784624621,
    1000.0: 0.99999339909349001,
}

pos = st.floats(1e-3, 1e3)
pvals = st.floats(-6, 6)


class TestHolderMean:
    def test_known(self):
        assert holder_mean(1, 1.0, 3.0) == 2.0
        assert holder_mean(2, 1.0, 7.0) == pytest.approx(5.0, rel=1e-15)
        assert holder_mean(-1, 1.0, 3.0) == pytest.approx(1.5, rel=1e-15)
        assert holder_mean(0, 2.0, 8.0) == pytest.approx(4.0, rel=1e-15)

    def test_small_p_is_continuous(self):
        g = holder_mean(0.0, 2.0, 8.0)
        assert holder_mean(1e-7, 2.0, 8.0) == pytest.approx(g, rel=1e-6)
        assert holder_mean(-1e-7, 2.0, 8.0) == pytest.approx(g, rel=1e-6)

    def test_no_overflow(self):
        assert holder_mean(400, 1e3, 2e3) == pytest.approx(2e3 * 0.5 ** (1 / 400), rel=1e-13)
        assert holder_mean(-400, 1e-3, 2e-3) == pytest.approx(1e-3 * 0.5 ** (-1 / 400), rel=1e-13)

    def test_arrays(self):
        out = holder_mean(1.0, np.array([1.0, 2.0]), np.array([3.0, 4.0]))
        assert out.tolist() == [2.0, 3.0]

    def test_domain(self):
        with pytest.raises(DomainError):
            holder_mean(1, 0.0, 1.0)
        with pytest.raises(DomainError):
            holder_mean(1, 1.0, math.nan)

    @given(pvals, pos, pos)
    def test_between_min_and_max(self, p, r, s):
        h = holder_mean(p, r, s)
        assert min(r, s) * (1 - 1e-15) <= h <= max(r, s) * (1 + 1e-15)
        assert h == holder_mean(p, s, r)

    @given(pvals, pvals, pos, pos)
    def test_monotone_in_p(self, p, q, r, s):
        if p > q:
            p, q = q, p
        assert holder_mean(p, r, s) <= holder_mean(q, r, s) * (1 + 1e-13)


class TestArshQuotients:
    def test_f1(self):
        assert f1_arsh(1.0) == pytest.approx(0.881373587019543, abs=1e-15)
        assert f1_arsh(1e-6) == pytest.approx(1.0 - 1e-12 / 6, abs=1e-16)
        # both sides of the series cutoff
        for r in (0.99e-4, 1.01e-4):
            assert f1_arsh(r) == pytest.approx(math.asinh(r) / r, rel=1e-15)

    @pytest.mark.parametrize("r,expected", sorted(F2.items()))
    def test_f2_frozen(self, r, expected):
        assert f2_arsh(r) == pytest.approx(expected, rel=2e-15)

    def test_f2_small_r_expansion(self):
        # 2/3 + 2 r^2 / 15 + O(r^4)
        r = 1e-3
        assert f2_arsh(r) == pytest.approx(2 / 3 + 2 * r * r / 15, abs=1e-12)
        assert f2_arsh(1e-9) == pytest.approx(2 / 3, rel=1e-15)

    def test_h_p_frozen(self):
        assert h_p(1.0, 1.0) == pytest.approx(1.6232252401402305, rel=1e-15)

    @given(pvals, st.floats(1e-4, 1e6))
    def test_h_p_matches_definition(self, p, r):
        w = math.sqrt(1 + r * r)
        direct = 1 + p * w * math.asinh(r) / r - math.asinh(r) / (r * w)
        assert h_p(p, r) == pytest.approx(direct, rel=1e-9, abs=1e-9)

    def test_domain(self):
        for f in (f1_arsh, f2_arsh, critical_f):
            with pytest.raises(DomainError):
                f(0.0)
            with pytest.raises(DomainError):
                f(-1.0)

    def test_shapes(self):
        rs = np.geomspace(1e-6, 1e6, 500)
        assert check_monotone([(r, f1_arsh(r)) for r in rs], "decreasing")
        assert check_monotone([(r, f2_arsh(r)) for r in rs], "increasing")
        assert check_monotone([(r, critical_f(r)) for r in rs], "increasing")
        assert all(-2 < critical_f(r) < 0 for r in rs)


class TestCriticalCurve:
    @pytest.mark.parametrize("p", sorted(CRITICAL))
    def test_frozen(self, p):
        c, r0 = CRITICAL[p]
        assert critical_point(p) == pytest.approx(r0, rel=1e-12)
        assert critical_curve_C(p) == pytest.approx(c, abs=1e-14)

    @pytest.mark.parametrize("p", sorted(CRITICAL))
    def test_root(self, p):
        assert critical_f(critical_point(p)) == pytest.approx(p, abs=1e-14)

    @settings(max_examples=30, deadline=None)
    @given(st.floats(-1.999, -0.001))
    def test_dual_route(self, p):
        assert critical_curve_C(p) == pytest.approx(critical_curve_C_by_maximization(p), abs=1e-9)

    @given(st.floats(-1.9999, -0.0001))
    def test_between_p_and_one(self, p):
        assert p < critical_curve_C(p) < 1.0

    def test_limits(self):
        assert abs(critical_curve_C(-2 + 1e-6) + 2) < 1e-3
        assert abs(critical_curve_C(-1e-6) - 1) < 1e-3

    def test_h_p_peaks_at_root(self):
        p = -1.0
        r0 = critical_point(p)
        assert h_p(p, r0) > h_p(p, 0.9 * r0)
        assert h_p(p, r0) > h_p(p, 1.1 * r0)
        assert g_pq_log_derivative(p, critical_curve_C(p), r0) == pytest.approx(0.0, abs=1e-14)

    @pytest.mark.parametrize("p", [-2.0, 0.0, 0.5, -3.0])
    def test_domain(self, p):
        with pytest.raises(DomainError):
            critical_curve_C(p)
        with pytest.raises(DomainError):
            critical_point(p)


class TestGpq:
    def test_value(self):
        r = 2.0
        expected = math.asinh(r) ** 0.5 / (r ** -1.5 * math.sqrt(5))
        assert g_pq(-0.5, 1.5, r) == pytest.approx(expected, rel=1e-14)

    @given(st.floats(-4, 4), st.floats(-4, 4), st.floats(0.01, 100))
    def test_log_derivative(self, p, q, r):
        h = 1e-6 * r
        fd = (log_g_pq(p, q, r + h) - log_g_pq(p, q, r - h)) / (2 * h)
        # rounding in the difference scales with the size of the individual terms
        noise = 1e-8 * (abs(p) + abs(q) + 2) / r
        assert g_pq_log_derivative(p, q, r) == pytest.approx(fd, rel=1e-5, abs=noise)


class TestClassifier:
    @pytest.mark.parametrize("p,q,cls", [
        (1.0, 1.0, ConvexityClass.STRICTLY_CONCAVE),
        (2.0, -1.0, ConvexityClass.STRICTLY_CONCAVE),
        (2.0, 3.0, ConvexityClass.NEITHER),
        (-3.0, -3.0, ConvexityClass.STRICTLY_CONVEX),
        (-3.0, -3.5, ConvexityClass.NEITHER),
        (-2.0, -2.0, ConvexityClass.STRICTLY_CONVEX),
        (-1.0, 0.0, ConvexityClass.STRICTLY_CONVEX),
        (-1.0, -1.0, ConvexityClass.NEITHER),
        (0.0, 0.0, ConvexityClass.STRICTLY_CONCAVE),
        (0.0, 0.5, ConvexityClass.NEITHER),
        (0.0, 1.0, ConvexityClass.STRICTLY_CONVEX),
    ])
    def test_anchors(self, p, q, cls):
        assert classify_arsh_convexity(p, q) is cls

    def test_boundary(self):
        c = critical_curve_C(-1.0)
        assert classify_arsh_convexity(-1.0, c) is ConvexityClass.BOUNDARY
        assert classify_arsh_convexity(-1.0, c + 5e-10) is ConvexityClass.BOUNDARY
        assert classify_arsh_convexity(-1.0, c + 2e-9) is ConvexityClass.STRICTLY_CONVEX
        assert classify_arsh_convexity(-1.0, c - 2e-9) is ConvexityClass.NEITHER

    def test_gap_sign_examples(self):
        # concave case (p, q) = (1, 1): arsh((x+y)/2) >= (arsh x + arsh y)/2
        assert convexity_gap(1.0, 1.0, 0.5, 4.0) > 0
        assert convexity_gap(-3.0, -3.0, 0.5, 4.0) < 0

    def test_gap_vanishes_on_diagonal(self):
        assert convexity_gap(0.7, -1.3, 2.5, 2.5) == pytest.approx(0.0, abs=1e-15)

    def test_forbidden_sign_never_seen_at_default_range(self):
        grid = np.round(np.linspace(-4, 4, 11), 12)
        for p in grid:
            for q in grid:
                cls = classify_arsh_convexity(p, q)
                summ = empirical_convexity_test(p, q, 2000, rng=7)
                if cls is ConvexityClass.STRICTLY_CONVEX:
                    assert summ.positive == 0, (p, q)
                elif cls is ConvexityClass.STRICTLY_CONCAVE:
                    assert summ.negative == 0, (p, q)

    def test_neither_has_both_signs_on_a_wide_range(self):
        # the sign change of g_{p,q} for (-0.4, -4) sits near r = 1.3e5
        summ = empirical_convexity_test(-0.4, -4.0, 10_000, range_hi=1e12, rng=3)
        assert summ.consistent_with(ConvexityClass.NEITHER)
        narrow = empirical_convexity_test(-0.4, -4.0, 10_000, range_hi=1e3, rng=3)
        assert narrow.positive == 0 or narrow.negative == 0

    def test_deterministic(self):
        a = empirical_convexity_test(0.5, 2.0, 500, rng=11)
        b = empirical_convexity_test(0.5, 2.0, 500, rng=np.random.default_rng(11))
        assert a == b

    def test_empirical_domain(self):
        with pytest.raises(DomainError):
            empirical_convexity_test(0.0, 0.0, 10)
        with pytest.raises(DomainError):
            empirical_convexity_test(0.0, 0.0, 1000, range_hi=0.5)

    def test_sign_summary(self):
        s = SignSummary(3, 1, 0)
        assert s.consistent_with(ConvexityClass.STRICTLY_CONVEX)
        assert not s.consistent_with(ConvexityClass.STRICTLY_CONCAVE)
        assert not s.consistent_with(ConvexityClass.NEITHER)
        assert s.consistent_with(ConvexityClass.BOUNDARY)

    def test_region_map(self):
        rows = region_map([-1.0, 1.0], [0.0, 2.0])
        assert [r[2] for r in rows] == [ConvexityClass.STRICTLY_CONVEX, ConvexityClass.STRICTLY_CONVEX,
                                        ConvexityClass.STRICTLY_CONCAVE, ConvexityClass.NEITHER]
        assert rows[0][3] == pytest.approx(CRITICAL[-1.0][0], abs=1e-14)
        assert rows[2][3] is None


class TestCheckMonotone:
    def test_basic(self):
        assert check_monotone([(0, 0), (1, 1), (2, 1)], "increasing")
        assert not check_monotone([(0, 0), (1, 1), (2, 0.5)], "increasing")
        assert check_monotone([(0, 3), (1, 2)], "decreasing")

    def test_slack(self):
        assert check_monotone([(0, 1.0), (1, 1.0 - 1e-14)], "increasing")
        assert not check_monotone([(0, 1.0), (1, 1.0 - 1e-12)], "increasing")

    def test_errors(self):
        with pytest.raises(InsufficientSamples):
            check_monotone([(0, 1)])
        with pytest.raises(InsufficientSamples):
            check_monotone([(1, 1), (1, 2)])
        with pytest.raises(ValueError):
            check_monotone([(0, 1), (1, 2)], "sideways")

    def test_accepts_generators(self):
        assert check_monotone(((r, r * r) for r in range(1, 5)), "increasing")
