import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pareto_lens import (
    DependenceVerdict,
    DualPoint,
    LineParams,
    SlopeClass,
    SolutionSet,
    classify_slope,
    detect_linear_dependence,
    line_from_rho,
    rho_from_line,
    segment_intersection,
)
from pareto_lens.errors import (
    DegenerateRegressionError,
    DegenerateSegmentsError,
    InsufficientDataError,
    ParallelLinesError,
    VerticalLineError,
)

slopes = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False).filter(lambda k: k != 1)
intercepts = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


class TestRhoFromLine:
    def test_midway_for_negative_unit_slope(self):
        assert rho_from_line(LineParams(-1, 0)) == DualPoint(0.5, 0.0)

    def test_zero_slope_lands_on_right_axis(self):
        assert rho_from_line(LineParams(0, 3)) == DualPoint(1.0, 3.0)

    def test_steep_slope_lands_left_of_left_axis(self):
        assert rho_from_line(LineParams(2, 0)) == DualPoint(-1.0, 0.0)

    def test_unit_slope_has_no_dual_point(self):
        with pytest.raises(ParallelLinesError):
            rho_from_line(LineParams(1, 5))

    def test_rejects_nonfinite_params(self):
        with pytest.raises(ValueError):
            LineParams(float("inf"), 0)


class TestLineFromRho:
    def test_inverse_of_midway(self):
        assert line_from_rho(DualPoint(0.5, 0.0)) == LineParams(-1.0, 0.0)

    def test_inverse_of_right_axis_point(self):
        assert line_from_rho(DualPoint(1.0, 3.0)) == LineParams(0.0, 3.0)

    def test_u_zero_is_vertical(self):
        with pytest.raises(VerticalLineError):
            line_from_rho(DualPoint(0.0, 2.0))

    @given(slopes, intercepts)
    def test_round_trip(self, k, b):
        back = line_from_rho(rho_from_line(LineParams(k, b)))
        assert back.k == pytest.approx(k, rel=1e-9, abs=1e-9)
        assert back.b == pytest.approx(b, rel=1e-9, abs=1e-9)

    @given(
        st.floats(min_value=-100, max_value=100, allow_nan=False).filter(lambda u: abs(u) > 1e-6),
        st.floats(min_value=-100, max_value=100, allow_nan=False),
    )
    def test_round_trip_from_dual_side(self, u, v):
        p = line_from_rho(DualPoint(u, v))
        if p.k == 1:  # u huge enough that 1/u underflows
            return
        back = rho_from_line(p)
        assert back.u == pytest.approx(u, rel=1e-9, abs=1e-9)
        assert back.v == pytest.approx(v, rel=1e-9, abs=1e-9)


class TestSegmentIntersection:
    def test_symmetric_crossing_at_midpoint(self):
        hit = segment_intersection(0, 1, 1, 0)
        assert hit.point == DualPoint(0.5, 0.5)
        assert hit.inside

    def test_parallel_offset_segments_do_not_cross(self):
        assert segment_intersection(0, 0, 1, 1) is None

    def test_negated_objective_pairs_cross_midway_at_zero(self, rng):
        # points on f2 = -f1 cross at (0.5, 0) regardless of the samples
        for _ in range(50):
            x, y = rng.uniform(-5, 5, size=2)
            if x == y:
                continue
            hit = segment_intersection(x, -x, y, -y)
            assert hit.point.u == pytest.approx(0.5, abs=1e-12)
            assert hit.point.v == pytest.approx(0.0, abs=1e-9)

    def test_identical_segments_are_degenerate(self):
        with pytest.raises(DegenerateSegmentsError):
            segment_intersection(1, 2, 1, 2)

    def test_outside_crossing_flagged(self):
        hit = segment_intersection(0, 1, 0.5, 2)
        assert not hit.inside
        assert hit.point.u < 0

    @given(
        st.tuples(*[st.floats(min_value=-50, max_value=50, allow_nan=False)] * 4)
    )
    def test_symmetric_in_the_two_segments(self, vals):
        p_i, p_j, q_i, q_j = vals
        if p_i == q_i and p_j == q_j:
            return
        first = segment_intersection(p_i, p_j, q_i, q_j)
        second = segment_intersection(q_i, q_j, p_i, p_j)
        if first is None:
            assert second is None
        else:
            assert second.point == first.point
            assert second.inside == first.inside


class TestClassifySlope:
    def test_paper_taxonomy_examples(self):
        assert classify_slope(-1) is SlopeClass.MIDWAY
        assert classify_slope(1) is SlopeClass.PARALLEL
        assert classify_slope(0.5) is SlopeClass.RIGHT_OF_RIGHT

    def test_remaining_classes(self):
        assert classify_slope(-3) is SlopeClass.BETWEEN_AXES
        assert classify_slope(7) is SlopeClass.LEFT_OF_LEFT
        assert classify_slope(0) is SlopeClass.ON_RIGHT_AXIS
        assert classify_slope(float("inf")) is SlopeClass.ON_LEFT_AXIS
        assert classify_slope(float("-inf")) is SlopeClass.ON_LEFT_AXIS

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            classify_slope(float("nan"))

    # below ~1e-16 the computed 1-k collapses to 1.0 and u to exactly 1,
    # so the strict inequalities only make sense away from that scale
    @given(slopes.filter(lambda k: abs(k) > 1e-12))
    def test_agrees_with_dual_point_position(self, k):
        u = rho_from_line(LineParams(k, 0.0)).u
        cls = classify_slope(k)
        if k < 0:
            assert 0 < u < 1
            assert cls in (SlopeClass.BETWEEN_AXES, SlopeClass.MIDWAY)
        elif k == 0:
            assert u == 1
            assert cls is SlopeClass.ON_RIGHT_AXIS
        elif k < 1:
            assert u > 1
            assert cls is SlopeClass.RIGHT_OF_RIGHT
        else:
            assert u < 0
            assert cls is SlopeClass.LEFT_OF_LEFT


def _line_set(rng, k, b, n=40, noise=0.0):
    x = rng.uniform(0, 1, size=n)
    y = k * x + b + noise * rng.standard_normal(n)
    return SolutionSet(np.column_stack([x, y]))


class TestDetectLinearDependence:
    def test_negative_dependence_on_rectangle_pair(self, rng):
        s = _line_set(rng, k=-1.0, b=1.0)
        rep = detect_linear_dependence(s, 0, 1)
        assert rep.verdict is DependenceVerdict.NEGATIVELY_LINEAR
        assert rep.fitted.k == pytest.approx(-1.0, abs=1e-9)
        assert rep.r_squared == pytest.approx(1.0, abs=1e-12)
        assert rep.intersection_spread <= 1e-9
        assert rep.slope_class is SlopeClass.MIDWAY

    def test_equal_objectives_are_parallel_linear(self, rng):
        s = _line_set(rng, k=1.0, b=0.0)
        rep = detect_linear_dependence(s, 0, 1)
        assert rep.verdict is DependenceVerdict.PARALLEL_LINEAR

    def test_positive_dependence(self, rng):
        s = _line_set(rng, k=2.5, b=-0.5)
        rep = detect_linear_dependence(s, 0, 1)
        assert rep.verdict is DependenceVerdict.POSITIVELY_LINEAR

    def test_independent_data_yields_none(self):
        rng = np.random.Generator(np.random.PCG64(99))
        s = SolutionSet(rng.uniform(size=(200, 2)))
        rep = detect_linear_dependence(s, 0, 1)
        assert rep.verdict is DependenceVerdict.NONE
        assert rep.r_squared < 0.2

    def test_needs_three_solutions(self):
        with pytest.raises(InsufficientDataError):
            detect_linear_dependence(SolutionSet([[0.0, 0.0], [1.0, 1.0]]), 0, 1)

    def test_constant_objective_rejected(self):
        s = SolutionSet([[1.0, 0.0], [1.0, 0.5], [1.0, 1.0]], ["flat", "free"])
        with pytest.raises(DegenerateRegressionError, match="flat"):
            detect_linear_dependence(s, 0, 1)

    def test_noisy_data_fails_the_fit_threshold(self, rng):
        s = _line_set(rng, k=-1.0, b=1.0, noise=0.05)
        rep = detect_linear_dependence(s, 0, 1)
        assert rep.verdict is DependenceVerdict.NONE

    def test_verdict_invariant_under_positive_rescaling(self, rng):
        s = _line_set(rng, k=-2.0, b=0.3, n=30)
        scaled = SolutionSet(s.raw_values * np.array([1.0, 40.0]))
        a = detect_linear_dependence(s, 0, 1)
        b = detect_linear_dependence(scaled, 0, 1)
        assert a.verdict is b.verdict is DependenceVerdict.NEGATIVELY_LINEAR
        assert b.fitted.k == pytest.approx(40.0 * a.fitted.k, rel=1e-12)
        assert b.r_squared == pytest.approx(a.r_squared, abs=1e-12)

    def test_sampling_is_capped_and_seed_recorded(self, rng):
        s = SolutionSet(rng.uniform(size=(80, 2)))
        rep = detect_linear_dependence(s, 0, 1, seed=42)
        assert rep.sampled_pairs == 1000
        assert rep.seed == 42
        again = detect_linear_dependence(s, 0, 1, seed=42)
        assert again.intersection_spread == rep.intersection_spread

    def test_all_pairs_used_for_small_sets(self, rng):
        s = SolutionSet(rng.uniform(size=(45, 2)))
        assert detect_linear_dependence(s, 0, 1).sampled_pairs == 45 * 44 // 2


class TestCollinearityCollapse:
    def test_extended_crossings_coincide_with_rho(self, rng):
        for _ in range(20):
            k = rng.uniform(-5, 5)
            if abs(k - 1) < 1e-3:
                continue
            b = rng.uniform(-5, 5)
            rho = rho_from_line(LineParams(k, b))
            xs = rng.uniform(-10, 10, size=8)
            for i in range(len(xs)):
                for j in range(i + 1, len(xs)):
                    if xs[i] == xs[j]:
                        continue
                    hit = segment_intersection(
                        xs[i], k * xs[i] + b, xs[j], k * xs[j] + b
                    )
                    assert hit.point.u == pytest.approx(rho.u, rel=1e-9, abs=1e-9)
                    assert hit.point.v == pytest.approx(rho.v, rel=1e-9, abs=1e-9)
