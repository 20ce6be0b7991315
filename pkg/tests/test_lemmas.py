import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypergon import (
    DomainError,
    Partition,
    SideCountError,
    angle_balance,
    check_angle_lemmas,
    fixed_angle_min_halfsides,
    half_perim_fixed_angle,
    half_perim_fixed_angle_second,
    inequality_4_2_margin,
    octagon_perim,
    octagon_perim_second,
    octagon_tangent_gap,
    octagon_tangent_root,
    perim_area_deriv,
    perim_drop,
    perim_regular,
    quad_split_total,
    side_split_total,
    verify_base_cases,
    verify_chord_octagon,
    verify_cor_4_4,
    verify_f2m_min,
    verify_lemma_4_2,
    verify_lemma_4_3,
    verify_lemma_5_1,
    verify_lemma_6_3,
    verify_lemma_7_1,
    verify_prop_4_1,
    verify_psi_endpoints,
    verify_threshold_instance,
)
from hypergon.analysis import derivative
from hypergon.errors import ParameterError

# frozen from an independent 40-digit evaluation
GAP_9 = -0.4496083670033325858
GAP_10 = 1.0532189400529911908
ROOT = 9.3403380966456656187
HALF_PERIM_C2_X10 = 26.052469492440077052
BASE_MARGIN_HALFPI_PI = 3.0072465437987787878


class TestInequality42:
    def test_report_passes(self):
        rep = verify_lemma_4_2(64, 64)
        assert rep.passed and rep.worst_margin > 0
        assert rep.lemma_id == "L4_2"

    def test_near_diagonal_margin_vanishes(self):
        margin = inequality_4_2_margin(0.7 - 1e-6, 0.7)
        assert 0 < margin < 1e-4

    def test_interior_value(self):
        # frozen: 0.21046515064980508 at (0.3, 0.7)
        assert inequality_4_2_margin(0.3, 0.7) == pytest.approx(0.2104651506498051, rel=1e-12)

    def test_domain_enforcement(self):
        with pytest.raises(ParameterError):
            inequality_4_2_margin(math.pi / 3, 1.3)
        with pytest.raises(ParameterError):
            inequality_4_2_margin(0.3, 0.2)

    def test_small_grid_rejected(self):
        with pytest.raises(ParameterError):
            verify_lemma_4_2(8, 64)


class TestLemma43:
    @pytest.mark.parametrize("x, t_lo, t_hi", [
        (2 * math.pi, 4.5, 50.0),
        (0.1, 2.2, 100.0),
        (10.0, None, 100.0),
    ])
    def test_decreasing(self, x, t_lo, t_hi):
        rep = verify_lemma_4_3(x, t_lo, t_hi, 512)
        assert rep.passed and rep.worst_margin > 0

    def test_open_boundary_rejected(self):
        c_x = 2 + (2 * math.pi) / math.pi
        with pytest.raises(ParameterError):
            verify_lemma_4_3(2 * math.pi, c_x, 50.0, 512)

    def test_matches_squared_derivative_on_integers(self):
        from hypergon import perim_area_deriv_sq

        for n in (5, 8, 13):
            x = 1.5
            assert perim_area_deriv_sq(n, x) == pytest.approx(
                perim_area_deriv(n, x) ** 2, rel=1e-12)


class TestProp41:
    @pytest.mark.parametrize("n", [4, 8])
    def test_increasing(self, n):
        rep = verify_prop_4_1(n, 512)
        assert rep.passed and rep.worst_margin > 0

    def test_zero_at_zero_exactly(self):
        assert perim_drop(8, 0.0) == 0.0

    def test_small_n_rejected(self):
        with pytest.raises(ParameterError):
            verify_prop_4_1(3, 512)


class TestTangentGap:
    def test_paper_anchor_at_9(self):
        assert GAP_9 == pytest.approx(-0.45, abs=0.01)
        assert octagon_tangent_gap(9.0) == pytest.approx(GAP_9, rel=1e-12)

    def test_paper_anchor_at_10(self):
        assert GAP_10 == pytest.approx(1.05, abs=0.01)
        assert octagon_tangent_gap(10.0) == pytest.approx(GAP_10, rel=1e-12)

    def test_signs_away_from_root(self):
        assert octagon_tangent_gap(5.0) < 0
        assert octagon_tangent_gap(12.0) > 0

    def test_vanishes_at_zero(self):
        assert abs(octagon_tangent_gap(1e-6)) < 1e-2

    def test_root(self):
        r = octagon_tangent_root(1e-10)
        assert 9.33 < r.root < 9.35
        assert r.root == pytest.approx(ROOT, abs=1e-9)
        assert r.root > 2 * math.pi
        assert abs(r.residual) <= 1e-10
        assert r.iterations <= 200

    def test_octagon_domain(self):
        for bad in (0.0, -1.0, 6 * math.pi):
            with pytest.raises(DomainError):
                octagon_perim(bad)
            with pytest.raises(DomainError):
                octagon_tangent_gap(bad)

    def test_second_derivative_against_finite_difference(self):
        for x in (3.0, 9.0, 15.0):
            fd = derivative(lambda t: perim_area_deriv(8, t), x)
            assert octagon_perim_second(x) == pytest.approx(fd, rel=1e-5)

    def test_full_report(self):
        rep = verify_lemma_6_3()
        assert rep.passed
        assert 9.33 < rep.witness["root"] < 9.35


class TestChordOctagon:
    def test_passes_below_root(self):
        rep = verify_chord_octagon(2 * math.pi, 512)
        assert rep.passed

    def test_fails_above_root(self):
        rep = verify_chord_octagon(12.0, 512)
        assert not rep.passed and rep.worst_margin < 0


class TestF2mMin:
    def test_genus_two_boundary_instance(self):
        rep = verify_f2m_min(6, 4 * math.pi, 512)
        assert rep.passed and rep.worst_margin > 0

    def test_corollary_propagation_instance(self):
        rep = verify_f2m_min(10, 2 * math.pi, 512)
        assert rep.passed

    def test_degenerate_total_area(self):
        rep = verify_f2m_min(4, 1e-6, 512)
        assert rep.passed

    def test_hypothesis_boundary_enforced(self):
        # min-at-0 genuinely fails beyond a = (m-2)*pi, so it is rejected
        with pytest.raises(ParameterError):
            verify_f2m_min(4, 4 * math.pi, 64)
        with pytest.raises(ParameterError):
            verify_f2m_min(3, 1.0, 64)

    def test_minimum_moves_off_zero_beyond_hypothesis(self):
        a = 5.5 * math.pi
        base = quad_split_total(4, a, 0.0)
        dips = min(quad_split_total(4, a, x) - base
                   for x in [i * 2 * math.pi / 200 for i in range(1, 200)])
        assert dips < 0

    def test_cor_4_4(self):
        rep = verify_cor_4_4(2 * math.pi, 4, 10, 256)
        assert rep.passed and rep.worst_margin > 0


class TestLemma51:
    @pytest.mark.parametrize("t, x_lo, x_hi", [
        (4 * math.pi, 6.1, 60.0),
        (0.5, 3.0, 40.0),
        (math.pi, None, 60.0),
    ])
    def test_decreasing(self, t, x_lo, x_hi):
        rep = verify_lemma_5_1(t, x_lo, x_hi, 512)
        assert rep.passed and rep.worst_margin > 0

    def test_boundary_rejected(self):
        with pytest.raises(ParameterError):
            verify_lemma_5_1(4 * math.pi, 6.0, 60.0, 512)


class TestFixedAngleHalfPerim:
    def test_zero_at_domain_minimum(self):
        c = math.sqrt(2)
        assert fixed_angle_min_halfsides(c) == pytest.approx(2.0, rel=1e-15)
        assert half_perim_fixed_angle(c, 2.0) == 0.0

    def test_value_at_c2_x10(self):
        assert half_perim_fixed_angle(2.0, 10.0) == pytest.approx(
            20 * math.acosh(2 * math.cos(math.pi / 20)), rel=1e-15)
        assert half_perim_fixed_angle(2.0, 10.0) == pytest.approx(
            HALF_PERIM_C2_X10, rel=1e-12)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            half_perim_fixed_angle(0.9, 5.0)
        with pytest.raises(DomainError):
            half_perim_fixed_angle(math.sqrt(2), 1.9)

    @given(st.integers(min_value=2, max_value=30),
           st.floats(min_value=0.05, max_value=0.95))
    @settings(max_examples=200)
    def test_half_perimeter_identity(self, m, frac):
        # half the polygon perimeter, with theta from Gauss-Bonnet
        theta = frac * (2 * m - 2) * math.pi / (2 * m)
        area = (2 * m - 2) * math.pi - 2 * m * theta
        c = 1 / math.sin(theta / 2)
        got = half_perim_fixed_angle(c, m)
        assert got == pytest.approx(perim_regular(2 * m, area) / 2, rel=1e-12)

    def test_second_derivative_against_finite_difference(self):
        h = 1e-3
        for c, x in [(math.sqrt(2), 5.0), (2.0, 10.0), (1.01, 30.0), (10.0, 3.0)]:
            f = lambda s: half_perim_fixed_angle(c, s)
            fd = (f(x + h) - 2 * f(x) + f(x - h)) / (h * h)
            assert half_perim_fixed_angle_second(c, x) == pytest.approx(fd, rel=1e-5)


class TestLemma71:
    @pytest.mark.parametrize("c, x_hi", [(math.sqrt(2), 50.0), (1.01, 100.0), (2.0, 80.0)])
    def test_concave(self, c, x_hi):
        rep = verify_lemma_7_1(c, x_hi, 256)
        assert rep.passed and rep.worst_margin > 0

    def test_bad_params(self):
        with pytest.raises(ParameterError):
            verify_lemma_7_1(0.5, 50.0, 256)
        with pytest.raises(ParameterError):
            verify_lemma_7_1(math.sqrt(2), 1.0, 256)


class TestPsiEndpoints:
    def test_right_angles_interval_2_to_6(self):
        rep = verify_psi_endpoints(6, math.pi / 2, math.pi / 2, 256)
        assert rep.passed
        assert rep.witness["b1"] == pytest.approx(2.0, rel=1e-12)
        assert rep.witness["b2"] == pytest.approx(6.0, rel=1e-12)

    def test_area_zero_boundary_reduces_to_single_polygon(self):
        # first piece pinned at area 0: its angle hits the euclidean bound
        # and the split total at b1 is half the other polygon's perimeter
        m1, n, theta2 = 3, 7, 1.7
        theta1 = (2 * m1 - 2) * math.pi / (2 * m1)
        a_c1 = fixed_angle_min_halfsides(1 / math.sin(theta1 / 2))
        assert a_c1 == pytest.approx(m1, rel=1e-12)
        m2 = n + 2 - m1
        area2 = (2 * m2 - 2) * math.pi - 2 * m2 * theta2
        got = side_split_total(n, theta1, theta2, a_c1)
        assert got == pytest.approx(perim_regular(2 * m2, area2) / 2, rel=1e-12)

    def test_random_draws_concave(self):
        rng = random.Random(0)
        done = 0
        while done < 20:
            n = rng.randint(3, 12)
            theta1 = rng.uniform(0.3, math.pi - 0.3)
            theta2 = rng.uniform(0.3, math.pi - 0.3)
            try:
                rep = verify_psi_endpoints(n, theta1, theta2, 128)
            except ParameterError:
                continue  # empty side-split domain
            assert rep.passed, (n, theta1, theta2)
            done += 1

    def test_empty_domain_rejected(self):
        # tiny angles make the admissible interval empty
        with pytest.raises(ParameterError):
            verify_psi_endpoints(3, 3.0, 3.0, 64)


class TestBaseCases:
    def test_report(self):
        rep = verify_base_cases(64)
        assert rep.passed and rep.worst_margin > 0

    def test_quadrilateral_vacuity(self):
        # interior angle >= pi/2 forces area <= 0
        assert 2 * math.pi - 4 * (math.pi / 2) == 0.0
        for theta in (1.6, 2.0, 3.0):
            assert 2 * math.pi - 4 * theta < 0

    def test_explicit_split_margin(self):
        got = (perim_regular(4, math.pi / 2) + perim_regular(6, math.pi)
               - perim_regular(6, 3 * math.pi / 2))
        assert got == pytest.approx(BASE_MARGIN_HALFPI_PI, rel=1e-12)
        assert got > 0

    def test_degenerate_piece_gives_equality(self):
        t = 0.8
        assert perim_regular(4, 0.0) + perim_regular(6, t) - perim_regular(6, t) == 0.0


class TestThresholdInstance:
    def test_hexagon(self):
        rep = verify_threshold_instance(6, 64)
        assert rep.passed and rep.worst_margin > 0

    def test_twelve_gon(self):
        rep = verify_threshold_instance(12, 48)
        assert rep.passed


class TestAngleBalance:
    def test_single_piece_identity(self):
        p = Partition(((6, 4 * math.pi),))
        theta, residual = angle_balance(p, 6)
        assert residual == 0.0
        assert theta == pytest.approx(math.pi / 2, abs=1e-12)

    def test_two_piece_example(self):
        p = Partition(((3, 2 * math.pi), (5, 2 * math.pi)))
        theta, residual = angle_balance(p, 6)
        assert residual < 1e-10
        thetas = p.piece_angles()
        assert min(thetas) <= theta
        assert max(thetas) >= math.pi / 2

    def test_side_count_mismatch(self):
        p = Partition(((3, 2 * math.pi), (5, 2 * math.pi)))
        with pytest.raises(SideCountError):
            angle_balance(p, 7)

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_random_draws(self, k):
        rep = check_angle_lemmas(k, 100, 0)
        assert rep.passed and rep.worst_margin > 0

    def test_reports_reproducible(self):
        assert check_angle_lemmas(3, 50, 1) == check_angle_lemmas(3, 50, 1)
