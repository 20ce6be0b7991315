import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypergon import (
    DomainError,
    GenusParams,
    RegularPolygon,
    interior_angle,
    mg,
    perim_area_deriv,
    perim_continuous,
    perim_regular,
    threshold_angle,
)
from hypergon.analysis import derivative

# frozen from an independent 40-digit evaluation of the closed forms
MG_2 = 19.954630692703452908
MG_3 = 34.549735735331908502
ANGLE_8_934 = 1.1886944901923449288
H_8_2PI = 1.5537739740300373073
THRESHOLD_4 = 1.1437177404024204938
THRESHOLD_12 = 2.0741453738889848684


@st.composite
def polygon_params(draw, n_max=60):
    n = draw(st.integers(min_value=3, max_value=n_max))
    frac = draw(st.floats(min_value=0.0, max_value=0.999))
    return n, frac * (n - 2) * math.pi


class TestInteriorAngle:
    def test_right_angled_twelve_gon(self):
        assert interior_angle(12, 4 * math.pi) == pytest.approx(math.pi / 2, rel=1e-15)

    def test_degenerate_octagon_is_euclidean(self):
        assert interior_angle(8, 0.0) == pytest.approx(3 * math.pi / 4, rel=1e-15)

    def test_octagon_at_area_934(self):
        assert interior_angle(8, 9.34) == pytest.approx(ANGLE_8_934, rel=1e-14)

    def test_high_precision_cross_check(self):
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 40
        expect = float(((8 - 2) * mp.pi - mp.mpf("9.34")) / 8)
        assert interior_angle(8, 9.34) == pytest.approx(expect, rel=1e-15)

    @pytest.mark.parametrize("n, a", [(2, 1.0), (8, -0.1), (8, 6 * math.pi), (8, 30.0)])
    def test_domain_errors(self, n, a):
        with pytest.raises(DomainError):
            interior_angle(n, a)

    @given(polygon_params())
    def test_gauss_bonnet_round_trip(self, params):
        n, a = params
        theta = interior_angle(n, a)
        assert 0 < theta <= (n - 2) * math.pi / n
        recovered = (n - 2) * math.pi - n * theta
        assert recovered == pytest.approx(a, rel=1e-12, abs=1e-12)


class TestPerimeter:
    def test_degenerate_is_exactly_zero(self):
        for n in range(3, 40):
            assert perim_regular(n, 0.0) == 0.0

    def test_right_angled_twelve_gon_equals_mg2(self):
        assert perim_regular(12, 4 * math.pi) == pytest.approx(MG_2, rel=1e-12)

    def test_monotone_pair_in_side_count(self):
        assert perim_regular(12, 2 * math.pi) > perim_regular(13, 2 * math.pi)

    def test_half_side_identity(self):
        # the right-angled (8g-4)-gon perimeter via cosh(s) = 2cosh(s/2)^2 - 1
        for g in (2, 3, 5):
            n = 8 * g - 4
            half = perim_regular(n, 4 * math.pi * (g - 1)) / (2 * n)
            full = 2 * math.cosh(half) ** 2 - 1
            assert full == pytest.approx(2 * math.cos(2 * math.pi / n) + 1, rel=1e-12)

    @pytest.mark.parametrize("n, a", [(2, 0.5), (8, -1e-9), (8, 6 * math.pi)])
    def test_domain_errors(self, n, a):
        with pytest.raises(DomainError):
            perim_regular(n, a)

    @given(polygon_params())
    @settings(max_examples=200)
    def test_monotone_in_area(self, params):
        n, a = params
        a2 = a + 0.5 * ((n - 2) * math.pi - a)
        if a2 > a:
            assert perim_regular(n, a2) > perim_regular(n, a)

    @given(st.integers(min_value=3, max_value=40), st.integers(min_value=1, max_value=20),
           st.floats(min_value=0.01, max_value=0.95))
    @settings(max_examples=200)
    def test_monotone_in_side_count(self, n1, dn, frac):
        a = frac * (n1 - 2) * math.pi
        assert perim_regular(n1, a) > perim_regular(n1 + dn, a)

    def test_continuous_matches_integer(self):
        assert perim_continuous(9.0, 2.0) == perim_regular(9, 2.0)


class TestDerivative:
    def test_matches_finite_difference_at_2pi(self):
        fd = derivative(lambda a: perim_regular(8, a), 2 * math.pi)
        got = perim_area_deriv(8, 2 * math.pi)
        assert got == pytest.approx(H_8_2PI, rel=1e-12)
        assert abs(got - fd) / got < 1e-6

    def test_diverges_near_zero(self):
        assert perim_area_deriv(8, 1e-8) > 1e3

    def test_positive(self):
        assert perim_area_deriv(12, math.pi) > 0

    @pytest.mark.parametrize("x", [0.0, -1.0, 6 * math.pi])
    def test_domain_errors(self, x):
        with pytest.raises(DomainError):
            perim_area_deriv(8, x)


class TestMg:
    def test_genus_two(self):
        assert mg(2) == pytest.approx(12 * math.acosh(math.sqrt(3) + 1), rel=1e-15)
        assert mg(2) == pytest.approx(MG_2, rel=1e-14)

    def test_genus_three(self):
        assert mg(3) == pytest.approx(20 * math.acosh(2 * math.cos(math.pi / 10) + 1),
                                      rel=1e-15)
        assert mg(3) == pytest.approx(MG_3, rel=1e-14)

    def test_agrees_with_perimeter_formula(self):
        for g in range(2, 51):
            reference = perim_regular(8 * g - 4, 4 * math.pi * (g - 1))
            assert abs(mg(g) - reference) / mg(g) < 1e-12

    def test_right_angle_identity(self):
        for g in range(2, 51):
            theta = interior_angle(8 * g - 4, 4 * math.pi * (g - 1))
            assert abs(theta - math.pi / 2) < 1e-12

    @pytest.mark.parametrize("g", [0, 1, -3])
    def test_domain_errors(self, g):
        with pytest.raises(DomainError):
            mg(g)


class TestThresholdAngle:
    def test_hexagon_is_right_angle(self):
        assert threshold_angle(6) == pytest.approx(math.pi / 2, abs=1e-15)

    def test_square(self):
        assert threshold_angle(4) == pytest.approx(math.acos(math.sqrt(2) - 1), rel=1e-15)
        assert threshold_angle(4) == pytest.approx(THRESHOLD_4, rel=1e-14)

    def test_twelve_gon(self):
        assert threshold_angle(12) == pytest.approx(THRESHOLD_12, rel=1e-14)
        assert -1 + 2 * math.sin(math.pi / 12) == pytest.approx(-0.48236, abs=1e-5)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            threshold_angle(2)


class TestTypes:
    def test_polygon_properties(self):
        p = RegularPolygon(12, 4 * math.pi)
        assert p.interior_angle == pytest.approx(math.pi / 2, rel=1e-15)
        assert p.perimeter == pytest.approx(MG_2, rel=1e-12)
        assert not p.is_degenerate
        assert RegularPolygon(8, 0.0).is_degenerate

    def test_polygon_validation(self):
        with pytest.raises(DomainError):
            RegularPolygon(8, 6 * math.pi)
        with pytest.raises(DomainError):
            RegularPolygon(2, 0.1)

    def test_genus_params(self):
        gp = GenusParams(3)
        assert gp.sides == 20
        assert gp.sides % 8 == 4
        assert gp.area_total == pytest.approx(8 * math.pi, rel=1e-15)
        assert gp.polygon().interior_angle == pytest.approx(math.pi / 2, abs=1e-12)
        with pytest.raises(DomainError):
            GenusParams(1)
