import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lbk.kernel import (
    IntegralParams,
    closed_form_dI_dR,
    closed_form_I,
    i00_series_partial,
    i_phase,
    lock_closed_form,
    mult_theorem_partial,
    poisson_closed_form,
)
from lbk.specfun import factorial_ratio, spherical_bessel_j

FOUR_OVER_PI = 1.2732395447351628


class TestIPhase:
    @pytest.mark.parametrize("k, want", [
        (0, 1 + 0j), (1, 1j), (2, -1 + 0j), (3, -1j),
        (4, 1 + 0j), (-1, -1j), (-2, -1 + 0j), (-7, 1j),
    ])
    def test_table(self, k, want):
        assert i_phase(k) == want

    @given(st.integers(-1000, 1000))
    def test_period_four(self, k):
        assert i_phase(k + 4) == i_phase(k)
        assert abs(i_phase(k)) == 1.0


class TestIntegralParams:
    @pytest.mark.parametrize("n, m, alpha, R", [
        (-1, 0, 1.0, 1.0), (2, 3, 1.0, 1.0), (2, -3, 1.0, 1.0),
        (2, 1, -0.1, 1.0), (2, 1, 3.2, 1.0), (2, 1, 1.0, -1.0),
        (2, 1, math.nan, 1.0), (2, 1, 1.0, math.nan),
    ])
    def test_invalid(self, n, m, alpha, R):
        with pytest.raises(ValueError):
            IntegralParams(n, m, alpha, R)

    def test_valid_boundaries(self):
        IntegralParams(0, 0, 0.0, 0.0)
        IntegralParams(3, -3, math.pi, 100.0)


class TestClosedFormI:
    def test_base_case_value(self):
        # n = m = 0: 2 j_0(pi/2) = 4/pi for any alpha
        for alpha in (0.0, 1.0, 2.5, math.pi):
            got = closed_form_I(IntegralParams(0, 0, alpha, math.pi / 2))
            assert got.imag == 0.0
            assert got.real == pytest.approx(FOUR_OVER_PI, rel=1e-15)

    def test_vanishes_at_origin_for_positive_degree(self):
        assert closed_form_I(IntegralParams(1, 0, 0.5, 0.0)) == 0.0

    def test_frozen_case(self):
        # 2 i P_2^1(1/2) j_2(2); mpmath 40-digit oracle
        got = closed_form_I(IntegralParams(2, 1, math.pi / 3, 2.0))
        assert got.real == 0.0
        assert got.imag == pytest.approx(-0.5155828956372273, rel=1e-13)

    def test_frozen_high_order_case(self):
        got = closed_form_I(IntegralParams(12, -7, 2.1, 30.0))
        assert got.imag == pytest.approx(-4.5565269915099733e-10, rel=1e-11)

    @given(st.integers(0, 20), st.data(),
           st.floats(0.01, math.pi - 0.01), st.floats(0.0, 50.0))
    @settings(max_examples=120, deadline=None)
    def test_negative_order_symmetry(self, n, data, alpha, R):
        m = data.draw(st.integers(0, n))
        plus = closed_form_I(IntegralParams(n, m, alpha, R))
        minus = closed_form_I(IntegralParams(n, -m, alpha, R))
        want = plus / factorial_ratio(n, m)
        assert minus == pytest.approx(want, rel=1e-12, abs=1e-300)

    @given(st.integers(0, 20), st.data(),
           st.floats(0.05, math.pi - 0.05), st.floats(0.0, 50.0))
    @settings(max_examples=120, deadline=None)
    def test_reflection_in_alpha(self, n, data, alpha, R):
        m = data.draw(st.integers(-n, n))
        direct = closed_form_I(IntegralParams(n, m, alpha, R))
        mirror = closed_form_I(IntegralParams(n, m, math.pi - alpha, R))
        sign = 1.0 if (n + m) % 2 == 0 else -1.0
        assert mirror == pytest.approx(sign * direct, rel=1e-10, abs=1e-250)

    def test_alpha_independence_is_bitwise_at_00(self):
        for R in (0.0, 2.0, 37.5):
            vals = {closed_form_I(IntegralParams(0, 0, a, R))
                    for a in (0.1, 0.9, 1.7, 3.0)}
            assert len(vals) == 1


class TestClosedFormDIdR:
    def test_base_case(self):
        got = closed_form_dI_dR(IntegralParams(0, 0, 0.77, math.pi))
        assert got.real == pytest.approx(-2.0 / math.pi, rel=1e-14)
        assert got.imag == 0.0

    def test_zero_at_origin(self):
        assert closed_form_dI_dR(IntegralParams(2, 2, math.pi / 2, 0.0)) == 0.0

    def test_matches_finite_difference(self):
        h = 1e-6
        p = IntegralParams(2, 1, math.pi / 3, 2.0)
        fd = (closed_form_I(IntegralParams(2, 1, math.pi / 3, 2.0 + h))
              - closed_form_I(IntegralParams(2, 1, math.pi / 3, 2.0 - h))) / (2 * h)
        assert closed_form_dI_dR(p) == pytest.approx(fd, rel=1e-8)


class TestLockClosedForm:
    def test_goldens(self):
        assert lock_closed_form(0, 0, math.pi / 2, 1) == pytest.approx(
            FOUR_OVER_PI + 0j, rel=1e-15)
        assert lock_closed_form(1, 1, 0.0, 1) == pytest.approx(
            -4.0 / 3.0 + 0j, rel=1e-15)
        # mpmath oracle: 2 (-i)^3 * 6 * j_2(3)/3
        got = lock_closed_form(2, 1, 3.0, -1)
        assert got.real == 0.0
        assert got.imag == pytest.approx(1.1945499883029342, rel=1e-13)
        assert lock_closed_form(2, 1, 3.0, 1) == got.conjugate()

    def test_order_sign_irrelevant(self):
        assert lock_closed_form(5, -3, 2.0, 1) == lock_closed_form(5, 3, 2.0, 1)

    def test_finite_at_origin(self):
        # n > |m|: j_n(R)/R^{|m|} -> 0;  n = |m|: 1/(2n+1)!!
        assert lock_closed_form(4, 2, 0.0, 1) == 0.0
        want = 2.0 * factorial_ratio(2, 2) / 15.0  # (2 i^4) 4!/0! / (5!!)
        assert lock_closed_form(2, 2, 0.0, 1) == pytest.approx(want, rel=1e-14)

    def test_errors(self):
        with pytest.raises(ValueError):
            lock_closed_form(2, 1, 1.0, 0)
        with pytest.raises(ValueError):
            lock_closed_form(2, 3, 1.0, 1)
        with pytest.raises(ValueError):
            lock_closed_form(2, 1, -1.0, 1)


class TestPoissonClosedForm:
    def test_goldens(self):
        assert abs(poisson_closed_form(0, math.pi)) <= 1e-15
        assert poisson_closed_form(0, 0.0) == 2.0
        # 2 j_1(2), elementary sin/cos form
        assert poisson_closed_form(1, 2.0) == pytest.approx(
            0.8707955499599832, rel=1e-13)

    def test_zero_argument_limit(self):
        # 2^{s+1} s!/(2s+1)!!
        assert poisson_closed_form(3, 0.0) == pytest.approx(
            2.0**4 * 6.0 / 105.0, rel=1e-14)

    def test_errors(self):
        with pytest.raises(OverflowError):
            poisson_closed_form(151, 1.0)
        with pytest.raises(ValueError):
            poisson_closed_form(-1, 1.0)
        with pytest.raises(ValueError):
            poisson_closed_form(2, -1.0)


class TestSeriesPartials:
    def test_alpha_zero_is_single_term(self):
        for R in (0.0, 1.3, 9.0):
            for S in (0, 3, 40):
                assert mult_theorem_partial(R, 0.0, S) == spherical_bessel_j(0, R)

    def test_converges_to_j0(self):
        got = mult_theorem_partial(2.0, math.pi / 6, 40)
        assert got == pytest.approx(math.sin(2.0) / 2.0, abs=1e-12)

    def test_zero_radius(self):
        assert mult_theorem_partial(0.0, 0.7, 5) == 1.0
        assert i00_series_partial(0.0, 0.7, 3) == 2.0 + 0.0j

    def test_i00_converges_to_2j0(self):
        assert abs(i00_series_partial(math.pi, math.pi / 6, 40)) <= 1e-10
        got = i00_series_partial(2.0, math.pi / 4, 40)
        assert got.imag == 0.0
        assert got.real == pytest.approx(math.sin(2.0), abs=1e-10)

    def test_i00_is_twice_mult_series(self):
        for (R, alpha, S) in ((2.0, 0.5, 7), (9.5, 0.2, 31), (0.4, 0.78, 3)):
            assert i00_series_partial(R, alpha, S) == complex(
                2.0 * mult_theorem_partial(R, alpha, S), 0.0)

    def test_error_decreases_with_order(self):
        # monotone decrease beyond the first partial sum that is below 1e-3,
        # down to the rounding floor
        target = math.sin(7.0) / 7.0
        errs = [abs(mult_theorem_partial(7.0, 0.6, S) - target)
                for S in range(45)]
        started = False
        for prev, cur in zip(errs, errs[1:]):
            if not started and prev < 1e-3:
                started = True
            if started:
                assert cur <= prev * 1.01 + 1e-15
        assert errs[40] <= 1e-12

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            mult_theorem_partial(1.0, math.pi / 2, 10)
        with pytest.raises(ValueError):
            mult_theorem_partial(1.0, 2.0, 10)
        with pytest.raises(ValueError):
            mult_theorem_partial(1.0, -0.1, 10)
        with pytest.raises(ValueError):
            mult_theorem_partial(1.0, 0.3, 201)
        with pytest.raises(ValueError):
            i00_series_partial(-1.0, 0.3, 10)
