import math

import pytest

from besselnu.bessel_base import bessel_value
from besselnu.domain import BesselKind
from besselnu.errors import ConditioningError, DomainError
from besselnu.oracles import OracleConfig, fd_order_derivative, richardson_extrapolate, series_bessel, series_k
from besselnu.order_derivatives import derivative_value

J, Y, I, K = BesselKind.J, BesselKind.Y, BesselKind.I, BesselKind.K


class TestSeries:
    def test_small_argument_limit(self):
        assert series_bessel(J, 0.0, 1e-12) == pytest.approx(1.0, abs=1e-15)

    def test_i0(self):
        assert series_bessel(I, 0.0, 2.0) == pytest.approx(2.2795853023360673, rel=1e-14)

    def test_half_order(self):
        assert series_bessel(J, 0.5, math.pi / 2) == pytest.approx(2.0 / math.pi, rel=1e-14)

    def test_negative_integer_order(self):
        assert series_bessel(J, -3.0, 2.0) == pytest.approx(-series_bessel(J, 3.0, 2.0), rel=1e-13)

    def test_conditioning_guard(self):
        with pytest.raises(ConditioningError, match="conditioning"):
            series_bessel(J, 0.0, 25.0)

    def test_only_j_and_i(self):
        with pytest.raises(DomainError):
            series_bessel(K, 0.0, 1.0)

    def test_k_near_integer_order(self):
        assert series_k(0.0, 2.0) == pytest.approx(0.11389387274953344, rel=1e-8)


class TestFiniteDifference:
    def test_k_even_symmetry(self):
        assert abs(fd_order_derivative(K, 1, 0.0, 1.0)) <= 1e-8

    def test_j_at_zero_order(self):
        expected = 0.5 * math.pi * bessel_value(Y, 0.0, 2.0)
        assert fd_order_derivative(J, 1, 0.0, 2.0) == pytest.approx(expected, abs=1e-6)

    def test_i_second_derivative(self):
        assert fd_order_derivative(I, 2, 1.0, 2.0) == pytest.approx(derivative_value(I, 2, 1.0, 2.0), abs=1e-6)

    @pytest.mark.parametrize("kind", [J, I, K])
    def test_order_of_accuracy(self, kind):
        nu, t = 0.6, 1.5
        exact = derivative_value(kind, 1, nu, t)
        coarse = abs(fd_order_derivative(kind, 1, nu, t, ocfg=OracleConfig(fd_step=0.2, richardson_levels=1)) - exact)
        fine = abs(fd_order_derivative(kind, 1, nu, t, ocfg=OracleConfig(fd_step=0.1, richardson_levels=1)) - exact)
        assert fine * 4 <= coarse

    def test_stencil_must_stay_in_box(self):
        with pytest.raises(DomainError):
            fd_order_derivative(J, 1, 19.99, 1.0)

    def test_only_first_and_second(self):
        with pytest.raises(DomainError):
            fd_order_derivative(J, 3, 0.0, 1.0)


def test_richardson_removes_quadratic_error():
    # f(h) = 1 + h² sampled at h = 1, 1/2
    assert richardson_extrapolate([2.0, 1.25], order=2) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("kwargs", [{"fd_step": 0.0}, {"fd_step": 0.3}, {"richardson_levels": 0}, {"series_tol": 0.0}])
def test_oracle_config_invariants(kwargs):
    with pytest.raises(ValueError):
        OracleConfig(**kwargs)
