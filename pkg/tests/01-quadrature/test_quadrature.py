import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from besselnu.config import QuadratureConfig
from besselnu.errors import DecayViolationError, IntegrandOverflowError
from besselnu.quadrature import (
    QuadratureResult,
    combine,
    integrate_doubly_infinite,
    integrate_finite,
    integrate_semi_infinite,
)


def test_constant_on_zero_pi():
    result = integrate_finite(lambda x: np.ones_like(x), 0.0, math.pi)
    assert result.converged
    assert abs(result.value - math.pi) <= 1e-14
    assert result.evaluations >= 1


def test_exponential_on_half_line():
    result = integrate_semi_infinite(lambda x: np.exp(-x))
    assert result.converged
    assert abs(result.value - 1.0) <= 1e-13


def test_gaussian_moment_on_half_line():
    result = integrate_semi_infinite(lambda x: x * np.exp(-x * x))
    assert abs(result.value - 0.5) <= 1e-13


def test_gaussian_on_real_line():
    result = integrate_doubly_infinite(lambda x: np.exp(-x * x))
    assert result.converged
    assert abs(result.value - math.sqrt(math.pi)) <= 1e-13


def test_odd_integrand_cancels_exactly():
    result = integrate_doubly_infinite(lambda x: x * np.exp(-np.cosh(x)))
    assert result.value == 0.0


def test_endpoint_log_singularity():
    result = integrate_finite(lambda x: np.log(x), 0.0, 1.0)
    assert abs(result.value + 1.0) <= 1e-12


def test_non_decaying_tail_is_rejected():
    with pytest.raises(DecayViolationError, match="decay violation"):
        integrate_semi_infinite(lambda x: np.ones_like(x))


def test_overflowing_integrand_is_rejected():
    with pytest.raises(IntegrandOverflowError, match="integrand overflow"):
        integrate_finite(lambda x: np.exp(1000.0 * x), 0.0, 1.0)


def test_level_budget_reports_non_convergence():
    cfg = QuadratureConfig(abs_tol=1e-15, rel_tol=1e-15, max_level=2)
    result = integrate_finite(lambda x: np.cos(50.0 * x), 0.0, math.pi, cfg)
    assert not result.converged
    assert math.isfinite(result.value)


def test_evaluation_budget_bounded_by_levels():
    cfg = QuadratureConfig(max_level=5)
    result = integrate_finite(lambda x: np.sin(x), 0.0, math.pi, cfg)
    assert result.evaluations <= 6.4 * 2 ** 5 + 1


def test_deterministic():
    f = lambda x: np.exp(-2.0 * np.cosh(x)) * x ** 3
    assert integrate_semi_infinite(f) == integrate_semi_infinite(f)


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        integrate_finite(lambda x: x, 1.0, 1.0)


@settings(max_examples=25, deadline=None)
@given(a=st.floats(-3.0, 3.0), c=st.floats(-3.0, 3.0))
def test_linearity(a, c):
    f = lambda x: np.exp(-x)
    g = lambda x: x * np.exp(-x)
    combined = integrate_semi_infinite(lambda x: a * f(x) + c * g(x))
    separate = a * integrate_semi_infinite(f).value + c * integrate_semi_infinite(g).value
    assert abs(combined.value - separate) <= 1e-12 * (1.0 + abs(a) + abs(c))


def test_combine_sums_errors():
    one = QuadratureResult(1.0, 1e-13, 10, True)
    two = QuadratureResult(2.0, 2e-13, 20, False)
    total = combine((2.0, one), (-1.0, two))
    assert total.value == 0.0
    assert total.abs_error_estimate == pytest.approx(4e-13)
    assert total.evaluations == 30
    assert not total.converged


class TestConfig:
    def test_defaults(self):
        cfg = QuadratureConfig()
        assert (cfg.abs_tol, cfg.rel_tol, cfg.max_level) == (1e-12, 1e-12, 12)

    @pytest.mark.parametrize("kwargs", [
        {"abs_tol": 0.0},
        {"rel_tol": -1.0},
        {"max_level": 0},
        {"max_level": 17},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            QuadratureConfig(**kwargs)

    def test_env_override(self):
        assert QuadratureConfig.from_env({"BESSELNU_MAX_LEVEL": "9"}).max_level == 9
        assert QuadratureConfig.from_env({}).max_level == 12

    def test_env_garbage(self):
        with pytest.raises(ValueError):
            QuadratureConfig.from_env({"BESSELNU_MAX_LEVEL": "deep"})


J0_AT_2 = 0.22389077914123567
K0_AT_1 = 0.42102443824070834
K0_AT_2 = 0.11389387274953344


@pytest.mark.parametrize("f, a, b, expected, tol", [
    (lambda x: np.cos(2.0 * np.sin(x)), 0.0, math.pi, math.pi * J0_AT_2, 1e-13),
    (lambda x: np.sin(x), 0.0, math.pi, 2.0, 1e-14),
])
def test_finite_reference_values(f, a, b, expected, tol):
    result = integrate_finite(f, a, b)
    assert result.converged
    assert abs(result.value - expected) <= tol


def test_macdonald_on_half_line():
    result = integrate_semi_infinite(lambda x: np.exp(-np.cosh(x)))
    assert abs(result.value - K0_AT_1) <= 1e-13


@pytest.mark.parametrize("f, expected", [
    (lambda x: np.exp(-np.cosh(x)), 2.0 * K0_AT_1),
    (lambda x: x * np.exp(x - 2.0 * np.cosh(x)), K0_AT_2),
])
def test_real_line_reference_values(f, expected):
    result = integrate_doubly_infinite(f)
    assert result.converged
    assert abs(result.value - expected) <= 1e-13


@pytest.mark.parametrize("f", [
    lambda x: np.exp(-np.cosh(x)),
    lambda x: x * np.exp(x - 2.0 * np.cosh(x)),
    lambda x: x ** 3 * np.exp(1.5 * x - np.cosh(x)),
])
def test_real_line_is_sum_of_two_halves(f):
    cfg = QuadratureConfig()
    whole = integrate_doubly_infinite(f, cfg).value
    halves = integrate_semi_infinite(f, cfg).value + integrate_semi_infinite(lambda x: f(-x), cfg).value
    assert abs(whole - halves) <= 10 * cfg.abs_tol


def test_error_estimate_shrinks_with_level():
    f = lambda x: np.cos(2.0 * np.sin(x))
    estimates = []
    for level in range(1, 6):
        cfg = QuadratureConfig(abs_tol=1e-300, rel_tol=1e-300, max_level=level)
        estimates.append(integrate_finite(f, 0.0, math.pi, cfg).abs_error_estimate)
    for coarse, fine in zip(estimates, estimates[1:]):
        assert fine <= coarse + 4e-16
