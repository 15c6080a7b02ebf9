import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from besselnu.bessel_base import digamma, gamma, log_gamma, reciprocal_gamma
from besselnu.errors import PoleError

EULER_GAMMA = 0.5772156649015329


def test_gamma_examples():
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert gamma(5.0) == 24.0
    assert gamma(-0.5) == pytest.approx(-2.0 * math.sqrt(math.pi), rel=1e-13)


@pytest.mark.parametrize("x", [0.0, -1.0, -4.0])
def test_gamma_poles(x):
    with pytest.raises(PoleError, match="pole"):
        gamma(x)
    assert reciprocal_gamma(x) == 0.0


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=0.05, max_value=30.0))
def test_gamma_matches_stdlib(x):
    assert gamma(x) == pytest.approx(math.gamma(x), rel=1e-13)


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=0.05, max_value=100.0))
def test_log_gamma_matches_stdlib(x):
    assert log_gamma(x) == pytest.approx(math.lgamma(x), rel=1e-12, abs=1e-13)


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=-9.9, max_value=9.9).filter(lambda x: abs(x - round(x)) > 1e-3))
def test_gamma_recurrence(x):
    assert gamma(x + 1.0) == pytest.approx(x * gamma(x), rel=1e-12)


def test_digamma_examples():
    assert digamma(1.0) == pytest.approx(-EULER_GAMMA, rel=1e-14)
    assert digamma(0.5) == pytest.approx(-EULER_GAMMA - 2.0 * math.log(2.0), rel=1e-14)
    assert digamma(2.0) == pytest.approx(1.0 - EULER_GAMMA, rel=1e-14)


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=-9.9, max_value=20.0).filter(lambda x: abs(x - round(x)) > 1e-3))
def test_digamma_recurrence(x):
    assert digamma(x + 1.0) == pytest.approx(digamma(x) + 1.0 / x, rel=1e-11, abs=1e-11)


def test_digamma_poles():
    with pytest.raises(PoleError):
        digamma(-3.0)
