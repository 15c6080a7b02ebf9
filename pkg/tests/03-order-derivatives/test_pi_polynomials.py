import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from besselnu.errors import OrderRangeError
from besselnu.order_derivatives import pi_polynomials


def test_low_orders():
    zero = pi_polynomials(0)
    assert zero.p == (1.0,)
    assert zero.q == (0.0,)
    one = pi_polynomials(1)
    assert one.p == (0.0, -1.0)
    assert one.q == (math.pi,)
    two = pi_polynomials(2)
    assert two.p == (-math.pi ** 2, 0.0, 1.0)
    assert two.q == (0.0, -2.0 * math.pi)


@pytest.mark.parametrize("n", range(9))
def test_degrees(n):
    pair = pi_polynomials(n)
    assert len(pair.p) - 1 == n
    if n:
        assert len(pair.q) - 1 == n - 1
        assert pair.q[-1] != 0.0


@pytest.mark.parametrize("n", range(9))
def test_matches_complex_power(n):
    pair = pi_polynomials(n)
    x = np.linspace(-3.0, 3.0, 13)
    p, q = pair.evaluate(x)
    expected = (1j * math.pi - x) ** n
    np.testing.assert_allclose(p, expected.real, rtol=1e-12, atol=1e-12 * (math.pi ** 2 + 9.0) ** (n / 2))
    np.testing.assert_allclose(q, expected.imag, rtol=1e-12, atol=1e-12 * (math.pi ** 2 + 9.0) ** (n / 2))


@settings(max_examples=60, deadline=None)
@given(n=st.integers(0, 8), x=st.floats(-10.0, 10.0))
def test_modulus_identity(n, x):
    p, q = pi_polynomials(n).evaluate(np.array([x]))
    modulus = (math.pi ** 2 + x * x) ** n
    assert abs(p[0] ** 2 + q[0] ** 2 - modulus) <= 1e-12 * modulus


@pytest.mark.parametrize("n", [-1, 9, 2.0])
def test_order_range(n):
    with pytest.raises(OrderRangeError, match="range"):
        pi_polynomials(n)
