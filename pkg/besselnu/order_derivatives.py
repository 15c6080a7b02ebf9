"""Order derivatives ∂ⁿ/∂νⁿ of J, Y, I and K from their integral representations.

J, Y and I are a finite integral over [0, π] minus a tail over [0, ∞) whose
weight is built from the real and imaginary parts of (iπ − x)ⁿ. K is a single
half-line integral. Every exponential is written with its exponent combined
so that no sample ever multiplies an overflowed factor by an underflowed one.
"""

import functools
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from .config import DEFAULT_CONFIG, QuadratureConfig
from .domain import (
    N_MAX,
    BesselKind,
    DerivativeRequest,
    check_argument,
    check_derivative_order,
    check_order,
    cos_pi,
    sin_pi,
)
from .errors import DomainError
from .quadrature import (
    QuadratureResult,
    combine,
    integrate_doubly_infinite,
    integrate_finite,
    integrate_semi_infinite,
)

logger = logging.getLogger(__name__)

_INV_PI = 1.0 / math.pi


@dataclass(frozen=True)
class PiPolynomialPair:
    """Real part p and imaginary part q of (iπ − x)ⁿ, ascending coefficients."""

    n: int
    p: Tuple[float, ...]
    q: Tuple[float, ...]

    def evaluate(self, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return P.polyval(x, self.p), P.polyval(x, self.q)


@functools.lru_cache(maxsize=None, typed=True)
def pi_polynomials(n: int) -> PiPolynomialPair:
    """Coefficients of p_n and q_n with (iπ − x)ⁿ = p_n(x) + i q_n(x).

    p_n = Σ_k C(n,2k) (−1)^{n+k} π^{2k} x^{n−2k}
    q_n = Σ_k C(n,2k+1) (−1)^{n+k+1} π^{2k+1} x^{n−2k−1}
    """
    check_derivative_order(n)
    p = [0.0] * (n + 1)
    q = [0.0] * max(n, 1)
    for k in range(n // 2 + 1):
        p[n - 2 * k] = math.comb(n, 2 * k) * (-1) ** (n + k) * math.pi ** (2 * k)
    for k in range((n + 1) // 2):
        q[n - 2 * k - 1] = math.comb(n, 2 * k + 1) * (-1) ** (n + k + 1) * math.pi ** (2 * k + 1)
    return PiPolynomialPair(n, tuple(p), tuple(q))


def _power(x: np.ndarray, n: int) -> np.ndarray:
    return x ** n if n else np.ones_like(x)


def _j_parts(n: int, nu: float, t: float, cfg: QuadratureConfig) -> QuadratureResult:
    shift = n * math.pi / 2
    s, c = sin_pi(nu), cos_pi(nu)
    poly = pi_polynomials(n)

    def finite(x):
        return _power(x, n) * np.cos(t * np.sin(x) - nu * x - shift)

    def tail(x):
        p, q = poly.evaluate(x)
        return np.exp(-t * np.sinh(x) - nu * x) * (p * s + q * c)

    return combine(
        (_INV_PI, integrate_finite(finite, 0.0, math.pi, cfg)),
        (-_INV_PI, integrate_semi_infinite(tail, cfg)),
    )


def _y_parts(n: int, nu: float, t: float, cfg: QuadratureConfig) -> QuadratureResult:
    shift = n * math.pi / 2
    s, c = sin_pi(nu), cos_pi(nu)
    poly = pi_polynomials(n)

    def finite(x):
        return _power(x, n) * np.sin(t * np.sin(x) - nu * x - shift)

    def tail(x):
        p, q = poly.evaluate(x)
        damping = t * np.sinh(x)
        return _power(x, n) * np.exp(nu * x - damping) + np.exp(-nu * x - damping) * (p * c - q * s)

    return combine(
        (_INV_PI, integrate_finite(finite, 0.0, math.pi, cfg)),
        (-_INV_PI, integrate_semi_infinite(tail, cfg)),
    )


def _i_parts(n: int, nu: float, t: float, cfg: QuadratureConfig) -> QuadratureResult:
    shift = n * math.pi / 2
    s, c = sin_pi(nu), cos_pi(nu)
    poly = pi_polynomials(n)

    def finite(x):
        return _power(x, n) * np.exp(t * np.cos(x)) * np.cos(nu * x + shift)

    def tail(x):
        p, q = poly.evaluate(x)
        return np.exp(-t * np.cosh(x) - nu * x) * (p * s + q * c)

    return combine(
        (_INV_PI, integrate_finite(finite, 0.0, math.pi, cfg)),
        (-_INV_PI, integrate_semi_infinite(tail, cfg)),
    )


def _k_parts(n: int, nu: float, t: float, cfg: QuadratureConfig) -> QuadratureResult:
    # ν → −ν maps the integrand onto (−1)ⁿ times itself bit for bit
    parity = -1.0 if n % 2 else 1.0

    def half_line(x):
        damping = t * np.cosh(x)
        return _power(x, n) * (np.exp(nu * x - damping) + parity * np.exp(-nu * x - damping))

    return integrate_semi_infinite(half_line, cfg).scaled(0.5)


_PARTS = {
    BesselKind.J: _j_parts,
    BesselKind.Y: _y_parts,
    BesselKind.I: _i_parts,
    BesselKind.K: _k_parts,
}


@functools.lru_cache(maxsize=65536)
def _cached_derivative(kind: BesselKind, n: int, nu: float, t: float, cfg: QuadratureConfig) -> QuadratureResult:
    if kind is BesselKind.K and n == 0:
        nu = abs(nu)
    return _PARTS[kind](n, nu, t, cfg)


def derivative(req: DerivativeRequest, cfg: Optional[QuadratureConfig] = None) -> QuadratureResult:
    """Evaluate ∂ⁿ/∂νⁿ of the requested Bessel function at (ν, t).

    Args:
        req: Kind, derivative order n, order ν and argument t (validated on
            construction).
        cfg: Quadrature configuration, defaults to DEFAULT_CONFIG.

    Returns:
        QuadratureResult whose value is the derivative; the error estimate
        sums the estimates of all component integrals.
    """
    cfg = cfg or DEFAULT_CONFIG
    result = _cached_derivative(req.kind, req.n, float(req.nu), float(req.t), cfg)
    if not result.converged:
        logger.warning(
            f"{req.kind.value} derivative n={req.n} nu={req.nu} t={req.t} did not converge "
            f"(error estimate {result.abs_error_estimate:.3e})"
        )
    return result


def derivative_value(kind: BesselKind, n: int, nu: float, t: float, cfg: Optional[QuadratureConfig] = None) -> float:
    return derivative(DerivativeRequest(BesselKind(kind), n, nu, t), cfg).value


def derivative_full_line(req: DerivativeRequest, cfg: Optional[QuadratureConfig] = None) -> QuadratureResult:
    """K only: (1/2)∫ xⁿ e^{νx − t cosh x} over the whole real line."""
    if req.kind is not BesselKind.K:
        raise DomainError(f"full-line form exists for K only, got {req.kind.value}")
    cfg = cfg or DEFAULT_CONFIG
    n, nu, t = req.n, float(req.nu), float(req.t)

    def full_line(x):
        return _power(x, n) * np.exp(nu * x - t * np.cosh(x))

    return integrate_doubly_infinite(full_line, cfg).scaled(0.5)


def taylor_consistency(
    kind: BesselKind,
    nu0: float,
    nu: float,
    t: float,
    terms: int,
    cfg: Optional[QuadratureConfig] = None,
) -> float:
    """Σ_{k<terms} ∂ᵏ/∂νᵏ B(ν₀, t) (ν − ν₀)ᵏ / k!.

    The expansion centre and target must be within one unit of each other and
    at most N_MAX + 1 terms are available.
    """
    check_order(nu0)
    check_order(nu)
    check_argument(t)
    if abs(nu - nu0) > 1.0:
        raise DomainError(f"|nu - nu0|={abs(nu - nu0)} must not exceed 1")
    if not 1 <= terms <= N_MAX + 1:
        raise DomainError(f"terms={terms} must lie in [1, {N_MAX + 1}]")
    step = nu - nu0
    total = 0.0
    for k in range(terms):
        total += derivative_value(kind, k, nu0, t, cfg) * step ** k / math.factorial(k)
    return total
