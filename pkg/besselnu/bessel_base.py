"""Base Bessel functions and the gamma family used around them."""

import math
from typing import Optional

from .config import QuadratureConfig
from .domain import BesselKind, BesselPoint, DerivativeRequest, cos_pi, sin_pi
from .errors import DomainError, PoleError
from .order_derivatives import derivative

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)
_DIGAMMA_SHIFT = 10.0


def bessel(point: BesselPoint, cfg: Optional[QuadratureConfig] = None) -> float:
    """J_ν(t), Y_ν(t), I_ν(t) or K_ν(t); K is evaluated at |ν|."""
    return derivative(DerivativeRequest(point.kind, 0, point.nu, point.t), cfg).value


def bessel_value(kind: BesselKind, nu: float, t: float, cfg: Optional[QuadratureConfig] = None) -> float:
    return bessel(BesselPoint(BesselKind(kind), nu, t), cfg)


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def _lanczos_sum(z: float) -> float:
    total = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        total += _LANCZOS_COEFFS[i] / (z + i)
    return total


def gamma(x: float) -> float:
    """Γ(x) by the Lanczos approximation, reflected below 1/2."""
    if not math.isfinite(x):
        raise DomainError(f"gamma argument {x} is not finite")
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma has a pole at x={x}")
    if x == math.floor(x) and x <= 171:
        return float(math.factorial(int(x) - 1))
    if x < 0.5:
        return math.pi / (sin_pi(x) * gamma(1.0 - x))
    z = x - 1.0
    base = z + _LANCZOS_G + 0.5
    return _SQRT_TWO_PI * base ** (z + 0.5) * math.exp(-base) * _lanczos_sum(z)


def log_gamma(x: float) -> float:
    """log Γ(x) for x > 0."""
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    if x < 0.5:
        return math.log(math.pi / (sin_pi(x) * gamma(1.0 - x)))
    z = x - 1.0
    base = z + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * math.pi) + (z + 0.5) * math.log(base) - base + math.log(_lanczos_sum(z))


def reciprocal_gamma(x: float) -> float:
    """1/Γ(x), zero at the poles."""
    if _is_nonpositive_integer(x):
        return 0.0
    return 1.0 / gamma(x)


def digamma(x: float) -> float:
    """ψ(x): upward recurrence, then the asymptotic Bernoulli series.

    Negative arguments go through ψ(x) = ψ(1 − x) − π cot(πx).
    """
    if _is_nonpositive_integer(x):
        raise PoleError(f"digamma has a pole at x={x}")
    if x < 0.0:
        return digamma(1.0 - x) - math.pi * cos_pi(x) / sin_pi(x)
    result = 0.0
    while x < _DIGAMMA_SHIFT:
        result -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (
        1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12.0))))))
    return result + math.log(x) - 0.5 / x - series
