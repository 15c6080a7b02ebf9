"""Finite-sum closed forms at integer order.

All formulas share the sum  m! Σ_{k<m} c_k B_k(t) (t/2)^{k−m} / (k!(m−k)),
which is evaluated with exact factorials up to m = 10 and in log space above.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

from .bessel_base import bessel_value, log_gamma
from .config import QuadratureConfig
from .domain import NU_MAX, BesselKind, check_argument
from .errors import DomainError

logger = logging.getLogger(__name__)

_LOG_SPACE_ABOVE = 10


@dataclass(frozen=True)
class IntegerOrderRequest:
    kind: BesselKind
    m: int
    t: float

    def __post_init__(self):
        object.__setattr__(self, "kind", BesselKind(self.kind))
        if isinstance(self.m, bool) or not isinstance(self.m, int) or abs(self.m) > NU_MAX:
            raise DomainError(f"m={self.m} must be an integer with |m| <= {NU_MAX:g}")
        check_argument(self.t)


def _sum_coefficient(m: int, k: int, half_t: float) -> float:
    """m! (t/2)^{k−m} / (k!(m−k))"""
    if m > _LOG_SPACE_ABOVE:
        log_coeff = log_gamma(m + 1) - log_gamma(k + 1) + (k - m) * math.log(half_t)
        return math.exp(log_coeff) / (m - k)
    return math.factorial(m) / math.factorial(k) * half_t ** (k - m) / (m - k)


def order_sum(
    kind: BesselKind,
    m: int,
    t: float,
    cfg: Optional[QuadratureConfig] = None,
    alternating: bool = False,
) -> float:
    """m! Σ_{k=0}^{m−1} (±1)^k B_k(t) (t/2)^{k−m} / (k!(m−k)) for m ≥ 0."""
    if m < 0:
        raise DomainError(f"order_sum requires m >= 0, got {m}")
    half_t = 0.5 * t
    total = 0.0
    for k in range(m):
        sign = -1.0 if alternating and k % 2 else 1.0
        total += sign * _sum_coefficient(m, k, half_t) * bessel_value(kind, k, t, cfg)
    return total


def first_derivative_closed(req: IntegerOrderRequest, cfg: Optional[QuadratureConfig] = None) -> float:
    """∂B/∂ν at ν = m from finite sums of integer-order functions.

    Negative m uses the sign-extended forms; K is even in ν so only the sum's
    sign changes.
    """
    m = abs(req.m)
    sign = 1.0 if req.m >= 0 else -1.0
    t = req.t
    parity = (-1.0) ** m
    if req.kind is BesselKind.J:
        outer = 1.0 if req.m >= 0 else parity
        return outer * (0.5 * math.pi * bessel_value(BesselKind.Y, m, t, cfg)
                        + sign * 0.5 * order_sum(BesselKind.J, m, t, cfg))
    if req.kind is BesselKind.Y:
        outer = 1.0 if req.m >= 0 else parity
        return outer * (-0.5 * math.pi * bessel_value(BesselKind.J, m, t, cfg)
                        + sign * 0.5 * order_sum(BesselKind.Y, m, t, cfg))
    if req.kind is BesselKind.I:
        return parity * (-bessel_value(BesselKind.K, m, t, cfg)
                         + sign * 0.5 * order_sum(BesselKind.I, m, t, cfg, alternating=True))
    return sign * 0.5 * order_sum(BesselKind.K, m, t, cfg)


def second_derivative_reflection_rhs(
    kind: BesselKind, m: int, t: float, cfg: Optional[QuadratureConfig] = None
) -> float:
    """Closed form of ∂²B/∂ν²|_m + (−1)^{m+1} ∂²B/∂ν²|_{−m} for J and Y, and
    of ∂²I/∂ν²|_m − ∂²I/∂ν²|_{−m} for I."""
    kind = BesselKind(kind)
    if m < 0:
        raise DomainError(f"second-derivative reflection needs m >= 0, got {m}")
    check_argument(t)
    if kind is BesselKind.J:
        return math.pi * order_sum(BesselKind.Y, m, t, cfg)
    if kind is BesselKind.Y:
        return -math.pi * order_sum(BesselKind.J, m, t, cfg)
    if kind is BesselKind.I:
        return 2.0 * (-1.0) ** (m + 1) * order_sum(BesselKind.K, m, t, cfg)
    raise DomainError("K has no second-derivative reflection closed form")


def new_integral_closed(m: int, t: float, cfg: Optional[QuadratureConfig] = None) -> float:
    """∫_{−∞}^{∞} x e^{mx − t cosh x} dx at integer m.

    Odd in m: the magnitude is computed from |m| so the sign flip is exact.
    """
    IntegerOrderRequest(BesselKind.K, m, t)
    if m == 0:
        return 0.0
    magnitude = order_sum(BesselKind.K, abs(m), t, cfg)
    return magnitude if m > 0 else -magnitude
