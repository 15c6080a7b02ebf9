"""Independent reference values for cross-checking the quadrature engine.

Nothing on an evaluation path imports this module; only the check suites and
the tests do.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional

from .bessel_base import bessel_value, reciprocal_gamma
from .config import QuadratureConfig
from .domain import NU_MAX, BesselKind, check_argument, check_order, distance_to_integer, sin_pi
from .errors import ConditioningError, DomainError, SeriesNonConvergenceError

logger = logging.getLogger(__name__)

SERIES_T_MAX = 20.0
_SERIES_MAX_TERMS = 500
_INTEGER_OFFSET = 1e-3


@dataclass(frozen=True)
class OracleConfig:
    series_tol: float = 1e-15
    fd_step: float = 0.05
    richardson_levels: int = 2

    def __post_init__(self):
        if not self.series_tol > 0:
            raise ValueError(f"series_tol={self.series_tol} must be positive")
        if not 0 < self.fd_step <= 0.2:
            raise ValueError(f"fd_step={self.fd_step} must lie in (0, 0.2]")
        if self.richardson_levels < 1:
            raise ValueError(f"richardson_levels={self.richardson_levels} must be at least 1")


DEFAULT_ORACLE = OracleConfig()


def series_bessel(kind: BesselKind, nu: float, t: float, ocfg: Optional[OracleConfig] = None) -> float:
    """Ascending power series of J_ν(t) or I_ν(t).

    Each term (t/2)^{ν+2k}/(k! Γ(ν+k+1)) uses the reciprocal gamma, so the
    leading terms of negative integer orders vanish instead of dividing by a
    pole.
    """
    kind = BesselKind(kind)
    ocfg = ocfg or DEFAULT_ORACLE
    if kind not in (BesselKind.J, BesselKind.I):
        raise DomainError(f"power series oracle covers J and I only, got {kind.value}")
    check_order(nu)
    check_argument(t)
    if t > SERIES_T_MAX:
        raise ConditioningError(f"t={t} exceeds {SERIES_T_MAX:g} where the series cancels catastrophically")
    sign = -1.0 if kind is BesselKind.J else 1.0
    half_t = 0.5 * t
    log_half_t = math.log(half_t)
    # zero terms of negative integer orders must not stop the sum
    min_terms = max(half_t, -nu) + 1
    total = 0.0
    for k in range(_SERIES_MAX_TERMS):
        term = sign ** k * math.exp((nu + 2 * k) * log_half_t - math.lgamma(k + 1)) * reciprocal_gamma(nu + k + 1)
        total += term
        if k > min_terms and abs(term) <= ocfg.series_tol * abs(total):
            return total
    raise SeriesNonConvergenceError(f"{kind.value} series at nu={nu} t={t} did not settle")


def _k_connection(nu: float, t: float, ocfg: OracleConfig) -> float:
    i_minus = series_bessel(BesselKind.I, -nu, t, ocfg)
    i_plus = series_bessel(BesselKind.I, nu, t, ocfg)
    return math.pi * (i_minus - i_plus) / (2.0 * sin_pi(nu))


def series_k(nu: float, t: float, ocfg: Optional[OracleConfig] = None) -> float:
    """K_ν(t) = π (I_{−ν} − I_ν) / (2 sin πν).

    Near integer orders the formula is averaged over ν ± δ and ν ± δ/2 and
    the two averages are Richardson-combined.
    """
    ocfg = ocfg or DEFAULT_ORACLE
    nu = abs(nu)
    if distance_to_integer(nu) >= 10 * _INTEGER_OFFSET:
        return _k_connection(nu, t, ocfg)
    averages = []
    for delta in (_INTEGER_OFFSET, 0.5 * _INTEGER_OFFSET):
        averages.append(0.5 * (_k_connection(nu + delta, t, ocfg) + _k_connection(nu - delta, t, ocfg)))
    return richardson_extrapolate(averages, order=2)


def richardson_extrapolate(values: List[float], order: int = 2, ratio: float = 2.0) -> float:
    """Eliminate h^order, h^{2·order}, ... from estimates at steps h, h/r, h/r², ...

    Args:
        values: Estimates ordered from coarsest to finest step.
        order: Leading error exponent; successive stages remove multiples of it.
        ratio: Step reduction factor between consecutive estimates.

    Returns:
        The extrapolated estimate.
    """
    if not values:
        raise ValueError("richardson_extrapolate needs at least one value")
    table = list(values)
    for stage in range(1, len(table)):
        factor = ratio ** (order * stage)
        for k in range(len(table) - 1, stage - 1, -1):
            table[k] = (factor * table[k] - table[k - 1]) / (factor - 1.0)
    return table[-1]


def fd_order_derivative(
    kind: BesselKind,
    n: int,
    nu: float,
    t: float,
    cfg: Optional[QuadratureConfig] = None,
    ocfg: Optional[OracleConfig] = None,
) -> float:
    """Central-difference estimate of ∂ⁿB/∂νⁿ for n ∈ {1, 2}, Richardson-refined."""
    kind = BesselKind(kind)
    ocfg = ocfg or DEFAULT_ORACLE
    if n not in (1, 2):
        raise DomainError(f"finite-difference oracle covers n=1 and n=2, got {n}")
    check_argument(t)
    h0 = ocfg.fd_step
    if abs(nu) + h0 > NU_MAX:
        raise DomainError(f"stencil nu±{h0} leaves |nu| <= {NU_MAX:g}")

    def value(order: float) -> float:
        return bessel_value(kind, order, t, cfg)

    centre = value(nu) if n == 2 else 0.0
    estimates = []
    for level in range(ocfg.richardson_levels + 1):
        h = h0 / 2 ** level
        if n == 1:
            estimates.append((value(nu + h) - value(nu - h)) / (2.0 * h))
        else:
            estimates.append((value(nu + h) - 2.0 * centre + value(nu - h)) / (h * h))
    return richardson_extrapolate(estimates, order=2)
