"""Registry of reflection formulas and cross-checks.

Each identity evaluates a left- and a right-hand side from the quadrature
engine, the closed forms or the oracles, and returns an IdentityReport with
rel_residual = |lhs − rhs| / (1 + |rhs|).
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np

from .bessel_base import bessel_value, gamma
from .closed_forms import IntegerOrderRequest, first_derivative_closed, new_integral_closed, second_derivative_reflection_rhs
from .config import DEFAULT_CONFIG, QuadratureConfig
from .domain import BesselKind, DerivativeRequest, check_argument, cos_pi, sin_pi
from .errors import DomainError, EndpointNonConvergenceError
from .hypergeometric import HypergeometricSpec, new_integral_hypergeometric, pfq
from .oracles import fd_order_derivative, series_bessel
from .order_derivatives import derivative, derivative_full_line, derivative_value, taylor_consistency
from .quadrature import integrate_doubly_infinite, integrate_finite

logger = logging.getLogger(__name__)

ENGINE_TOL = 1e-8
CLOSED_FORM_TOL = 1e-9
ORACLE_TOL = 1e-6
SERIES_TOL = 1e-10
CROSS_CHECK_TOL = 1e-6

# tighter quadrature for the finite-difference stencil values
ORACLE_QUADRATURE = QuadratureConfig(abs_tol=1e-14, rel_tol=1e-14)

_APELBLAT_OUTER = QuadratureConfig(abs_tol=1e-10, rel_tol=1e-10, max_level=10)

Sides = Tuple[float, float]


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    inputs: Dict[str, Any]
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float
    tolerance: float
    passed: bool

    @classmethod
    def from_sides(cls, identity_id: str, inputs: Dict[str, Any], lhs: float, rhs: float, tolerance: float) -> "IdentityReport":
        abs_residual = abs(lhs - rhs)
        rel_residual = abs_residual / (1.0 + abs(rhs))
        return cls(identity_id, dict(inputs), lhs, rhs, abs_residual, rel_residual, tolerance, rel_residual <= tolerance)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.identity_id,
            "inputs": self.inputs,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "error": None,
        }


@dataclass(frozen=True)
class Identity:
    identity_id: str
    description: str
    tolerance: float
    evaluate: Callable[..., Sides] = field(repr=False)


REGISTRY: Dict[str, Identity] = {}


def register(identity_id: str, description: str, tolerance: float = ENGINE_TOL):
    def decorator(func: Callable[..., Sides]) -> Callable[..., Sides]:
        REGISTRY[identity_id] = Identity(identity_id, description, tolerance, func)
        return func
    return decorator


def check_reflection(
    identity_id: str,
    params: Dict[str, Any],
    tol: Optional[float] = None,
    cfg: Optional[QuadratureConfig] = None,
) -> IdentityReport:
    """Evaluate one registered identity.

    Args:
        identity_id: Registry key such as "refl_J1".
        params: Keyword parameters of the identity (m, n, mu, nu, t, kind ...).
        tol: Pass threshold on rel_residual; the identity's default if None.
        cfg: Quadrature configuration.

    Returns:
        The populated IdentityReport.
    """
    try:
        identity = REGISTRY[identity_id]
    except KeyError:
        raise DomainError(f"unknown identity {identity_id!r}")
    cfg = cfg or DEFAULT_CONFIG
    lhs, rhs = identity.evaluate(cfg=cfg, **params)
    tolerance = identity.tolerance if tol is None else tol
    report = IdentityReport.from_sides(identity_id, params, lhs, rhs, tolerance)
    if not report.passed:
        logger.info(f"{identity_id} {params} failed: rel_residual={report.rel_residual:.3e}")
    return report


def _d(kind: BesselKind, n: int, nu: float, t: float, cfg: QuadratureConfig) -> float:
    return derivative_value(kind, n, nu, t, cfg)


def _b(kind: BesselKind, nu: float, t: float, cfg: QuadratureConfig) -> float:
    return bessel_value(kind, nu, t, cfg)


def _parity(m: int) -> float:
    return -1.0 if m % 2 else 1.0


def _k_even_sum(n: int, mu: float, t: float, cfg: QuadratureConfig) -> float:
    """Σ_k C(n,2k) (−π²)^k ∂^{n−2k}K_μ"""
    return sum(
        math.comb(n, 2 * k) * (-math.pi ** 2) ** k * _d(BesselKind.K, n - 2 * k, mu, t, cfg)
        for k in range(n // 2 + 1)
    )


def _k_odd_sum(n: int, mu: float, t: float, cfg: QuadratureConfig) -> float:
    """Σ_k C(n,2k+1) (−π²)^k ∂^{n−2k−1}K_μ"""
    return sum(
        math.comb(n, 2 * k + 1) * (-math.pi ** 2) ** k * _d(BesselKind.K, n - 2 * k - 1, mu, t, cfg)
        for k in range((n + 1) // 2)
    )


def _reflected(kind: BesselKind, n: int, nu: float, t: float, sign: float, cfg: QuadratureConfig) -> float:
    return _d(kind, n, nu, t, cfg) + sign * _d(kind, n, -nu, t, cfg)


@register("refl_J1", "∂J|_m + (−1)^m ∂J|_{−m} = π Y_m")
def _refl_j1(m: int, t: float, cfg: QuadratureConfig) -> Sides:
    return _reflected(BesselKind.J, 1, m, t, _parity(m), cfg), math.pi * _b(BesselKind.Y, m, t, cfg)


@register("refl_J2", "∂²J|_m + (−1)^{m+1} ∂²J|_{−m} = 2π ∂Y|_m + π² J_m")
def _refl_j2(m: int, t: float, cfg: QuadratureConfig) -> Sides:
    lhs = _reflected(BesselKind.J, 2, m, t, -_parity(m), cfg)
    rhs = 2 * math.pi * _d(BesselKind.Y, 1, m, t, cfg) + math.pi ** 2 * _b(BesselKind.J, m, t, cfg)
    return lhs, rhs


@register("refl_J2_closed", "∂²J|_m + (−1)^{m+1} ∂²J|_{−m} = π m! Σ Y_k (t/2)^{k−m}/(k!(m−k))")
def _refl_j2_closed(m: int, t: float, cfg: QuadratureConfig) -> Sides:
    lhs = _reflected(BesselKind.J, 2, m, t, -_parity(m), cfg)
    return lhs, second_derivative_reflection_rhs(BesselKind.J, m, t, cfg)


@register("refl_Y1", "∂Y|_m + (−1)^m ∂Y|_{−m} = −π J_m")
def _refl_y1(m: int, t: float, cfg: QuadratureConfig) -> Sides:
    return _reflected(BesselKind.Y, 1, m, t, _parity(m), cfg), -math.pi * _b(BesselKind.J, m, t, cfg)


@register("refl_Y2", "∂²Y|_m + (−1)^{m+1} ∂²Y|_{−m} = −2π ∂J|_m + π² Y_m")
def _refl_y2(m: int, t: float, cfg: QuadratureConfig) -> Sides:
    lhs = _reflected(BesselKind.Y, 2, m, t, -_parity(m), cfg)
    rhs = -2 * math.pi * _d(BesselKind.J, 1, m, t, cfg) + math.pi ** 2 * _b(BesselKind.Y, m, t, cfg)
    return lhs, rhs


@register("refl_Y2_closed", "∂²Y|_m + (−1)^{m+1} ∂²Y|_{−m} = −π m! Σ J_k (t/2)^{k−m}/(k!(m−k))")
def _refl_y2_closed(m: int, t: float, cfg: QuadratureConfig) -> Sides:
    lhs = _reflected(BesselKind.Y, 2, m, t, -_parity(m), cfg)
    return lhs, second_derivative_reflection_rhs(BesselKind.Y, m, t, cfg)


@register("refl_I_general", "∂ⁿI|_μ + (−1)^{n+1} ∂ⁿI|_{−μ} in terms of ∂ᵏK_μ")
def _refl_i_general(n: int, mu: float, t: float, cfg: QuadratureConfig) -> Sides:
    lhs = _reflected(BesselKind.I, n, mu, t, -_parity(n), cfg)
    rhs = (-2.0 / math.pi * sin_pi(mu) * _k_even_sum(n, mu, t, cfg)
           - 2.0 * cos_pi(mu) * _k_odd_sum(n, mu, t, cfg))
    return lhs, rhs


@register("refl_I1", "∂I|_m + ∂I|_{−m} = 2(−1)^{m+1} K_m")
def _refl_i1(m: int, t: float, cfg: QuadratureConfig) -> Sides:
    return _reflected(BesselKind.I, 1, m, t, 1.0, cfg), -2.0 * _parity(m) * _b(BesselKind.K, m, t, cfg)


@register("refl_I2", "∂²I|_m − ∂²I|_{−m} = 4(−1)^{m+1} ∂K|_m")
def _refl_i2(m: int, t: float, cfg: QuadratureConfig) -> Sides:
    return _reflected(BesselKind.I, 2, m, t, -1.0, cfg), -4.0 * _parity(m) * _d(BesselKind.K, 1, m, t, cfg)


@register("refl_I2_closed", "∂²I|_m − ∂²I|_{−m} = 2(−1)^{m+1} m! Σ K_k (t/2)^{k−m}/(k!(m−k))")
def _refl_i2_closed(m: int, t: float, cfg: QuadratureConfig) -> Sides:
    return _reflected(BesselKind.I, 2, m, t, -1.0, cfg), second_derivative_reflection_rhs(BesselKind.I, m, t, cfg)


@register("refl_I_half", "∂I|_{m+½} + ∂I|_{−m−½} = (2/π)(−1)^{m+1} ∂K|_{m+½}")
def _refl_i_half(m: int, t: float, cfg: QuadratureConfig) -> Sides:
    mu = m + 0.5
    lhs = _reflected(BesselKind.I, 1, mu, t, 1.0, cfg)
    return lhs, -2.0 / math.pi * _parity(m) * _d(BesselKind.K, 1, mu, t, cfg)


@register("refl_K", "∂ⁿK|_μ + (−1)^{n+1} ∂ⁿK|_{−μ} = 0")
def _refl_k(n: int, mu: float, t: float, cfg: QuadratureConfig) -> Sides:
    return _reflected(BesselKind.K, n, mu, t, -_parity(n), cfg), 0.0


@register("refl_I_integer", "∂ⁿI|_m + (−1)^{n+1} ∂ⁿI|_{−m} = 2(−1)^{m+1} Σ C(n,2k+1)(−π²)^k ∂^{n−2k−1}K_m")
def _refl_i_integer(n: int, m: int, t: float, cfg: QuadratureConfig) -> Sides:
    lhs = _reflected(BesselKind.I, n, m, t, -_parity(n), cfg)
    return lhs, -2.0 * _parity(m) * _k_odd_sum(n, m, t, cfg)


@register("refl_I_half_general", "∂ⁿI|_{m+½} + (−1)^{n+1} ∂ⁿI|_{−m−½} = (2/π)(−1)^{m+1} Σ C(n,2k)(−π²)^k ∂^{n−2k}K")
def _refl_i_half_general(n: int, m: int, t: float, cfg: QuadratureConfig) -> Sides:
    mu = m + 0.5
    lhs = _reflected(BesselKind.I, n, mu, t, -_parity(n), cfg)
    return lhs, -2.0 / math.pi * _parity(m) * _k_even_sum(n, mu, t, cfg)


@register("conn_I_integer", "I_m − I_{−m} = 0")
def _conn_i_integer(m: int, t: float, cfg: QuadratureConfig) -> Sides:
    return _b(BesselKind.I, m, t, cfg) - _b(BesselKind.I, -m, t, cfg), 0.0


@register("conn_I_half", "I_{m+½} − I_{−m−½} = (2/π)(−1)^{m+1} K_{m+½}")
def _conn_i_half(m: int, t: float, cfg: QuadratureConfig) -> Sides:
    mu = m + 0.5
    lhs = _b(BesselKind.I, mu, t, cfg) - _b(BesselKind.I, -mu, t, cfg)
    return lhs, -2.0 / math.pi * _parity(m) * _b(BesselKind.K, mu, t, cfg)


@register("closed_D1", "∂B/∂ν at ν = m from quadrature and from finite sums", CLOSED_FORM_TOL)
def _closed_d1(kind: str, m: int, t: float, cfg: QuadratureConfig) -> Sides:
    kind = BesselKind.parse(kind)
    return _d(kind, 1, m, t, cfg), first_derivative_closed(IntegerOrderRequest(kind, m, t), cfg)


def _first_moment(nu: float, t: float, cfg: QuadratureConfig) -> float:
    """∫ x e^{νx − t cosh x} dx over the real line by quadrature."""
    check_argument(t)
    return integrate_doubly_infinite(lambda x: x * np.exp(nu * x - t * np.cosh(x)), cfg).value


@register("new_integral", "∫ x e^{mx − t cosh x} dx against its finite-sum closed form", CLOSED_FORM_TOL)
def _new_integral(m: int, t: float, cfg: QuadratureConfig) -> Sides:
    return _first_moment(m, t, cfg), new_integral_closed(m, t, cfg)


@register("k_full_line", "half-line and full-line forms of ∂ⁿK agree")
def _k_full_line(n: int, nu: float, t: float, cfg: QuadratureConfig) -> Sides:
    req = DerivativeRequest(BesselKind.K, n, nu, t)
    return derivative(req, cfg).value, derivative_full_line(req, cfg).value


@register("taylor", "Taylor sum of order derivatives at ν₀ reproduces B_ν", ORACLE_TOL)
def _taylor(kind: str, nu0: float, nu: float, t: float, cfg: QuadratureConfig, terms: int = 9) -> Sides:
    kind = BesselKind.parse(kind)
    return taylor_consistency(kind, nu0, nu, t, terms, cfg), _b(kind, nu, t, cfg)


@register("fd_oracle", "quadrature ∂ⁿB against Richardson-refined central differences", ORACLE_TOL)
def _fd_oracle(kind: str, n: int, nu: float, t: float, cfg: QuadratureConfig) -> Sides:
    kind = BesselKind.parse(kind)
    return _d(kind, n, nu, t, cfg), fd_order_derivative(kind, n, nu, t, ORACLE_QUADRATURE)


@register("series_oracle", "integral representation of B_ν against the ascending series", SERIES_TOL)
def _series_oracle(kind: str, nu: float, t: float, cfg: QuadratureConfig) -> Sides:
    kind = BesselKind.parse(kind)
    return _b(kind, nu, t, cfg), series_bessel(kind, nu, t)


@register("pfq_bessel", "I_ν(t) = (t/2)^ν / Γ(ν+1) · ₀F₁(; ν+1; t²/4)", CROSS_CHECK_TOL)
def _pfq_bessel(nu: float, t: float, cfg: QuadratureConfig) -> Sides:
    series = pfq(HypergeometricSpec((), (nu + 1.0,), 0.25 * t * t))
    return (0.5 * t) ** nu / gamma(nu + 1.0) * series, _b(BesselKind.I, nu, t, cfg)


@register("new_integral_hyp", "∫ x e^{νx − t cosh x} dx against its hypergeometric form", CROSS_CHECK_TOL)
def _new_integral_hyp(nu: float, t: float, cfg: QuadratureConfig) -> Sides:
    return _first_moment(nu, t, cfg), new_integral_hypergeometric(nu, t, cfg)


def _pointwise(func: Callable[[float], float]) -> Callable[[np.ndarray], np.ndarray]:
    def vectorised(x: np.ndarray) -> np.ndarray:
        return np.array([func(float(v)) for v in x], dtype=float)
    return vectorised


def _apelblat_rhs(kind: BesselKind, nu: float, t: float, cfg: QuadratureConfig) -> float:
    if kind is BesselKind.J:
        weight, outer_kind = math.pi * nu, BesselKind.Y
    else:
        weight, outer_kind = -2.0 * nu, BesselKind.K

    # u = sin²θ turns tanθ dθ on [0, π/4] into du / (2(1 − u)) on [0, 1/2]
    def near_zero(u: float) -> float:
        return _b(outer_kind, 0.0, t * u, cfg) * _b(kind, nu, t * (1.0 - u), cfg) / (2.0 * (1.0 - u))

    # u = cos²θ turns tanθ dθ on [π/4, π/2] into du / (2u) on [0, 1/2]
    def near_right_angle(u: float) -> float:
        return _b(outer_kind, 0.0, t * (1.0 - u), cfg) * _b(kind, nu, t * u, cfg) / (2.0 * u)

    panels = (
        integrate_finite(_pointwise(near_zero), 0.0, 0.5, _APELBLAT_OUTER),
        integrate_finite(_pointwise(near_right_angle), 0.0, 0.5, _APELBLAT_OUTER),
    )
    for panel in panels:
        if not panel.converged:
            raise EndpointNonConvergenceError(
                f"{kind.value} nu={nu} t={t}: outer error estimate {panel.abs_error_estimate:.3e}"
            )
    return weight * sum(panel.value for panel in panels)


def apelblat_check(
    kind: BesselKind,
    nu: float,
    t: float,
    tol: float = CROSS_CHECK_TOL,
    cfg: Optional[QuadratureConfig] = None,
) -> IdentityReport:
    """∂J/∂ν and ∂I/∂ν against their single-integral forms over θ ∈ (0, π/2)."""
    kind = BesselKind(kind)
    cfg = cfg or DEFAULT_CONFIG
    if kind not in (BesselKind.J, BesselKind.I):
        raise DomainError(f"cross-check defined for J and I, got {kind.value}")
    if not nu > 0:
        raise DomainError(f"nu={nu} must be positive")
    check_argument(t)
    lhs = _d(kind, 1, nu, t, cfg)
    rhs = _apelblat_rhs(kind, nu, t, cfg)
    return IdentityReport.from_sides("apelblat", {"kind": kind.value, "nu": nu, "t": t}, lhs, rhs, tol)
