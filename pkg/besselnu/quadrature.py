"""Double-exponential quadrature.

Finite intervals use the tanh-sinh map, the half line the exp-sinh map and the
whole line is split at zero into two half lines. Each rule is a trapezoid sum
in the transformed variable; the step starts at h = 1 and is halved per level,
reusing the nodes of the previous level. Integrands receive numpy arrays of
abscissae and must return arrays of the same shape.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from .config import DEFAULT_CONFIG, QuadratureConfig
from .errors import DecayViolationError, IntegrandOverflowError

logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]

_HALF_PI = 0.5 * math.pi
_TANH_SINH_SPAN = 3.2
_EXP_SINH_SPAN = (-4.0, 3.0)
_MIN_LEVEL = 3


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    evaluations: int
    converged: bool

    def scaled(self, factor: float) -> "QuadratureResult":
        return QuadratureResult(
            factor * self.value,
            abs(factor) * self.abs_error_estimate,
            self.evaluations,
            self.converged,
        )


def combine(*parts: Tuple[float, QuadratureResult]) -> QuadratureResult:
    """Linear combination of quadrature results with summed error estimates."""
    value = 0.0
    error = 0.0
    evaluations = 0
    converged = True
    for factor, part in parts:
        value += factor * part.value
        error += abs(factor) * part.abs_error_estimate
        evaluations += part.evaluations
        converged = converged and part.converged
    return QuadratureResult(value, error, evaluations, converged)


def _samples(f: Integrand, x: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
        values = np.asarray(f(x), dtype=float)
    if values.shape != x.shape:
        values = np.broadcast_to(values, x.shape)
    if not np.all(np.isfinite(values)):
        bad = x[~np.isfinite(values)][0]
        raise IntegrandOverflowError(f"non-finite integrand sample at x={bad!r}")
    return values


def _level_nodes(s_lo: float, s_hi: float, h: float, odd_only: bool) -> np.ndarray:
    k = np.arange(math.ceil(s_lo / h), math.floor(s_hi / h) + 1)
    if odd_only:
        k = k[k % 2 == 1]
    return k * h


class _Rule:
    """A variable map x(s) with weight dx/ds, plus the integrand it feeds."""

    def __init__(self, f: Integrand, s_lo: float, s_hi: float):
        self.f = f
        self.s_lo = s_lo
        self.s_hi = s_hi

    def transform(self, s: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    def partial_sum(self, s: np.ndarray) -> Tuple[float, int]:
        x, w = self.transform(s)
        if x.size == 0:
            return 0.0, 0
        return float(np.sum(w * _samples(self.f, x))), int(x.size)


class _TanhSinh(_Rule):
    def __init__(self, f: Integrand, a: float, b: float):
        super().__init__(f, -_TANH_SINH_SPAN, _TANH_SINH_SPAN)
        self.mid = 0.5 * (a + b)
        self.half = 0.5 * (b - a)
        self.a = a
        self.b = b

    def transform(self, s):
        v = _HALF_PI * np.sinh(s)
        x = self.mid + self.half * np.tanh(v)
        w = self.half * _HALF_PI * np.cosh(s) / np.cosh(v) ** 2
        # nodes rounded onto an endpoint contribute nothing
        keep = (x > self.a) & (x < self.b)
        return x[keep], w[keep]


class _ExpSinh(_Rule):
    def __init__(self, f: Integrand):
        super().__init__(f, *_EXP_SINH_SPAN)

    def transform(self, s):
        with np.errstate(over="ignore", under="ignore"):
            x = np.exp(_HALF_PI * np.sinh(s))
            w = x * _HALF_PI * np.cosh(s)
        keep = (x > 0.0) & np.isfinite(x) & np.isfinite(w)
        return x[keep], w[keep]

    def last_node(self) -> float:
        return math.exp(_HALF_PI * math.sinh(self.s_hi))


def _refine(rules, cfg: QuadratureConfig, label: str) -> QuadratureResult:
    h = 1.0
    total = 0.0
    evaluations = 0
    for rule in rules:
        part, count = rule.partial_sum(_level_nodes(rule.s_lo, rule.s_hi, h, odd_only=False))
        total += part
        evaluations += count
    estimate = h * total
    error = math.inf
    for level in range(1, cfg.max_level + 1):
        h *= 0.5
        for rule in rules:
            part, count = rule.partial_sum(_level_nodes(rule.s_lo, rule.s_hi, h, odd_only=True))
            total += part
            evaluations += count
        refined = h * total
        error = abs(refined - estimate)
        estimate = refined
        if level >= _MIN_LEVEL and error <= cfg.target(estimate):
            return QuadratureResult(estimate, error, max(evaluations, 1), True)
    logger.debug(f"{label} quadrature stopped at max_level={cfg.max_level} with error {error:.3e}")
    return QuadratureResult(estimate, error, max(evaluations, 1), False)


def _check_decay(f: Integrand, x_last: float, cfg: QuadratureConfig) -> None:
    tail = abs(float(_samples(f, np.array([x_last]))[0]))
    if tail > cfg.abs_tol:
        raise DecayViolationError(f"|f({x_last:.3e})|={tail:.3e} exceeds abs_tol={cfg.abs_tol:.1e}")


def integrate_finite(
    f: Integrand, a: float, b: float, cfg: Optional[QuadratureConfig] = None
) -> QuadratureResult:
    """Integrate f over [a, b] with the tanh-sinh rule.

    Args:
        f: Vectorised integrand.
        a: Lower limit.
        b: Upper limit, b > a.
        cfg: Tolerances and level budget.

    Returns:
        QuadratureResult with the last two levels' difference as error estimate.
    """
    cfg = cfg or DEFAULT_CONFIG
    if not (math.isfinite(a) and math.isfinite(b) and b > a):
        raise ValueError(f"finite interval requires a < b, got [{a}, {b}]")
    return _refine([_TanhSinh(f, a, b)], cfg, "finite")


def integrate_semi_infinite(f: Integrand, cfg: Optional[QuadratureConfig] = None) -> QuadratureResult:
    """Integrate f over [0, ∞) with the exp-sinh rule."""
    cfg = cfg or DEFAULT_CONFIG
    rule = _ExpSinh(f)
    _check_decay(f, rule.last_node(), cfg)
    return _refine([rule], cfg, "semi-infinite")


def integrate_doubly_infinite(f: Integrand, cfg: Optional[QuadratureConfig] = None) -> QuadratureResult:
    """Integrate f over the whole real line as two mirrored half lines."""
    cfg = cfg or DEFAULT_CONFIG
    right = _ExpSinh(f)
    left = _ExpSinh(lambda x: f(-x))
    _check_decay(right.f, right.last_node(), cfg)
    _check_decay(left.f, left.last_node(), cfg)
    return _refine([right, left], cfg, "doubly-infinite")
