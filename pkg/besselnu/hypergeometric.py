"""Generalized hypergeometric series and the hypergeometric form of
∫ x e^{νx − t cosh x} dx over the real line."""

import logging
import math
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from .bessel_base import bessel_value, digamma, gamma
from .config import QuadratureConfig
from .domain import BesselKind, check_argument, cos_pi, distance_to_integer, sin_pi
from .errors import ConditioningError, DomainError, NearIntegerOrderError, ParameterPoleError, SeriesNonConvergenceError

logger = logging.getLogger(__name__)

MAX_ARGUMENT = 400.0
MAX_TERMS = 100_000
_TERM_RTOL = 1e-16
_SETTLED_TERMS = 3
_MIN_HALF_ORDER_GAP = 0.05
# I_{±ν} carry about 1e-12 relative error, so this keeps the result near 1e-6
_MAX_CANCELLATION = 1e6


@dataclass(frozen=True)
class HypergeometricSpec:
    """pFq(upper; lower; argument) with p ≤ q."""

    upper: Tuple[float, ...]
    lower: Tuple[float, ...]
    argument: float

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(float(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(float(b) for b in self.lower))
        if len(self.upper) > len(self.lower):
            raise DomainError(f"p={len(self.upper)} exceeds q={len(self.lower)}")
        for b in self.lower:
            if b <= 0 and b == int(b):
                raise ParameterPoleError(f"lower parameter {b} is a non-positive integer")
        if not math.isfinite(self.argument) or abs(self.argument) > MAX_ARGUMENT:
            raise DomainError(f"|argument|={abs(self.argument)} exceeds series budget {MAX_ARGUMENT:g}")


def series_terms(spec: HypergeometricSpec) -> Iterator[float]:
    """Yield the terms of the series, starting with the constant 1."""
    term = 1.0
    k = 0
    yield term
    while True:
        ratio = spec.argument / (k + 1)
        for a in spec.upper:
            ratio *= a + k
        for b in spec.lower:
            ratio /= b + k
        term *= ratio
        k += 1
        yield term


def pfq(spec: HypergeometricSpec) -> float:
    total = 0.0
    settled = 0
    for index, term in enumerate(series_terms(spec)):
        total += term
        if term == 0.0 and index > 0:
            return total
        if abs(term) <= _TERM_RTOL * abs(total):
            settled += 1
            if settled == _SETTLED_TERMS:
                return total
        else:
            settled = 0
        if index >= MAX_TERMS:
            break
    raise SeriesNonConvergenceError(
        f"{len(spec.upper)}F{len(spec.lower)} at z={spec.argument} exceeded {MAX_TERMS} terms"
    )


def new_integral_hypergeometric(nu: float, t: float, cfg: Optional[QuadratureConfig] = None) -> float:
    """∫_{−∞}^{∞} x e^{νx − t cosh x} dx for 2ν away from the integers.

    A ₃F₄ and two ₂F₃ series in t² combined with I_{±ν}(t), ψ(ν) and Γ(±ν).
    """
    check_argument(t)
    if distance_to_integer(2.0 * nu) < _MIN_HALF_ORDER_GAP:
        raise NearIntegerOrderError(f"2nu={2.0 * nu} is within {_MIN_HALF_ORDER_GAP} of an integer")
    z2 = t * t
    if z2 > MAX_ARGUMENT:
        raise DomainError(f"t={t} puts t^2 beyond the series budget {MAX_ARGUMENT:g}")

    i_plus = bessel_value(BesselKind.I, nu, t, cfg)
    i_minus = bessel_value(BesselKind.I, -nu, t, cfg)
    csc = 1.0 / sin_pi(nu)
    cot = cos_pi(nu) * csc
    half_t = 0.5 * t

    f34 = pfq(HypergeometricSpec((1.0, 1.0, 1.5), (2.0, 2.0, 2.0 - nu, 2.0 + nu), z2))
    bracket_terms = (z2 / (4.0 * (1.0 - nu * nu)) * f34, math.log(half_t), -digamma(nu), -0.5 / nu)
    bracket = sum(bracket_terms)
    f23_plus = pfq(HypergeometricSpec((nu, 0.5 + nu), (1.0 + nu, 1.0 + nu, 1.0 + 2.0 * nu), z2))
    f23_minus = pfq(HypergeometricSpec((-nu, 0.5 - nu), (1.0 - nu, 1.0 - nu, 1.0 - 2.0 * nu), z2))

    outer = math.pi * csc
    parts = (
        outer * math.pi * cot * i_plus,
        -outer * (i_plus + i_minus) * bracket,
        0.5 * i_minus * gamma(-nu) ** 2 * half_t ** (2.0 * nu) * f23_plus,
        -0.5 * i_plus * gamma(nu) ** 2 * half_t ** (-2.0 * nu) * f23_minus,
    )
    value = sum(parts)
    scale = max(max(abs(p) for p in parts), abs(outer * (i_plus + i_minus)) * max(abs(b) for b in bracket_terms))
    logger.debug(f"new integral nu={nu} t={t}: parts={[f'{p:.6e}' for p in parts]} value={value:.6e}")
    if scale > _MAX_CANCELLATION * abs(value):
        raise ConditioningError(
            f"nu={nu} t={t}: terms of size {scale:.3e} cancel to {value:.3e}"
        )
    return value
