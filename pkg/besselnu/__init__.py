"""Order derivatives of the Bessel functions J, Y, I and K."""

from .bessel_base import bessel, bessel_value, digamma, gamma, log_gamma
from .closed_forms import IntegerOrderRequest, first_derivative_closed, new_integral_closed, second_derivative_reflection_rhs
from .config import QuadratureConfig
from .domain import BesselKind, BesselPoint, DerivativeRequest
from .hypergeometric import HypergeometricSpec, new_integral_hypergeometric, pfq
from .identities import IdentityReport, apelblat_check, check_reflection
from .order_derivatives import derivative, derivative_full_line, pi_polynomials, taylor_consistency
from .quadrature import QuadratureResult, integrate_doubly_infinite, integrate_finite, integrate_semi_infinite

__version__ = "0.1.0"

__all__ = [
    "BesselKind",
    "BesselPoint",
    "DerivativeRequest",
    "HypergeometricSpec",
    "IdentityReport",
    "IntegerOrderRequest",
    "QuadratureConfig",
    "QuadratureResult",
    "apelblat_check",
    "bessel",
    "bessel_value",
    "check_reflection",
    "derivative",
    "derivative_full_line",
    "digamma",
    "first_derivative_closed",
    "gamma",
    "integrate_doubly_infinite",
    "integrate_finite",
    "integrate_semi_infinite",
    "log_gamma",
    "new_integral_closed",
    "new_integral_hypergeometric",
    "pfq",
    "pi_polynomials",
    "second_derivative_reflection_rhs",
    "taylor_consistency",
]
