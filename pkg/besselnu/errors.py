"""Exception hierarchy for besselnu.

Every message starts with a short key ("domain", "pole", ...) followed by a
colon and the offending values, so callers and the CLI can report failures
without parsing free text.
"""


class BesselNuError(Exception):
    """Base class for all besselnu errors."""

    key = "error"

    def __init__(self, detail: str = ""):
        self.detail = detail
        message = f"{self.key}: {detail}" if detail else self.key
        super().__init__(message)


class DomainError(BesselNuError, ValueError):
    """Argument t or order ν outside the supported box."""

    key = "domain"


class OrderRangeError(BesselNuError, ValueError):
    """Derivative order n outside [0, N_MAX]."""

    key = "range"


class PoleError(BesselNuError, ValueError):
    key = "pole"


class ParameterPoleError(BesselNuError, ValueError):
    """A lower hypergeometric parameter is a non-positive integer."""

    key = "parameter pole"


class NearIntegerOrderError(BesselNuError, ValueError):
    key = "near-integer 2ν"


class ConditioningError(BesselNuError, ValueError):
    """Power series evaluated where cancellation makes it meaningless."""

    key = "conditioning"


class GridSpecError(BesselNuError, ValueError):
    key = "grid"


class IntegrandOverflowError(BesselNuError, ArithmeticError):
    """The integrand produced a non-finite sample."""

    key = "integrand overflow"


class DecayViolationError(BesselNuError, ArithmeticError):
    """A semi-infinite integrand is still large at the last node."""

    key = "decay violation"


class SeriesNonConvergenceError(BesselNuError, RuntimeError):
    key = "non-convergence"


class EndpointNonConvergenceError(BesselNuError, RuntimeError):
    """Outer quadrature of a cross-check did not settle near an endpoint."""

    key = "endpoint non-convergence"
