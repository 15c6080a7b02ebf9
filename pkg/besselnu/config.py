"""Configuration for quadrature and logging."""

import logging
import os
import sys
from dataclasses import dataclass, replace
from typing import Mapping, Optional

MAX_LEVEL_ENV = "BESSELNU_MAX_LEVEL"
LOG_LEVEL_ENV = "BESSELNU_LOG_LEVEL"

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

_LEVEL_CAP = 16


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and refinement budget of the double-exponential engine.

    Args:
        abs_tol: Absolute error target.
        rel_tol: Relative error target.
        max_level: Number of step halvings allowed after h = 1.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_level: int = 12

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError(
                f"tolerances must be positive: abs_tol={self.abs_tol}, rel_tol={self.rel_tol}"
            )
        if not 1 <= self.max_level <= _LEVEL_CAP:
            raise ValueError(f"max_level={self.max_level} must lie in [1, {_LEVEL_CAP}]")

    def target(self, estimate: float) -> float:
        """Error bound an estimate of the given size has to meet."""
        return max(self.abs_tol, self.rel_tol * abs(estimate))

    def with_tolerance(self, tol: float) -> "QuadratureConfig":
        return replace(self, abs_tol=tol, rel_tol=tol)

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "QuadratureConfig":
        """Build the default config, honouring BESSELNU_MAX_LEVEL."""
        environ = os.environ if environ is None else environ
        raw = environ.get(MAX_LEVEL_ENV)
        if raw is None or raw.strip() == "":
            return cls()
        try:
            level = int(raw)
        except ValueError:
            raise ValueError(f"{MAX_LEVEL_ENV} must be an integer, got {raw!r}")
        return cls(max_level=level)


DEFAULT_CONFIG = QuadratureConfig()


def configure_logging(level: Optional[str] = None) -> None:
    """Send diagnostics to stderr so stdout stays a clean data stream."""
    if level is None:
        level = os.environ.get(LOG_LEVEL_ENV, "WARNING")
    numeric = getattr(logging, str(level).upper(), None)
    if not isinstance(numeric, int):
        raise ValueError(f"unknown log level: {level}")
    logging.basicConfig(level=numeric, format=LOG_FORMAT, stream=sys.stderr, force=True)
