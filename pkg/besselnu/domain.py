"""Shared types and the supported (n, ν, t) box."""

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, OrderRangeError

NU_MAX = 20.0
T_MAX = 100.0
N_MAX = 8


class BesselKind(str, Enum):
    J = "J"
    Y = "Y"
    I = "I"  # noqa: E741
    K = "K"

    @classmethod
    def parse(cls, text: str) -> "BesselKind":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise DomainError(f"unknown kind {text!r}, expected one of J, Y, I, K")


def check_argument(t: float) -> None:
    if not (isinstance(t, (int, float)) and math.isfinite(t) and 0.0 < t <= T_MAX):
        raise DomainError(f"t={t} must lie in (0, {T_MAX:g}]")


def check_order(nu: float) -> None:
    if not (math.isfinite(nu) and abs(nu) <= NU_MAX):
        raise DomainError(f"nu={nu} must satisfy |nu| <= {NU_MAX:g}")


def check_derivative_order(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or not 0 <= n <= N_MAX:
        raise OrderRangeError(f"n={n} must be an integer in [0, {N_MAX}]")


@dataclass(frozen=True)
class BesselPoint:
    """A Bessel function kind evaluated at order nu and argument t."""

    kind: BesselKind
    nu: float
    t: float

    def __post_init__(self):
        object.__setattr__(self, "kind", BesselKind(self.kind))
        check_order(self.nu)
        check_argument(self.t)


@dataclass(frozen=True)
class DerivativeRequest:
    """n-th derivative with respect to the order of a Bessel function."""

    kind: BesselKind
    n: int
    nu: float
    t: float

    def __post_init__(self):
        object.__setattr__(self, "kind", BesselKind(self.kind))
        check_derivative_order(self.n)
        check_order(self.nu)
        check_argument(self.t)

    @property
    def point(self) -> BesselPoint:
        return BesselPoint(self.kind, self.nu, self.t)


def sin_pi(x: float) -> float:
    """sin(πx), exactly zero at integers."""
    n = round(x)
    r = x - n
    if r == 0.0:
        return 0.0
    s = math.sin(math.pi * r)
    return -s if n % 2 else s


def cos_pi(x: float) -> float:
    """cos(πx), exactly zero at half-integers."""
    n = round(x)
    r = x - n
    if abs(r) == 0.5:
        return 0.0
    c = math.cos(math.pi * r)
    return -c if n % 2 else c


def distance_to_integer(x: float) -> float:
    return abs(x - round(x))
