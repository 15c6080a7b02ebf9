"""Evaluation grids: parsing `kind=J,Y;n=0,1;nu=-2:2:0.5;t=1` specs and
evaluating the cartesian product on a thread pool."""

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .config import DEFAULT_CONFIG, QuadratureConfig
from .domain import BesselKind, DerivativeRequest
from .errors import GridSpecError
from .order_derivatives import derivative
from .quadrature import QuadratureResult

logger = logging.getLogger(__name__)

GRID_KEYS = ("kind", "n", "nu", "t")
RANGE_TOLERANCE = 1e-12
MAX_RANGE_POINTS = 100_000


@dataclass(frozen=True)
class EvaluationGrid:
    kinds: Tuple[BesselKind, ...]
    n_values: Tuple[int, ...]
    nu_values: Tuple[float, ...]
    t_values: Tuple[float, ...]

    def __post_init__(self):
        for name in ("kinds", "n_values", "nu_values", "t_values"):
            if not getattr(self, name):
                raise GridSpecError(f"{name} must not be empty")

    def __len__(self) -> int:
        return len(self.kinds) * len(self.n_values) * len(self.nu_values) * len(self.t_values)

    def requests(self) -> List[DerivativeRequest]:
        """All points in kinds → n → ν → t order, validated against the domain box."""
        return [
            DerivativeRequest(kind, n, nu, t)
            for kind, n, nu, t in itertools.product(self.kinds, self.n_values, self.nu_values, self.t_values)
        ]


@dataclass(frozen=True)
class GridRow:
    request: DerivativeRequest
    result: QuadratureResult

    def as_record(self) -> Dict[str, object]:
        return {
            "kind": self.request.kind.value,
            "n": self.request.n,
            "nu": self.request.nu,
            "t": self.request.t,
            "value": self.result.value,
            "err_estimate": self.result.abs_error_estimate,
            "evaluations": self.result.evaluations,
            "converged": self.result.converged,
        }


def _parse_number(text: str, key: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise GridSpecError(f"{key}: {text!r} is not a number")
    if not math.isfinite(value):
        raise GridSpecError(f"{key}: {text!r} is not finite")
    return value


def _expand_range(item: str, key: str) -> List[float]:
    parts = item.split(":")
    if len(parts) != 3:
        raise GridSpecError(f"{key}: range {item!r} must read start:stop:step")
    start, stop, step = (_parse_number(p, key) for p in parts)
    if step <= 0 or stop < start:
        raise GridSpecError(f"{key}: range {item!r} needs step > 0 and stop >= start")
    count = math.floor((stop - start) / step + RANGE_TOLERANCE) + 1
    if count > MAX_RANGE_POINTS:
        raise GridSpecError(f"{key}: range {item!r} has {count} points")
    return [start + i * step for i in range(count)]


def _parse_values(raw: str, key: str) -> List[float]:
    values: List[float] = []
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        values.extend(_expand_range(item, key) if ":" in item else [_parse_number(item, key)])
    return values


def parse_grid(spec: str) -> EvaluationGrid:
    """Parse a grid spec into an EvaluationGrid.

    Sections are separated by ';' and read key=value. Values are comma
    separated numbers or inclusive a:b:step ranges; all four keys are required
    and none may be empty.
    """
    sections: Dict[str, str] = {}
    for section in spec.split(";"):
        section = section.strip()
        if not section:
            continue
        key, sep, raw = section.partition("=")
        key = key.strip().lower()
        if not sep or key not in GRID_KEYS:
            raise GridSpecError(f"bad section {section!r}, expected one of {', '.join(GRID_KEYS)}")
        if key in sections:
            raise GridSpecError(f"duplicate key {key!r}")
        sections[key] = raw
    missing = [key for key in GRID_KEYS if key not in sections]
    if missing:
        raise GridSpecError(f"missing keys: {', '.join(missing)}")

    kinds = []
    for item in sections["kind"].split(","):
        if item.strip():
            try:
                kinds.append(BesselKind(item.strip().upper()))
            except ValueError:
                raise GridSpecError(f"kind: unknown kind {item!r}")
    n_values = []
    for value in _parse_values(sections["n"], "n"):
        if value != int(value):
            raise GridSpecError(f"n: {value} is not an integer")
        n_values.append(int(value))
    return EvaluationGrid(
        tuple(kinds),
        tuple(n_values),
        tuple(_parse_values(sections["nu"], "nu")),
        tuple(_parse_values(sections["t"], "t")),
    )


def evaluate_grid(
    grid: EvaluationGrid,
    cfg: Optional[QuadratureConfig] = None,
    workers: int = 1,
) -> List[GridRow]:
    """Evaluate every grid point; rows come back in grid order."""
    cfg = cfg or DEFAULT_CONFIG
    requests = grid.requests()
    logger.info(f"Evaluating {len(requests)} grid points on {workers} worker(s)")
    if workers <= 1:
        return [GridRow(req, derivative(req, cfg)) for req in requests]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(derivative, req, cfg) for req in requests]
        return [GridRow(req, future.result()) for req, future in zip(requests, futures)]
