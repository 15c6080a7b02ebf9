"""Named check suites: which identities run on which parameter grids."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Tuple

from .config import DEFAULT_CONFIG, QuadratureConfig
from .errors import BesselNuError, DomainError
from .identities import CROSS_CHECK_TOL, REGISTRY, apelblat_check, check_reflection
from .report import SuiteResult

logger = logging.getLogger(__name__)

Case = Tuple[str, Dict[str, Any]]

KINDS = ("J", "Y", "I", "K")
T_GRID = (0.5, 1.0, 2.0, 5.0, 10.0)
M_GRID = tuple(range(6))
GENERAL_N = tuple(range(5))
I_GENERAL_MU = (0.3, 0.7, 1.5, 2.5)
K_MU = (0.0, 0.5, 1.3, 2.0)
ORACLE_NU = (0.0, 0.5, 1.0, 2.7)
ORACLE_T = (0.5, 2.0, 10.0)
TAYLOR_POINTS = ((1.0, 1.3), (0.0, 0.25), (2.0, 1.8))
TAYLOR_T = (1.0, 2.0, 5.0)
HYPERGEOMETRIC_NU = (1.0 / 3.0, 0.25, 0.7)
HYPERGEOMETRIC_T = (0.5, 1.0, 2.0)
APELBLAT_NU = (0.5, 1.0, 2.0)
APELBLAT_T = (1.0, 2.0)

SUITE_NAMES = ("reflections", "closed-forms", "oracle", "hypergeometric", "taylor", "apelblat")


def _reflection_cases() -> List[Case]:
    cases: List[Case] = []
    for identity_id in ("refl_J1", "refl_J2", "refl_J2_closed", "refl_Y1", "refl_Y2", "refl_Y2_closed",
                        "refl_I1", "refl_I2", "refl_I2_closed", "refl_I_half", "conn_I_integer", "conn_I_half"):
        cases += [(identity_id, {"m": m, "t": t}) for m in M_GRID for t in T_GRID]
    cases += [("refl_I_general", {"n": n, "mu": mu, "t": t})
              for n in GENERAL_N for mu in I_GENERAL_MU for t in T_GRID]
    cases += [("refl_K", {"n": n, "mu": mu, "t": t}) for n in GENERAL_N for mu in K_MU for t in T_GRID]
    cases += [("refl_I_integer", {"n": n, "m": m, "t": t}) for n in GENERAL_N for m in range(4) for t in T_GRID]
    cases += [("refl_I_half_general", {"n": n, "m": m, "t": t})
              for n in GENERAL_N for m in range(4) for t in T_GRID]
    return cases


def _closed_form_cases() -> List[Case]:
    cases: List[Case] = [("closed_D1", {"kind": kind, "m": m, "t": t})
                         for kind in KINDS for m in range(-4, 5) for t in T_GRID]
    cases += [("new_integral", {"m": m, "t": t}) for m in range(-4, 5) if m for t in T_GRID[:-1]]
    cases += [("k_full_line", {"n": n, "nu": nu, "t": t}) for n in (0, 1, 2) for nu in (0.0, 1.3) for t in T_GRID]
    return cases


def _oracle_cases() -> List[Case]:
    cases: List[Case] = [("fd_oracle", {"kind": kind, "n": n, "nu": nu, "t": t})
                         for kind in KINDS for n in (1, 2) for nu in ORACLE_NU for t in ORACLE_T]
    cases += [("series_oracle", {"kind": kind, "nu": nu, "t": t})
              for kind in ("J", "I") for nu in ORACLE_NU for t in ORACLE_T]
    return cases


def _hypergeometric_cases() -> List[Case]:
    cases: List[Case] = [("new_integral_hyp", {"nu": nu, "t": t}) for nu in HYPERGEOMETRIC_NU for t in HYPERGEOMETRIC_T]
    cases += [("pfq_bessel", {"nu": nu, "t": t}) for nu in (0.0, 0.5, 1.0, 2.7) for t in (0.5, 2.0, 10.0)]
    return cases


def _taylor_cases() -> List[Case]:
    return [("taylor", {"kind": kind, "nu0": nu0, "nu": nu, "t": t})
            for kind in KINDS for nu0, nu in TAYLOR_POINTS for t in TAYLOR_T]


def _apelblat_cases() -> List[Case]:
    return [("apelblat", {"kind": kind, "nu": nu, "t": t})
            for kind in ("J", "I") for nu in APELBLAT_NU for t in APELBLAT_T]


_BUILDERS = {
    "reflections": _reflection_cases,
    "closed-forms": _closed_form_cases,
    "oracle": _oracle_cases,
    "hypergeometric": _hypergeometric_cases,
    "taylor": _taylor_cases,
    "apelblat": _apelblat_cases,
}


def suite_cases(suite: str) -> List[Case]:
    """Cases of a suite in registry order; "all" concatenates every suite."""
    if suite == "all":
        return [case for name in SUITE_NAMES for case in _BUILDERS[name]()]
    try:
        return _BUILDERS[suite]()
    except KeyError:
        raise DomainError(f"unknown suite {suite!r}, expected all or one of {', '.join(SUITE_NAMES)}")


def _run_case(case: Case, tol: Optional[float], cfg: QuadratureConfig):
    identity_id, params = case
    try:
        if identity_id == "apelblat":
            return apelblat_check(params["kind"], params["nu"], params["t"], cfg=cfg,
                                  **({"tol": tol} if tol is not None else {}))
        return check_reflection(identity_id, params, tol, cfg)
    except BesselNuError as e:
        return e


def run_suite(
    suite: str,
    tol: Optional[float] = None,
    cfg: Optional[QuadratureConfig] = None,
    workers: int = 1,
) -> SuiteResult:
    """Evaluate every case of a suite and collect the reports in order.

    Args:
        suite: Suite name or "all".
        tol: Override of every identity's default tolerance.
        cfg: Quadrature configuration.
        workers: Thread pool size; rows keep registry order regardless.

    Returns:
        SuiteResult with one row per case.
    """
    cfg = cfg or DEFAULT_CONFIG
    cases = suite_cases(suite)
    result = SuiteResult(suite)
    result.set_metadata("tolerance_override", tol)
    result.set_metadata("quadrature", {"abs_tol": cfg.abs_tol, "rel_tol": cfg.rel_tol, "max_level": cfg.max_level})
    result.set_metadata("workers", workers)
    logger.info(f"Running suite {suite}: {len(cases)} cases on {workers} worker(s)")

    def evaluate_all():
        if workers <= 1:
            return [_run_case(case, tol, cfg) for case in cases]
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_run_case, case, tol, cfg) for case in cases]
            return [future.result() for future in futures]

    outcomes, _ = result.measure_time("wall_seconds", evaluate_all)
    for (identity_id, params), outcome in zip(cases, outcomes):
        if isinstance(outcome, BesselNuError):
            default_tol = REGISTRY[identity_id].tolerance if identity_id in REGISTRY else CROSS_CHECK_TOL
            result.add_error(identity_id, params, default_tol if tol is None else tol, outcome)
        else:
            result.add_report(outcome)
    result.record_process_metrics()
    logger.info(result.summary_line())
    return result
