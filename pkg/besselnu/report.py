"""Result collection for identity check runs."""

import json
import os
import tempfile
import time
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple

import psutil

from .identities import IdentityReport


def write_atomic(path: str, text: str) -> None:
    """Write text to path via a temporary sibling, leaving nothing behind on failure."""
    target = Path(path)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=str(target.parent or "."))
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, target)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


class SuiteResult:
    """Represents the outcome of one `check` run over a suite."""

    def __init__(self, suite: str):
        self.suite = suite
        self.status = "success"
        self.start_time = datetime.now()
        self.checks: List[Dict[str, Any]] = []
        self.metadata: Dict[str, Any] = {}
        self.performance_metrics: Dict[str, float] = {}

    def add_report(self, report: IdentityReport):
        self.checks.append(report.to_dict())
        if not report.passed:
            self.status = "failed"

    def add_error(self, identity_id: str, inputs: Dict[str, Any], tolerance: float, error: Exception):
        """Record an identity that raised instead of producing a report."""
        self.checks.append({
            "name": identity_id,
            "inputs": inputs,
            "lhs": None,
            "rhs": None,
            "abs_residual": None,
            "rel_residual": None,
            "tolerance": tolerance,
            "passed": False,
            "error": str(error),
        })
        self.status = "failed"

    def set_metadata(self, key: str, value: Any):
        self.metadata[key] = value

    def add_performance_metric(self, key: str, value: float):
        self.performance_metrics[key] = value

    def measure_time(self, label: str, func: Callable, *args, **kwargs) -> Tuple[Any, float]:
        """Run func, recording wall time under label."""
        start_time = time.time()
        result = func(*args, **kwargs)
        duration = time.time() - start_time
        self.add_performance_metric(label, round(duration, 3))
        return result, duration

    def record_process_metrics(self):
        process = psutil.Process()
        cpu = process.cpu_times()
        self.add_performance_metric("cpu_user_seconds", round(cpu.user, 3))
        self.add_performance_metric("cpu_system_seconds", round(cpu.system, 3))
        self.add_performance_metric("rss_mb", round(process.memory_info().rss / 1024 ** 2, 1))

    @property
    def passed_checks(self) -> int:
        return sum(1 for c in self.checks if c["passed"])

    @property
    def max_rel_residual(self) -> float:
        residuals = [c["rel_residual"] for c in self.checks if c["rel_residual"] is not None]
        return max(residuals, default=0.0)

    def summary_line(self) -> str:
        return (
            f"suite={self.suite} status={self.status} passed={self.passed_checks}/{len(self.checks)} "
            f"max_rel_residual={self.max_rel_residual:.3e}"
        )

    def to_dict(self) -> Dict[str, Any]:
        duration = (datetime.now() - self.start_time).total_seconds()
        result_dict = {
            "status": self.status,
            "suite": self.suite,
            "checks": self.checks,
            "metadata": self.metadata,
            "timestamp": self.start_time.isoformat(),
            "duration_seconds": duration,
            "passed_checks": self.passed_checks,
            "total_checks": len(self.checks),
            "max_rel_residual": self.max_rel_residual,
        }
        if self.performance_metrics:
            result_dict["performance_metrics"] = self.performance_metrics
        return result_dict

    def save_results(self, output_file: str):
        Path(output_file).parent.mkdir(parents=True, exist_ok=True)
        write_atomic(output_file, json.dumps(self.to_dict(), indent=2) + "\n")

    def get_exit_code(self) -> int:
        return 0 if self.status == "success" else 1
