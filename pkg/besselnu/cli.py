"""Command-line interface: `eval`, `check` and `table`.

Data goes to stdout (or the --out file); diagnostics go to stderr through
logging.
"""

import argparse
import csv
import io
import json
import logging
import sys
from typing import Dict, Iterable, List, Optional, Sequence

from .config import QuadratureConfig, configure_logging
from .domain import BesselKind, DerivativeRequest
from .errors import BesselNuError, GridSpecError
from .grid import evaluate_grid, parse_grid
from .order_derivatives import derivative
from .report import write_atomic
from .suites import SUITE_NAMES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NOT_CONVERGED = 2
EXIT_USAGE = 64
EXIT_CANT_CREATE = 73

TABLE_FIELDS = ("kind", "n", "nu", "t", "value", "err_estimate", "converged")
EVAL_FIELDS = ("kind", "n", "nu", "t", "value", "err_estimate", "evaluations", "converged")
CHECK_FIELDS = ("name", "inputs", "lhs", "rhs", "abs_residual", "rel_residual", "tolerance", "passed", "error")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with sysexits-style usage failures."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _format_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    if value is None:
        return ""
    if isinstance(value, dict):
        return " ".join(f"{k}={_format_cell(v)}" for k, v in value.items())
    return str(value)


def render_csv(records: Iterable[Dict[str, object]], fields: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(fields)
    for record in records:
        writer.writerow([_format_cell(record.get(name)) for name in fields])
    return buffer.getvalue()


def render_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _config(args, tol_sets_quadrature: bool = True) -> QuadratureConfig:
    try:
        cfg = QuadratureConfig.from_env()
        if tol_sets_quadrature and args.tol is not None:
            cfg = cfg.with_tolerance(args.tol)
    except ValueError as e:
        raise UsageError(str(e))
    return cfg


def cmd_eval(args) -> int:
    cfg = _config(args)
    req = DerivativeRequest(BesselKind.parse(args.kind), args.n, args.nu, args.t)
    result = derivative(req, cfg)
    record = {
        "kind": req.kind.value,
        "n": req.n,
        "nu": req.nu,
        "t": req.t,
        "value": result.value,
        "err_estimate": result.abs_error_estimate,
        "evaluations": result.evaluations,
        "converged": result.converged,
    }
    if args.format == "csv":
        sys.stdout.write(render_csv([record], EVAL_FIELDS))
    else:
        sys.stdout.write(render_json(record))
    return EXIT_OK if result.converged else EXIT_NOT_CONVERGED


def cmd_check(args) -> int:
    # --tol here is the identity pass threshold, not a quadrature target
    cfg = _config(args, tol_sets_quadrature=False)
    result = run_suite(args.suite, args.tol, cfg, args.workers)
    if args.format == "csv":
        sys.stdout.write(render_csv(result.checks, CHECK_FIELDS))
    else:
        sys.stdout.write(render_json(result.to_dict()))
    print(result.summary_line(), file=sys.stderr)
    if args.output:
        try:
            result.save_results(args.output)
        except OSError as e:
            logger.error(f"cannot write {args.output}: {e}")
            return EXIT_CANT_CREATE
    return result.get_exit_code()


def cmd_table(args) -> int:
    cfg = _config(args)
    try:
        grid = parse_grid(args.grid)
    except GridSpecError as e:
        raise UsageError(str(e))
    rows = evaluate_grid(grid, cfg, args.workers)
    records: List[Dict[str, object]] = [
        {name: row.as_record()[name] for name in TABLE_FIELDS} for row in rows
    ]
    text = render_csv(records, TABLE_FIELDS) if args.format == "csv" else render_json(records)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        try:
            write_atomic(args.out, text)
        except OSError as e:
            logger.error(f"cannot write {args.out}: {e}")
            return EXIT_CANT_CREATE
        logger.info(f"Wrote {len(records)} rows to {args.out}")
    return EXIT_OK if all(row.result.converged for row in rows) else EXIT_NOT_CONVERGED


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="besselnu", description="Order derivatives of the Bessel functions J, Y, I and K")
    parser.add_argument('--log-level', default=None, help='Logging level for stderr diagnostics (default WARNING)')
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p_eval = sub.add_parser("eval", help="Evaluate one derivative")
    p_eval.add_argument('--kind', required=True, help='J, Y, I or K')
    p_eval.add_argument('--n', type=int, required=True, help='Derivative order in [0, 8]')
    p_eval.add_argument('--nu', type=float, required=True, help='Order ν')
    p_eval.add_argument('--t', type=float, required=True, help='Argument t in (0, 100]')
    p_eval.add_argument('--tol', type=float, default=None, help='Absolute and relative tolerance')
    p_eval.add_argument('--format', choices=("json", "csv"), default="json")
    p_eval.set_defaults(handler=cmd_eval)

    p_check = sub.add_parser("check", help="Run an identity suite")
    p_check.add_argument('--suite', choices=("all",) + SUITE_NAMES, default="all")
    p_check.add_argument('--tol', type=float, default=None, help='Override every identity tolerance')
    p_check.add_argument('--format', choices=("json", "csv"), default="json")
    p_check.add_argument('--output', type=str, help='Also save the JSON report to this path')
    p_check.add_argument('--workers', type=_positive_int, default=1)
    p_check.set_defaults(handler=cmd_check)

    p_table = sub.add_parser("table", help="Tabulate a grid of derivatives")
    p_table.add_argument('--grid', required=True, help='e.g. kind=J,Y;n=0,1,2;nu=-2:2:0.5;t=0.5,1,2')
    p_table.add_argument('--out', required=True, help="Output path, '-' for stdout")
    p_table.add_argument('--format', choices=("csv", "json"), default="csv")
    p_table.add_argument('--tol', type=float, default=None)
    p_table.add_argument('--workers', type=_positive_int, default=1)
    p_table.set_defaults(handler=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        configure_logging(args.log_level)
    except ValueError as e:
        print(f"besselnu: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except UsageError as e:
        print(f"besselnu: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BesselNuError as e:
        print(f"besselnu: {e}", file=sys.stderr)
        return EXIT_FAILURE
