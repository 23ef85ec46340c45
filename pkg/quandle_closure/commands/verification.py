import argparse
import logging

from quandle_closure.commands.output import emit, err_console, non_negative_int
from quandle_closure.config import settings
from quandle_closure.models import SuiteResult
from quandle_closure.verify import run_suites

logger = logging.getLogger(__name__)


def _summary(result: SuiteResult) -> str:
    status = "pass" if result.passed else "FAIL"
    return (
        f"{status}  {result.anchor}  {result.name}  "
        f"{result.instances} instances  {result.statement}"
    )


def cmd_verify(args: argparse.Namespace) -> int:
    max_order = args.max_order if args.max_order is not None else settings.verify_max_order

    def show(result: SuiteResult) -> None:
        if args.json:
            emit(result.model_dump_json())
            return
        emit(_summary(result))
        if result.witness:
            emit(f"  witness: {result.witness}")

    with err_console.status(f"[bold green]Checking every suite up to order {max_order}..."):
        report = run_suites(max_order, on_result=show)
    failed = [s.name for s in report.suites if not s.passed]
    if failed:
        logger.warning("Failing suites: %s", ", ".join(failed))
        return 1
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="Run every property suite exhaustively")
    parser.add_argument(
        "--max-order",
        type=non_negative_int,
        help=f"Largest quandle order to quantify over (default: {settings.verify_max_order})",
    )
    parser.add_argument("--json", action="store_true", help="One JSON object per suite per line")
    parser.set_defaults(func=cmd_verify)
