import argparse
import logging

from quandle_closure.commands.output import emit, emit_block, err_console, non_negative_int
from quandle_closure.core.enumerate import enumerate_quandles
from quandle_closure.utils.textformat import format_quandle

logger = logging.getLogger(__name__)


def cmd_enumerate(args: argparse.Namespace) -> int:
    with err_console.status(f"[bold green]Enumerating quandles of order {args.order}..."):
        quandles = enumerate_quandles(args.order)
    if args.count_only:
        emit(str(len(quandles)))
        return 0
    for i, q in enumerate(quandles):
        if i:
            emit()
        emit_block(format_quandle(q))
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("enumerate", help="One quandle per isomorphism class of order n")
    parser.add_argument("--order", required=True, type=non_negative_int, help="Carrier size n")
    parser.add_argument(
        "--count-only",
        action="store_true",
        help="Print only the number of isomorphism classes",
    )
    parser.set_defaults(func=cmd_enumerate)
