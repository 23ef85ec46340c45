import argparse

from quandle_closure.commands.output import emit_field
from quandle_closure.core.closure import closure_sub
from quandle_closure.models import flag_text
from quandle_closure.utils.textformat import parse_quandle_file, parse_subset


def cmd_closure(args: argparse.Namespace) -> int:
    q = parse_quandle_file(args.file)
    m = parse_subset(args.sub, q.order, flag="--sub")
    closure = closure_sub(q, m)
    emit_field("closure", closure)
    emit_field("dense", flag_text(closure.is_full))
    emit_field("closed", flag_text(closure == m))
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("closure", help="Closure of a subquandle with its dense/closed flags")
    parser.add_argument("file", help="Quandle table in the text format")
    parser.add_argument(
        "--sub",
        required=True,
        help="Subquandle as a comma-separated list of elements, e.g. 0,2",
    )
    parser.set_defaults(func=cmd_closure)
