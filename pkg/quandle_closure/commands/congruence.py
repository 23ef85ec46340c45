import argparse

from quandle_closure.commands.output import emit_block, emit_field
from quandle_closure.core.congruence import effective_closure, inn_congruence, join, quotient
from quandle_closure.utils.textformat import (
    format_classes,
    format_map,
    format_quandle,
    parse_classes,
    parse_quandle_file,
)

CLASSES_HELP = "Congruence classes, e.g. 0,1;2 (unlisted elements are singletons)"


def cmd_closure_cong(args: argparse.Namespace) -> int:
    q = parse_quandle_file(args.file)
    closed = effective_closure(q, parse_classes(args.cong, q.order, flag="--cong"))
    emit_field("closure", format_classes(closed))
    return 0


def cmd_inn(args: argparse.Namespace) -> int:
    q = parse_quandle_file(args.file)
    emit_field("inn", format_classes(inn_congruence(q)))
    return 0


def cmd_quotient(args: argparse.Namespace) -> int:
    q = parse_quandle_file(args.file)
    quo, projection = quotient(q, parse_classes(args.cong, q.order, flag="--cong"))
    emit_block(format_quandle(quo, comments=[f"projection: {format_map(projection.map)}"]))
    return 0


def cmd_join(args: argparse.Namespace) -> int:
    q = parse_quandle_file(args.file)
    left, right = (parse_classes(text, q.order, flag="--cong") for text in args.cong)
    emit_field("join", format_classes(join(q, left, right)))
    return 0


def register(subparsers) -> None:
    closure = subparsers.add_parser("closure-cong", help="Effective closure R ∘ ∼Inn of a congruence")
    closure.add_argument("file", help="Quandle table in the text format")
    closure.add_argument("--cong", required=True, help=CLASSES_HELP)
    closure.set_defaults(func=cmd_closure_cong)

    inn = subparsers.add_parser("inn", help="The orbit congruence ∼Inn")
    inn.add_argument("file", help="Quandle table in the text format")
    inn.set_defaults(func=cmd_inn)

    quo = subparsers.add_parser("quotient", help="Quotient by a congruence, with its projection")
    quo.add_argument("file", help="Quandle table in the text format")
    quo.add_argument("--cong", required=True, help=CLASSES_HELP)
    quo.set_defaults(func=cmd_quotient)

    joined = subparsers.add_parser("join", help="Join of two congruences")
    joined.add_argument("file", help="Quandle table in the text format")
    joined.add_argument("--cong", required=True, action="append", help=CLASSES_HELP)
    joined.set_defaults(func=cmd_join, _validate=_two_congruences)


def _two_congruences(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if len(args.cong) != 2:
        parser.error("join needs exactly two --cong options")
