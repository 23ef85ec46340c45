import argparse
import logging

from quandle_closure.commands.output import emit, emit_block, emit_field
from quandle_closure.core.connectivity import orbits, pi0
from quandle_closure.core.quandle import enumerate_homs, product
from quandle_closure.utils.textformat import format_map, format_quandle, parse_quandle_file

logger = logging.getLogger(__name__)


def cmd_check(args: argparse.Namespace) -> int:
    q = parse_quandle_file(args.file)
    emit(f"ok: order {q.order}")
    return 0


def cmd_orbits(args: argparse.Namespace) -> int:
    q = parse_quandle_file(args.file)
    partition = orbits(q)
    emit_field("orbits", ";".join(str(c) for c in partition.classes))
    emit(f"count: {partition.class_count}")
    return 0


def cmd_pi0(args: argparse.Namespace) -> int:
    q = parse_quandle_file(args.file)
    components, eta = pi0(q)
    emit_block(format_quandle(components, comments=[f"unit: {format_map(eta.map)}"]))
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    q1 = parse_quandle_file(args.left)
    q2 = parse_quandle_file(args.right)
    emit_block(format_quandle(product(q1, q2)))
    return 0


def cmd_homs(args: argparse.Namespace) -> int:
    source = parse_quandle_file(args.source)
    target = parse_quandle_file(args.target)
    homs = enumerate_homs(source, target)
    logger.info("%d homomorphisms %s -> %s", len(homs), args.source, args.target)
    for f in homs:
        emit(format_map(f.map))
    return 0


def register(subparsers) -> None:
    check = subparsers.add_parser("check", help="Validate a quandle file")
    check.add_argument("file", help="Quandle table in the text format")
    check.set_defaults(func=cmd_check)

    orbit = subparsers.add_parser("orbits", help="Print the orbits under Inn(X)")
    orbit.add_argument("file", help="Quandle table in the text format")
    orbit.set_defaults(func=cmd_orbits)

    components = subparsers.add_parser("pi0", help="Print π₀(X) and the unit map")
    components.add_argument("file", help="Quandle table in the text format")
    components.set_defaults(func=cmd_pi0)

    prod = subparsers.add_parser("product", help="Print the product of two quandles")
    prod.add_argument("left", help="First factor")
    prod.add_argument("right", help="Second factor")
    prod.set_defaults(func=cmd_product)

    homs = subparsers.add_parser("homs", help="List every homomorphism, one map per line")
    homs.add_argument("source", help="Source quandle")
    homs.add_argument("target", help="Target quandle")
    homs.set_defaults(func=cmd_homs)
