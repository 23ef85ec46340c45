import argparse

from quandle_closure.commands.output import emit
from quandle_closure.core.classify import classify
from quandle_closure.utils.textformat import parse_quandle_file


def cmd_classify(args: argparse.Namespace) -> int:
    report = classify(parse_quandle_file(args.file))
    if args.json:
        emit(report.model_dump_json(by_alias=True))
    else:
        for line in report.lines():
            emit(line)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("classify", help="Connectivity and triviality flags of a quandle")
    parser.add_argument("file", help="Quandle table in the text format")
    parser.add_argument("--json", action="store_true", help="Emit one JSON object instead of text")
    parser.set_defaults(func=cmd_classify)
