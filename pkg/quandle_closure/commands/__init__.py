from quandle_closure.commands import (
    classify,
    closure,
    congruence,
    enumeration,
    structure,
    verification,
)

COMMAND_MODULES = [structure, closure, congruence, classify, enumeration, verification]


def register_all(subparsers) -> None:
    for module in COMMAND_MODULES:
        module.register(subparsers)
