"""Exception hierarchy for quandle computations.

Every error carries the structured payload it was raised with, so callers
(the CLI, the verify suites) can report witnesses without parsing messages.
"""

from typing import Any, Optional, Sequence, Tuple


class QuandleError(Exception):
    """Base class for all domain errors raised by quandle_closure."""


class MalformedTable(QuandleError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"malformed table: {reason}")


class AxiomViolation(QuandleError):
    """A table fails idempotency (A1), right invertibility (A2) or self-distributivity (A3)."""

    def __init__(self, axiom: str, witness: Tuple[int, ...], source: Optional[str] = None):
        self.axiom = axiom
        self.witness = tuple(int(w) for w in witness)
        self.source = source
        where = f"{source}: " if source else ""
        at = ",".join(map(str, self.witness))
        super().__init__(f"{where}axiom {axiom} fails at ({at})")

    def with_source(self, source: str) -> "AxiomViolation":
        return AxiomViolation(self.axiom, self.witness, source)


class NotHomomorphism(QuandleError):
    def __init__(self, witness: Tuple[int, int], operation: str = "◁"):
        self.witness = tuple(int(w) for w in witness)
        self.operation = operation
        super().__init__(f"map does not preserve {operation} at {self.witness}")


class NotSubquandle(QuandleError):
    def __init__(self, members: Sequence[int], witness: Tuple[int, int]):
        self.members = tuple(members)
        self.witness = tuple(int(w) for w in witness)
        super().__init__(
            f"{{{','.join(map(str, self.members))}}} is not closed at {self.witness}"
        )


class NotCongruence(QuandleError):
    def __init__(self, witness: Tuple[int, ...], reason: str = "not compatible"):
        self.witness = tuple(int(w) for w in witness)
        self.reason = reason
        super().__init__(f"not a congruence ({reason}) at {self.witness}")


class NotSurjective(QuandleError):
    def __init__(self, mapping: Sequence[int], missing: int):
        self.map = tuple(mapping)
        self.missing = missing
        super().__init__(f"map {list(self.map)} misses target element {missing}")


class ParentMismatch(QuandleError):
    def __init__(self, left_order: int, right_order: int):
        self.left_order = left_order
        self.right_order = right_order
        super().__init__(
            f"relations live on different carriers ({left_order} vs {right_order})"
        )


class OverflowOrder(QuandleError):
    def __init__(self, order: int, bound: int):
        self.order = order
        self.bound = bound
        super().__init__(f"carrier of order {order} exceeds the configured bound {bound}")


class BoundExceeded(QuandleError):
    def __init__(self, order: int, bound: int, what: str = "exhaustive search"):
        self.order = order
        self.bound = bound
        self.what = what
        super().__init__(f"{what} is limited to order {bound}, got {order}")


class WitnessNotBijective(QuandleError):
    def __init__(self, mapping: Sequence[Any]):
        self.map = tuple(mapping)
        super().__init__(f"comparison map {list(self.map)} is not a bijection")


class ParseError(QuandleError):
    """Bad input text. `line` is 1-based, or None for a command-line argument named by `source`."""

    def __init__(self, line: Optional[int], reason: str, source: Optional[str] = None):
        self.line = line
        self.reason = reason
        self.source = source
        if line is None:
            where = f"{source}: " if source else ""
        else:
            where = f"{source}:{line}: " if source else f"line {line}: "
        super().__init__(f"{where}{reason}")
