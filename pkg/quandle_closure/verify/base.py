import logging
import time
from abc import ABC, abstractmethod
from typing import Iterator, Optional

from quandle_closure.core.quandle import Quandle
from quandle_closure.errors import QuandleError
from quandle_closure.models import SuiteResult
from quandle_closure.verify.library import QuandleLibrary

logger = logging.getLogger(__name__)


class PropertySuite(ABC):
    """Abstract base class for a universally quantified property checked exhaustively"""

    name: str = ""
    # the result being checked, e.g. "Lemma (permutability)"
    anchor: str = ""
    statement: str = ""

    @abstractmethod
    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        """Yield None per passing instance, or a witness description for a failing one.

        Instances are produced smallest order first, so the first failure is minimal.
        """
        pass

    def run(self, library: QuandleLibrary, max_order: int) -> SuiteResult:
        start = time.perf_counter()
        count = 0
        witness = None
        try:
            for outcome in self.instances(library, max_order):
                count += 1
                if outcome is not None:
                    witness = outcome
                    break
        except QuandleError as exc:
            logger.exception("Suite %s raised on instance %d", self.name, count + 1)
            witness = f"instance {count + 1} raised {type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - start
        logger.debug("Suite %s: %d instances in %.2fs", self.name, count, elapsed)
        return SuiteResult(
            name=self.name,
            anchor=self.anchor,
            statement=self.statement,
            instances=count,
            passed=witness is None,
            witness=witness,
            seconds=round(elapsed, 3),
        )


def describe(q: Quandle, **parts) -> str:
    """One-line description of a failing instance: the table plus the objects involved."""
    rows = "|".join(" ".join(map(str, row)) for row in q.rows)
    extra = "".join(f"; {key} = {value}" for key, value in parts.items())
    return f"order {q.order} table [{rows}]{extra}"


def check(ok: bool, q: Quandle, **parts) -> Optional[str]:
    return None if ok else describe(q, **parts)
