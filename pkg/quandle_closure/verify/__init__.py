import logging
from typing import Callable, List, Optional

from quandle_closure.models import SuiteResult, VerifyReport
from quandle_closure.verify.base import PropertySuite
from quandle_closure.verify.classification import SUITES as CLASSIFICATION_SUITES
from quandle_closure.verify.closure import SUITES as CLOSURE_SUITES
from quandle_closure.verify.congruences import SUITES as CONGRUENCE_SUITES
from quandle_closure.verify.enumeration import SUITES as ENUMERATION_SUITES
from quandle_closure.verify.library import QuandleLibrary
from quandle_closure.verify.subquandles import SUITES as SUBQUANDLE_SUITES

logger = logging.getLogger(__name__)

# enumeration first: every other suite consumes its output
ALL_SUITES: List[PropertySuite] = [
    *ENUMERATION_SUITES,
    *SUBQUANDLE_SUITES,
    *CLOSURE_SUITES,
    *CLASSIFICATION_SUITES,
    *CONGRUENCE_SUITES,
]


def run_suites(
    max_order: int,
    suites: Optional[List[PropertySuite]] = None,
    on_result: Optional[Callable[[SuiteResult], None]] = None,
) -> VerifyReport:
    library = QuandleLibrary()
    results = []
    for suite in suites if suites is not None else ALL_SUITES:
        result = suite.run(library, max_order)
        if not result.passed:
            logger.warning("Suite %s failed: %s", result.name, result.witness)
        results.append(result)
        if on_result is not None:
            on_result(result)
    return VerifyReport(max_order=max_order, suites=results)
