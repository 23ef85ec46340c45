import logging
from typing import Dict, Iterator, List, Tuple

from quandle_closure.core.closure import closure_sub
from quandle_closure.core.congruence import Congruence, effective_closure, enumerate_congruences
from quandle_closure.core.enumerate import enumerate_quandles
from quandle_closure.core.quandle import (
    Quandle,
    QuandleHom,
    SubSet,
    all_subquandles,
    enumerate_homs,
    validate_quandle,
)

logger = logging.getLogger(__name__)


class QuandleLibrary:
    """Memoised supply of enumerated quandles and the objects living on them."""

    def __init__(self):
        self._by_order: Dict[int, List[Quandle]] = {}
        self._subquandles: Dict[Quandle, List[SubSet]] = {}
        self._congruences: Dict[Quandle, List[Congruence]] = {}
        self._homs: Dict[Tuple[Quandle, Quandle], List[QuandleHom]] = {}
        self._closures: Dict[Tuple[Quandle, SubSet], SubSet] = {}
        self._effective: Dict[Tuple[Quandle, Congruence], Congruence] = {}

    def of_order(self, n: int) -> List[Quandle]:
        if n not in self._by_order:
            self._by_order[n] = enumerate_quandles(n)
            logger.debug("Library loaded %d quandles of order %d", len(self._by_order[n]), n)
        return self._by_order[n]

    def quandles(self, max_order: int, min_order: int = 1) -> Iterator[Quandle]:
        for n in range(min_order, max_order + 1):
            yield from self.of_order(n)

    def subquandles(self, q: Quandle) -> List[SubSet]:
        if q not in self._subquandles:
            self._subquandles[q] = all_subquandles(q)
        return self._subquandles[q]

    def congruences(self, q: Quandle) -> List[Congruence]:
        if q not in self._congruences:
            self._congruences[q] = enumerate_congruences(q)
        return self._congruences[q]

    def homs(self, source: Quandle, target: Quandle) -> List[QuandleHom]:
        key = (source, target)
        if key not in self._homs:
            self._homs[key] = enumerate_homs(source, target)
        return self._homs[key]

    def closure(self, q: Quandle, m: SubSet) -> SubSet:
        key = (q, m)
        if key not in self._closures:
            self._closures[key] = closure_sub(q, m)
        return self._closures[key]

    def effective_closure(self, q: Quandle, r: Congruence) -> Congruence:
        key = (q, r)
        if key not in self._effective:
            self._effective[key] = effective_closure(q, r)
        return self._effective[key]

    def hom_pairs(self, max_order: int) -> Iterator[QuandleHom]:
        """Every homomorphism between quandles of order ≤ max_order."""
        for source in self.quandles(max_order):
            for target in self.quandles(max_order):
                yield from self.homs(source, target)

    def surjections(self, max_order: int) -> Iterator[QuandleHom]:
        for f in self.hom_pairs(max_order):
            if f.is_surjective:
                yield f


def worked_example() -> Quandle:
    """Three elements, orbits {0, 1} and {2}: the standard non weakly hereditary instance."""
    return validate_quandle(3, ((0, 0, 1), (1, 1, 0), (2, 2, 2)))
