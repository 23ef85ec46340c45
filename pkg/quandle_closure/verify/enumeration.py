"""Suites for the isomorphism-class enumeration every other suite relies on."""

import itertools
from typing import Iterator, Optional

from quandle_closure.core.enumerate import (
    NAIVE_BOUND,
    are_isomorphic,
    canonical_form,
    enumerate_quandles,
    naive_quandles,
)
from quandle_closure.core.quandle import relabel
from quandle_closure.verify.base import PropertySuite, check
from quandle_closure.verify.library import QuandleLibrary

# isomorphism classes of quandles of order 0, 1, 2, ...
KNOWN_COUNTS = (1, 1, 1, 3, 7, 22, 73)


class NaiveAgreement(PropertySuite):
    name = "enumeration-naive"
    anchor = "Enumeration oracle"
    statement = "pruned enumeration equals filtering and deduplicating all n×n tables"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for n in range(1, min(max_order, NAIVE_BOUND) + 1):
            found = library.of_order(n)
            ok = found == naive_quandles(n)
            yield None if ok else f"order {n}: {len(found)} enumerated classes disagree with brute force"


class ClassCounts(PropertySuite):
    name = "enumeration-counts"
    anchor = "Enumeration oracle, class counts"
    statement = "class counts (1, 1, 3, 7, 22) at orders 1..5"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for n in range(1, min(max_order, len(KNOWN_COUNTS) - 1) + 1):
            count = len(library.of_order(n))
            yield None if count == KNOWN_COUNTS[n] else f"order {n}: {count} classes, expected {KNOWN_COUNTS[n]}"


class Determinism(PropertySuite):
    name = "enumeration-deterministic"
    anchor = "Enumeration oracle, determinism"
    statement = "two enumeration runs give identical lists"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for n in range(1, min(max_order, 5) + 1):
            ok = enumerate_quandles(n) == library.of_order(n)
            yield None if ok else f"order {n}: repeated enumeration differs"


class CanonicalFormInvariance(PropertySuite):
    name = "canonical-form"
    anchor = "Enumeration oracle, canonical forms"
    statement = "canonical forms are relabelling invariant and isomorphisms are found"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(min(max_order, 5)):
            form = canonical_form(q)
            for sigma in itertools.permutations(range(q.order)):
                moved = relabel(q, sigma)
                witness = are_isomorphic(q, moved)
                ok = (
                    canonical_form(moved) == form
                    and witness is not None
                    and relabel(q, witness) == moved
                )
                yield check(ok, q, sigma=sigma)


SUITES = [
    NaiveAgreement(),
    ClassCounts(),
    Determinism(),
    CanonicalFormInvariance(),
]
