"""Suites for the trivial / quasi-trivial / 𝒵 hierarchy and the constancy of homomorphisms."""

import itertools
from typing import Iterator, Optional

from quandle_closure.config import settings
from quandle_closure.core.classify import (
    in_disconnectedness_Z,
    is_constant,
    is_quasi_trivial,
    is_trivial,
)
from quandle_closure.core.connectivity import is_connected
from quandle_closure.core.quandle import chain_apply
from quandle_closure.verify.base import PropertySuite, check
from quandle_closure.verify.library import QuandleLibrary, worked_example


class Hierarchy(PropertySuite):
    name = "trivial-quasi-trivial-Z"
    anchor = "Remark (quasi-trivial quandles)"
    statement = "trivial ⇒ quasi-trivial ⇒ no connected subquandle with two or more elements"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            trivial, quasi, in_z = is_trivial(q), is_quasi_trivial(q), in_disconnectedness_Z(q)
            ok = (not trivial or quasi) and (not quasi or in_z)
            yield check(ok, q, trivial=trivial, quasi_trivial=quasi, in_Z=in_z)


class StrictlyLargerThanTrivial(PropertySuite):
    name = "Z-not-trivial"
    anchor = "Remark (quasi-trivial quandles), the three-element example"
    statement = "E lies in 𝒵 but is not trivial"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        q = worked_example()
        yield check(in_disconnectedness_Z(q) and not is_trivial(q), q)


class ConnectedMembersOfZ(PropertySuite):
    name = "connected-in-Z"
    anchor = "Theorem (connectedness and disconnectedness)"
    statement = "a connected quandle in 𝒵 has a single element"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            ok = not (is_connected(q) and in_disconnectedness_Z(q)) or q.order <= 1
            yield check(ok, q)


class ConstantMorphisms(PropertySuite):
    name = "constant-morphisms"
    anchor = "Theorem (connectedness and disconnectedness)"
    statement = "every homomorphism from a connected quandle into a member of 𝒵 is constant"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        bound = min(max_order, settings.verify_hom_order)
        connected = [q for q in library.quandles(bound) if is_connected(q)]
        members = [q for q in library.quandles(bound) if in_disconnectedness_Z(q)]
        for source in connected:
            for target in members:
                for f in library.homs(source, target):
                    yield check(is_constant(f), source, target=target.rows, f=f.map)


class TwoElements(PropertySuite):
    name = "two-elements"
    anchor = "Remark (quasi-trivial quandles), order 2"
    statement = "every quandle of order 2 is trivial"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        if max_order < 2:
            return
        for q in library.of_order(2):
            yield check(is_trivial(q), q)


class QuasiTrivialByChains(PropertySuite):
    name = "quasi-trivial-chains"
    anchor = "Remark (quasi-trivial quandles), chain form"
    statement = "quasi-triviality read off chains of length ≤ n agrees with the orbit test"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(min(max_order, 4)):
            steps = [(sign, y) for sign in ("+", "-") for y in q.elements]
            fixed = True
            for x in q.elements:
                # values of x ◁^α1 y1 ⋯ ◁^αk yk, k ≤ n
                reached = {x}
                for length in range(1, q.order + 1):
                    for chain in itertools.product(steps, repeat=length):
                        reached.add(chain_apply(q, x, chain))
                fixed = fixed and all(q.op(x, y) == x == q.inv(x, y) for y in reached)
            yield check(fixed == is_quasi_trivial(q), q)


SUITES = [
    Hierarchy(),
    StrictlyLargerThanTrivial(),
    ConnectedMembersOfZ(),
    ConstantMorphisms(),
    TwoElements(),
    QuasiTrivialByChains(),
]
