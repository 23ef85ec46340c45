"""Suites for the closure operator on subquandles and the diagonal characterisations."""

from typing import Iterator, Optional

from quandle_closure.config import settings
from quandle_closure.core.classify import is_trivial
from quandle_closure.core.closure import (
    closure_sub,
    dense_closed_factorization,
    is_c_connected,
    is_c_separated,
    pullback_closure,
    weakly_hereditary_at,
)
from quandle_closure.core.connectivity import is_connected, orbits
from quandle_closure.core.quandle import (
    SubSet,
    generated_subquandle,
    image_subquandle,
    product,
    product_subset,
)
from quandle_closure.verify.base import PropertySuite, check
from quandle_closure.verify.library import QuandleLibrary, worked_example


class ClosureAxioms(PropertySuite):
    name = "closure-axioms"
    anchor = "Definition (closure operator) (1), (2), (4); Lemma (characterisation)"
    statement = "M ≤ c(M), M ≤ N ⇒ c(M) ≤ c(N), c(c(M)) = c(M), c(M) = η⁻¹(η(M))"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            subs = library.subquandles(q)
            closures = {m: closure_sub(q, m) for m in subs}
            for m, c in closures.items():
                ok = m.issubset(c) and closure_sub(q, c) == c and pullback_closure(q, m) == c
                yield check(ok, q, M=f"{{{m}}}")
            for m in subs:
                for n in subs:
                    if m.issubset(n):
                        ok = closures[m].issubset(closures[n])
                        yield check(ok, q, M=f"{{{m}}}", N=f"{{{n}}}")


class ClosureContinuity(PropertySuite):
    name = "closure-continuity"
    anchor = "Definition (closure operator) (3)"
    statement = "f(c_X(M)) ≤ c_Y(f(M)) for every homomorphism f : X → Y"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for f in library.hom_pairs(min(max_order, settings.verify_hom_order)):
            for m in library.subquandles(f.source):
                pushed = image_subquandle(f, library.closure(f.source, m))
                ok = pushed.issubset(library.closure(f.target, image_subquandle(f, m)))
                yield check(ok, f.source, target=f.target.rows, f=f.map, M=f"{{{m}}}")


class SingletonClosureIsOrbit(PropertySuite):
    name = "singleton-closure"
    anchor = "Proposition (properties) (1)"
    statement = "c_X({x}) = [x]_X"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            partition = orbits(q)
            for x in q.elements:
                closure = closure_sub(q, SubSet.of(q.order, [x]))
                yield check(closure == partition.classes[partition.class_of[x]], q, x=x)


class FullAdditivity(PropertySuite):
    name = "closure-additivity"
    anchor = "Proposition (properties) (2)"
    statement = "c(⋁ Mᵢ) = ⋁ c(Mᵢ) for pairs and for the family of singletons"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            subs = library.subquandles(q)
            closures = {m: closure_sub(q, m) for m in subs}
            for m in subs:
                singletons = SubSet.empty(q.order)
                for x in m:
                    singletons = singletons | closure_sub(q, SubSet.of(q.order, [x]))
                yield check(closures[m] == singletons, q, M=f"{{{m}}}")
            for m in subs:
                for n in subs:
                    joined = generated_subquandle(q, m | n)
                    expected = generated_subquandle(q, closures[m] | closures[n])
                    ok = closures[joined] == expected
                    yield check(ok, q, M=f"{{{m}}}", N=f"{{{n}}}")


class FiniteProductivity(PropertySuite):
    name = "closure-productivity"
    anchor = "Proposition (properties) (3)"
    statement = "c(M × N) = c(M) × c(N) and c(M × N × K) = c(M) × c(N) × c(K)"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        bound = settings.verify_product_order
        quandles = list(library.quandles(max_order))
        for q1 in quandles:
            for q2 in quandles:
                if q1.order * q2.order > bound:
                    continue
                p = product(q1, q2)
                for m in library.subquandles(q1):
                    cm = library.closure(q1, m)
                    for n in library.subquandles(q2):
                        cn = library.closure(q2, n)
                        ok = closure_sub(p, product_subset(m, n)) == product_subset(cm, cn)
                        yield check(ok, q1, other=q2.rows, M=f"{{{m}}}", N=f"{{{n}}}")
        # a factor of order 1 only repeats a binary instance
        factors = [q for q in quandles if q.order > 1]
        for q1 in factors:
            for q2 in factors:
                for q3 in factors:
                    if q1.order * q2.order * q3.order > bound:
                        continue
                    p = product(product(q1, q2), q3)
                    for m in library.subquandles(q1):
                        cm = library.closure(q1, m)
                        for n in library.subquandles(q2):
                            cmn = product_subset(cm, library.closure(q2, n))
                            mn = product_subset(m, n)
                            for k in library.subquandles(q3):
                                box = product_subset(mn, k)
                                expected = product_subset(cmn, library.closure(q3, k))
                                yield check(
                                    closure_sub(p, box) == expected,
                                    q1,
                                    second=q2.rows,
                                    third=q3.rows,
                                    M=f"{{{m}}}",
                                    N=f"{{{n}}}",
                                    K=f"{{{k}}}",
                                )


class SurjectiveImageCommutes(PropertySuite):
    name = "closure-surjective-image"
    anchor = "Proposition (properties) (4)"
    statement = "f(c_X(M)) = c_Y(f(M)) for every surjective homomorphism f : X → Y"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for f in library.surjections(min(max_order, settings.verify_hom_order)):
            for m in library.subquandles(f.source):
                ok = image_subquandle(f, library.closure(f.source, m)) == library.closure(
                    f.target, image_subquandle(f, m)
                )
                yield check(ok, f.source, target=f.target.rows, f=f.map, M=f"{{{m}}}")


class DiagonalCharacterisations(PropertySuite):
    name = "diagonal"
    anchor = "Proposition (connected); Proposition (separated)"
    statement = "c-connected ⇔ connected and c-separated ⇔ trivial"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            if q.order * q.order > settings.verify_product_order:
                continue
            ok = is_c_connected(q) == is_connected(q) and is_c_separated(q) == is_trivial(q)
            yield check(ok, q)


class NotWeaklyHereditary(PropertySuite):
    name = "weak-heredity-fails"
    anchor = "Remark (not weakly hereditary)"
    statement = "{0} ≤ E is not dense in its closure {0, 1}"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        q = worked_example()
        m = SubSet.of(3, [0])
        factorization = dense_closed_factorization(q, m)
        inside = factorization.closure_quandle
        ok = (
            [c.members for c in orbits(q).classes] == [(0, 1), (2,)]
            and factorization.outer.members == (0, 1)
            and is_trivial(inside)
            and closure_sub(inside, factorization.inner).members == (0,)
            and not weakly_hereditary_at(q, m)
        )
        yield check(ok, q, M="{0}")


SUITES = [
    ClosureAxioms(),
    ClosureContinuity(),
    SingletonClosureIsOrbit(),
    FullAdditivity(),
    FiniteProductivity(),
    SurjectiveImageCommutes(),
    DiagonalCharacterisations(),
    NotWeaklyHereditary(),
]
