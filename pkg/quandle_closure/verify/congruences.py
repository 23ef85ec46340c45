"""Suites for congruences and the effective closure R ↦ R ∘ ∼Inn."""

from typing import Dict, Iterator, Optional

from quandle_closure.config import settings
from quandle_closure.core.congruence import (
    Congruence,
    congruence_generated,
    direct_image_relation,
    effective_closure_via_kernel_pair,
    image_congruence,
    inn_congruence,
    join,
    permutes_with_inn,
    preimage_congruence,
    quotient,
    quotient_join_kernel,
    relation_to_congruence,
)
from quandle_closure.core.quandle import Quandle, QuandleHom, induced_subquandle
from quandle_closure.verify.base import PropertySuite, check
from quandle_closure.verify.library import QuandleLibrary


def _closures(library: QuandleLibrary, q: Quandle) -> Dict[Congruence, Congruence]:
    return {r: library.effective_closure(q, r) for r in library.congruences(q)}


class EffectiveClosureAxioms(PropertySuite):
    name = "effective-closure-axioms"
    anchor = "Definition (effective closure operator) (1), (2), (4)"
    statement = "R ⊆ c(R), R ⊆ S ⇒ c(R) ⊆ c(S), c(c(R)) = c(R)"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            closures = _closures(library, q)
            for r, c in closures.items():
                ok = r.refines(c) and library.effective_closure(q, c) == c
                yield check(ok, q, R=r)
            for r in closures:
                for s in closures:
                    if r.refines(s):
                        yield check(closures[r].refines(closures[s]), q, R=r, S=s)


class EffectiveClosurePreimages(PropertySuite):
    name = "effective-closure-preimages"
    anchor = "Definition (effective closure operator) (3), (5)"
    statement = "c_Y(f⁻¹(R)) ⊆ f⁻¹(c_X(R)), with equality when f is surjective"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        cap = min(max_order, settings.verify_hom_order)
        for f in library.hom_pairs(cap):
            yield from self._along(library, f)
        # above the cap: every quotient projection and every subquandle inclusion
        for q in library.quandles(max_order, min_order=cap + 1):
            for theta in library.congruences(q):
                yield from self._along(library, quotient(q, theta)[1])
            for s in library.subquandles(q):
                if len(s):
                    yield from self._along(library, induced_subquandle(q, s)[1])

    @staticmethod
    def _along(library: QuandleLibrary, f: QuandleHom) -> Iterator[Optional[str]]:
        for r in library.congruences(f.target):
            pulled = library.effective_closure(f.source, preimage_congruence(f, r))
            bound = preimage_congruence(f, library.effective_closure(f.target, r))
            ok = pulled == bound if f.is_surjective else pulled.refines(bound)
            yield check(ok, f.target, source=f.source.rows, f=f.map, R=r)



class Permutability(PropertySuite):
    name = "permutability"
    anchor = "Lemma (permutability)"
    statement = "∼Inn ∘ R = R ∘ ∼Inn"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            for r in library.congruences(q):
                yield check(permutes_with_inn(q, r), q, R=r)


class KernelPairDescription(PropertySuite):
    name = "kernel-pair"
    anchor = "Proposition (description), kernel pair construction"
    statement = "R ∘ ∼Inn is the kernel pair of X → X/R → π₀(X/R)"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            for r in library.congruences(q):
                ok = library.effective_closure(q, r) == effective_closure_via_kernel_pair(q, r)
                yield check(ok, q, R=r)


class ClosureOfDiagonal(PropertySuite):
    name = "closure-of-diagonal"
    anchor = "Remark (closure of the diagonal)"
    statement = "c(Δ) = ∼Inn"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            ok = library.effective_closure(q, Congruence.discrete(q.order)) == inn_congruence(q)
            yield check(ok, q)


class ImageOfInn(PropertySuite):
    name = "image-of-inn"
    anchor = "Remark (closure of the diagonal), image along surjections"
    statement = "f(∼Inn(X)) = ∼Inn(Y) for surjective f, already closed as a pair set"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for f in library.surjections(min(max_order, settings.verify_hom_order)):
            inn = inn_congruence(f.source)
            expected = inn_congruence(f.target)
            direct = direct_image_relation(f, inn)
            ok = (
                image_congruence(f, inn) == expected
                and relation_to_congruence(f.target, direct) == expected
                and congruence_generated(f.target, direct) == expected
            )
            yield check(ok, f.source, target=f.target.rows, f=f.map)


class ClosurePreservesJoins(PropertySuite):
    name = "closure-joins"
    anchor = "Remark (closure of joins)"
    statement = "c(R ∨ S) = c(R) ∨ c(S), computed directly and through the quotient pushout"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            closures = _closures(library, q)
            for r in closures:
                for s in closures:
                    joined = library.effective_closure(q, join(q, r, s))
                    ok = (
                        joined == join(q, closures[r], closures[s])
                        and joined == quotient_join_kernel(q, r, s)
                    )
                    yield check(ok, q, R=r, S=s)


class SupremumWithInn(PropertySuite):
    name = "supremum-with-inn"
    anchor = "Proposition (description), supremum identity"
    statement = "R ∘ ∼Inn = R ∨ ∼Inn"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            inn = inn_congruence(q)
            for r, c in _closures(library, q).items():
                ok = r.refines(c) and inn.refines(c) and c == join(q, r, inn)
                yield check(ok, q, R=r)


SUITES = [
    EffectiveClosureAxioms(),
    EffectiveClosurePreimages(),
    Permutability(),
    KernelPairDescription(),
    ClosureOfDiagonal(),
    ImageOfInn(),
    ClosurePreservesJoins(),
    SupremumWithInn(),
]
