"""Suites for the quandle axioms, subquandles, homomorphisms and orbits."""

import itertools
from typing import Iterator, Optional

from quandle_closure.config import settings
from quandle_closure.core.connectivity import orbits, pi0, pi0_product_witness
from quandle_closure.core.quandle import (
    SubSet,
    chain_apply,
    chain_set,
    generated_subquandle,
    image_subquandle,
    preimage_subquandle,
    validate_hom,
)
from quandle_closure.errors import NotHomomorphism
from quandle_closure.verify.base import PropertySuite, check
from quandle_closure.verify.library import QuandleLibrary

SIGNS = ("+", "-")


class InverseRoundTrip(PropertySuite):
    name = "quandle-axioms"
    anchor = "Definition (quandle), axiom A2"
    statement = "(x ◁ y) ◁⁻¹ y = x = (x ◁⁻¹ y) ◁ y"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            for x in q.elements:
                for y in q.elements:
                    ok = q.inv(q.op(x, y), y) == x and q.op(q.inv(x, y), y) == x
                    yield check(ok, q, x=x, y=y)


class GeneratedSubquandle(PropertySuite):
    name = "generated-subquandle"
    anchor = "Lemma (sup)"
    statement = "⟨S⟩ is the set of chains over S; extensive, monotone and idempotent"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            generated = {}
            for mask in range(1 << q.order):
                seed = SubSet(q.order, mask)
                g = generated_subquandle(q, seed)
                generated[mask] = g
                ok = (
                    g == chain_set(q, seed)
                    and seed.issubset(g)
                    and generated_subquandle(q, g) == g
                )
                yield check(ok, q, seed=f"{{{seed}}}")
            for small, large in itertools.product(generated, repeat=2):
                if small & ~large:
                    continue
                ok = generated[small].issubset(generated[large])
                yield check(ok, q, seeds=f"{small:b} ⊆ {large:b}")


class ChainRewriting(PropertySuite):
    name = "chain-rewriting"
    anchor = "Lemma (sup), rewriting step"
    statement = "x ◁^α (y ◁^β z) = ((x ◁^{-β} z) ◁^α y) ◁^β z"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        flip = {"+": "-", "-": "+"}
        for q in library.quandles(max_order):
            for x, y, z in itertools.product(q.elements, repeat=3):
                for alpha, beta in itertools.product(SIGNS, repeat=2):
                    left = chain_apply(q, x, [(alpha, chain_apply(q, y, [(beta, z)]))])
                    right = chain_apply(q, x, [(flip[beta], z), (alpha, y), (beta, z)])
                    yield check(left == right, q, x=x, y=y, z=z, signs=alpha + beta)


class HomEnumeration(PropertySuite):
    name = "hom-enumeration"
    anchor = "Definition (homomorphism)"
    statement = "pruned homomorphism search finds exactly the maps that pass the hom check"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        bound = min(max_order, 3)
        for source in library.quandles(bound):
            for target in library.quandles(bound):
                brute = []
                for images in itertools.product(target.elements, repeat=source.order):
                    try:
                        brute.append(validate_hom(source, target, images))
                    except NotHomomorphism:
                        pass
                ok = brute == library.homs(source, target)
                yield check(ok, source, target=target.rows)


class ImagePreimage(PropertySuite):
    name = "image-preimage"
    anchor = "Definition (regular image)"
    statement = "f(f⁻¹(T)) ⊆ T, with equality when f is surjective"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for f in library.hom_pairs(min(max_order, settings.verify_hom_order)):
            for t in library.subquandles(f.target):
                back = image_subquandle(f, preimage_subquandle(f, t))
                ok = back == t if f.is_surjective else back.issubset(t)
                yield check(ok, f.source, target=f.target.rows, f=f.map, T=f"{{{t}}}")


class OrbitsAreChainValues(PropertySuite):
    name = "orbits"
    anchor = "Lemma (characterisation)"
    statement = "the orbit of x is the set of chain values x ◁^α1 y1 ⋯ ◁^αn yn"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            partition = orbits(q)
            for x in q.elements:
                reached = {x}
                frontier = [x]
                while frontier:
                    v = frontier.pop()
                    for y in q.elements:
                        for c in (q.op(v, y), q.inv(v, y)):
                            if c not in reached:
                                reached.add(c)
                                frontier.append(c)
                orbit = partition.classes[partition.class_of[x]]
                yield check(set(orbit) == reached, q, x=x)


class UnitOntoComponents(PropertySuite):
    name = "unit"
    anchor = "Definition (π₀ and its unit)"
    statement = "η_X : X → π₀(X) is a surjection onto a trivial quandle identifying exactly the orbits"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for q in library.quandles(max_order):
            components, eta = pi0(q)
            partition = orbits(q)
            ok = (
                eta.is_surjective
                and all(row == (x,) * components.order for x, row in enumerate(components.rows))
                and all(
                    (eta(x) == eta(y)) == partition.same_orbit(x, y)
                    for x in q.elements
                    for y in q.elements
                )
            )
            yield check(ok, q, unit=eta.map)


class ComponentsOfProducts(PropertySuite):
    name = "pi0-products"
    anchor = "Lemma (products)"
    statement = "π₀(X × Y) → π₀(X) × π₀(Y) is a bijection"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        quandles = list(library.quandles(max_order))
        for q1 in quandles:
            for q2 in quandles:
                if q1.order * q2.order > settings.verify_product_order:
                    continue
                # WitnessNotBijective propagates and is reported by the runner
                pi0_product_witness(q1, q2)
                yield None


class ComponentsFunctorial(PropertySuite):
    name = "pi0-functorial"
    anchor = "Definition (π₀ as a reflector)"
    statement = "homomorphisms map orbits into orbits, so π₀ is a functor"

    def instances(self, library: QuandleLibrary, max_order: int) -> Iterator[Optional[str]]:
        for f in library.hom_pairs(min(max_order, settings.verify_hom_order)):
            source, target = orbits(f.source), orbits(f.target)
            induced = {}
            ok = all(
                induced.setdefault(source.class_of[x], target.class_of[f(x)])
                == target.class_of[f(x)]
                for x in f.source.elements
            )
            yield check(ok, f.source, target=f.target.rows, f=f.map)


SUITES = [
    InverseRoundTrip(),
    GeneratedSubquandle(),
    ChainRewriting(),
    HomEnumeration(),
    ImagePreimage(),
    OrbitsAreChainValues(),
    UnitOntoComponents(),
    ComponentsOfProducts(),
    ComponentsFunctorial(),
]
