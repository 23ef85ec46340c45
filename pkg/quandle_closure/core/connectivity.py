"""
Orbits of a quandle under its inner automorphism group, the connected-component
quandle π₀(X) and the unit η_X : X → π₀(X).

Inn(X) itself is never built: two elements share an orbit exactly when they are
linked by edges joining each x to x ◁ y, so a union-find pass over the n²
edges gives the partition.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from quandle_closure.core.quandle import (
    Quandle,
    QuandleHom,
    SubSet,
    product,
    trivial_quandle,
    validate_hom,
)
from quandle_closure.core.unionfind import DisjointSet
from quandle_closure.errors import WitnessNotBijective

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitPartition:
    parent_order: int
    class_of: Tuple[int, ...]
    class_count: int
    classes: Tuple[SubSet, ...]

    def same_orbit(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def class_masks(self) -> Tuple[int, ...]:
        return tuple(c.mask for c in self.classes)


@lru_cache(maxsize=4096)
def orbits(q: Quandle) -> OrbitPartition:
    n = q.order
    ds = DisjointSet(n)
    for x in range(n):
        for y in range(n):
            ds.union(x, q.rows[x][y])
    class_of, count = ds.labels()
    masks = [0] * count
    for x, k in enumerate(class_of):
        masks[k] |= 1 << x
    logger.debug("order %d quandle has %d orbits", n, count)
    return OrbitPartition(n, class_of, count, tuple(SubSet(n, m) for m in masks))


def orbit_of(q: Quandle, x: int) -> SubSet:
    partition = orbits(q)
    return partition.classes[partition.class_of[x]]


def pi0(q: Quandle) -> Tuple[Quandle, QuandleHom]:
    """The trivial quandle of orbits and the unit η_X (as a surjective homomorphism)."""
    partition = orbits(q)
    components = trivial_quandle(partition.class_count)
    return components, validate_hom(q, components, partition.class_of)


def is_connected(q: Quandle) -> bool:
    # the empty quandle has no orbit at all, so it is not connected
    return orbits(q).class_count == 1


def pi0_product_witness(q1: Quandle, q2: Quandle) -> QuandleHom:
    """
    The comparison map γ : π₀(q1 × q2) → π₀(q1) × π₀(q2), [(x, y)] ↦ ([x], [y]).

    γ is always a bijective homomorphism; anything else is reported as
    WitnessNotBijective.
    """
    p = product(q1, q2)
    n2 = q2.order
    components, eta = pi0(p)
    c1, eta1 = pi0(q1)
    c2, eta2 = pi0(q2)
    target = product(c1, c2)

    gamma = [-1] * components.order
    for k in p.elements:
        value = eta1.map[k // n2] * c2.order + eta2.map[k % n2]
        cls = eta.map[k]
        if gamma[cls] not in (-1, value):
            logger.error("comparison map is not well defined on class %d", cls)
            raise WitnessNotBijective(gamma)
        gamma[cls] = value

    hom = validate_hom(components, target, gamma)
    if not (hom.is_injective and hom.is_surjective):
        logger.error("comparison map %s is not a bijection", gamma)
        raise WitnessNotBijective(gamma)
    return hom
