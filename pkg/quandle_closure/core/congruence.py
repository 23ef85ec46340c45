"""
Congruences, quotients and the effective closure operator on congruences.

A congruence is kept as a partition (class label per element, classes numbered
by their smallest member). Raw pair sets only appear as `Relation`, the result
type of relational composition, since composites of equivalences need not be
equivalences.
"""

import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from quandle_closure.core.connectivity import orbits, pi0
from quandle_closure.core.quandle import (
    Quandle,
    QuandleHom,
    SubSet,
    compose_homs,
    validate_hom,
    validate_quandle,
)
from quandle_closure.core.unionfind import DisjointSet
from quandle_closure.errors import NotCongruence, NotSurjective, ParentMismatch

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class Relation:
    parent_order: int
    pairs: FrozenSet[Pair]

    @classmethod
    def of(cls, parent_order: int, pairs: Iterable[Pair]) -> "Relation":
        checked = set()
        for a, b in pairs:
            a, b = int(a), int(b)
            if not (0 <= a < parent_order and 0 <= b < parent_order):
                raise ValueError(f"pair ({a},{b}) outside carrier 0..{parent_order - 1}")
            checked.add((a, b))
        return cls(parent_order, frozenset(checked))

    def issubset(self, other: "Relation") -> bool:
        return self.pairs <= other.pairs

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Congruence:
    parent_order: int
    class_of: Tuple[int, ...]
    class_count: int

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Congruence":
        """The partition whose blocks are the fibres of labels, renumbered by first occurrence."""
        index: Dict[int, int] = {}
        class_of = []
        for label in labels:
            class_of.append(index.setdefault(int(label), len(index)))
        return cls(len(class_of), tuple(class_of), len(index))

    @classmethod
    def from_classes(cls, parent_order: int, classes: Iterable[Iterable[int]]) -> "Congruence":
        """Elements not listed in any class stay singletons."""
        labels = list(range(parent_order))
        for block in classes:
            block = list(block)
            for x in block:
                labels[x] = parent_order + block[0]
        return cls.from_labels(labels)

    @classmethod
    def discrete(cls, parent_order: int) -> "Congruence":
        return cls.from_labels(range(parent_order))

    @classmethod
    def total(cls, parent_order: int) -> "Congruence":
        return cls.from_labels([0] * parent_order)

    @property
    def classes(self) -> Tuple[SubSet, ...]:
        masks = [0] * self.class_count
        for x, k in enumerate(self.class_of):
            masks[k] |= 1 << x
        return tuple(SubSet(self.parent_order, m) for m in masks)

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def pairs(self) -> FrozenSet[Pair]:
        blocks = [c.members for c in self.classes]
        return frozenset((a, b) for block in blocks for a in block for b in block)

    def as_relation(self) -> Relation:
        return Relation(self.parent_order, self.pairs())

    def refines(self, other: "Congruence") -> bool:
        """self ⊆ other as relations."""
        image: Dict[int, int] = {}
        return all(
            image.setdefault(k, other.class_of[x]) == other.class_of[x]
            for x, k in enumerate(self.class_of)
        )

    def __str__(self) -> str:
        return ";".join(str(c) for c in self.classes)


def _check_parent(q: Quandle, order: int) -> None:
    if order != q.order:
        raise ParentMismatch(order, q.order)


def compatibility_witness(q: Quandle, labels: Sequence[int]) -> Optional[Tuple[int, int, int]]:
    """
    First (a, b, c) with a ~ b but a◁c ≁ b◁c or c◁a ≁ c◁b (or the ◁⁻¹ analogues).
    """
    cls = np.asarray(labels, dtype=np.int64).reshape(-1)
    if cls.size == 0:
        return None
    same = cls[:, None] == cls[None, :]
    broken = np.zeros((cls.size,) * 3, dtype=bool)
    for t in (q.table, q.inv_table):
        right = cls[t]
        left = right.T
        broken |= (right[:, None, :] != right[None, :, :]) | (left[:, None, :] != left[None, :, :])
    bad = np.argwhere(same[:, :, None] & broken)
    if bad.size:
        return tuple(int(v) for v in bad[0])
    return None


def validate_congruence(q: Quandle, labels: Sequence[int]) -> Congruence:
    if len(labels) != q.order:
        raise ParentMismatch(len(labels), q.order)
    witness = compatibility_witness(q, labels)
    if witness is not None:
        raise NotCongruence(witness)
    return Congruence.from_labels(labels)


def relation_to_congruence(q: Quandle, rel: Relation) -> Congruence:
    """Read a pair set as a congruence, failing if it is not one."""
    _check_parent(q, rel.parent_order)
    ds = DisjointSet(q.order)
    for a, b in rel.pairs:
        ds.union(a, b)
    class_of, _ = ds.labels()
    candidate = Congruence.from_labels(class_of)
    missing = sorted(candidate.pairs() - rel.pairs)
    if missing:
        raise NotCongruence(missing[0], "not an equivalence relation")
    return validate_congruence(q, candidate.class_of)


def inn_congruence(q: Quandle) -> Congruence:
    """x ~ y iff x and y lie in the same orbit."""
    return validate_congruence(q, orbits(q).class_of)


def quotient(q: Quandle, theta: Congruence) -> Tuple[Quandle, QuandleHom]:
    _check_parent(q, theta.parent_order)
    theta = validate_congruence(q, theta.class_of)
    reps = [c.members[0] for c in theta.classes]
    cls = np.asarray(theta.class_of, dtype=np.int64)
    table = cls[q.table[np.ix_(reps, reps)]] if reps else np.zeros((0, 0), dtype=np.int64)
    quo = validate_quandle(theta.class_count, table)
    return quo, validate_hom(q, quo, theta.class_of)


def kernel_pair(f: QuandleHom) -> Congruence:
    return Congruence.from_labels(f.map)


def congruence_generated(q: Quandle, seed: Relation) -> Congruence:
    """
    Least congruence containing seed.

    Every pair that actually merges two classes has all of its translates
    queued, so the resulting equivalence is closed under x ↦ x ◁^± c and
    x ↦ c ◁^± x, which is compatibility.
    """
    _check_parent(q, seed.parent_order)
    rows, inv_rows = q.rows, q.inv_rows
    ds = DisjointSet(q.order)
    queue = deque(sorted(seed.pairs))
    while queue:
        a, b = queue.popleft()
        if not ds.union(a, b):
            continue
        for c in q.elements:
            queue.append((rows[a][c], rows[b][c]))
            queue.append((rows[c][a], rows[c][b]))
            queue.append((inv_rows[a][c], inv_rows[b][c]))
            queue.append((inv_rows[c][a], inv_rows[c][b]))
    class_of, _ = ds.labels()
    return Congruence.from_labels(class_of)


def _pairs(r: Union[Relation, Congruence]) -> Relation:
    return r.as_relation() if isinstance(r, Congruence) else r


def compose(r: Union[Relation, Congruence], s: Union[Relation, Congruence]) -> Relation:
    """{(a, c) | (a, b) ∈ r and (b, c) ∈ s for some b}."""
    r, s = _pairs(r), _pairs(s)
    if r.parent_order != s.parent_order:
        raise ParentMismatch(r.parent_order, s.parent_order)
    successors: Dict[int, List[int]] = defaultdict(list)
    for b, c in s.pairs:
        successors[b].append(c)
    return Relation(
        r.parent_order,
        frozenset((a, c) for a, b in r.pairs for c in successors.get(b, ())),
    )


def permutes_with_inn(q: Quandle, r: Congruence) -> bool:
    _check_parent(q, r.parent_order)
    r = validate_congruence(q, r.class_of)
    inn = inn_congruence(q)
    return compose(inn, r).pairs == compose(r, inn).pairs


def effective_closure(q: Quandle, r: Congruence) -> Congruence:
    """c(R) = R ∘ ∼Inn, read back as a congruence."""
    _check_parent(q, r.parent_order)
    r = validate_congruence(q, r.class_of)
    composite = compose(r, inn_congruence(q))
    try:
        return relation_to_congruence(q, composite)
    except NotCongruence:
        logger.error("R ∘ ∼Inn is not a congruence for R = %s on %r", r, q)
        raise


def effective_closure_via_kernel_pair(q: Quandle, r: Congruence) -> Congruence:
    """Kernel pair of X → X/R → π₀(X/R)."""
    quo, projection = quotient(q, r)
    _, eta = pi0(quo)
    return kernel_pair(compose_homs(eta, projection))


def partition_join(r: Congruence, s: Congruence) -> Congruence:
    """Join of two partitions of the same carrier."""
    if r.parent_order != s.parent_order:
        raise ParentMismatch(r.parent_order, s.parent_order)
    ds = DisjointSet(r.parent_order)
    for labels in (r.class_of, s.class_of):
        first: Dict[int, int] = {}
        for x, k in enumerate(labels):
            ds.union(first.setdefault(k, x), x)
    class_of, _ = ds.labels()
    return Congruence.from_labels(class_of)


def join(q: Quandle, r: Congruence, s: Congruence) -> Congruence:
    if r.parent_order != s.parent_order:
        raise ParentMismatch(r.parent_order, s.parent_order)
    _check_parent(q, r.parent_order)
    r = validate_congruence(q, r.class_of)
    s = validate_congruence(q, s.class_of)
    generated = congruence_generated(q, Relation(q.order, r.pairs() | s.pairs()))
    merged = partition_join(r, s)
    if generated != merged:
        logger.error("generated join %s differs from partition join %s", generated, merged)
        raise NotCongruence(compatibility_witness(q, merged.class_of) or (), "join")
    return generated


def quotient_join_kernel(q: Quandle, r: Congruence, s: Congruence) -> Congruence:
    """
    Kernel of X → X/R → P → π₀(P), where P = X/(R ∨ S) receives X/R through
    the canonical comparison map (P is the pushout of the two quotients).
    """
    joined = join(q, r, s)
    pushout, q_join = quotient(q, joined)
    by_r, q_r = quotient(q, r)
    reps = [c.members[0] for c in validate_congruence(q, r.class_of).classes]
    i1 = validate_hom(by_r, pushout, [q_join.map[x] for x in reps])
    _, eta = pi0(pushout)
    return kernel_pair(compose_homs(eta, compose_homs(i1, q_r)))


def preimage_congruence(f: QuandleHom, r: Congruence) -> Congruence:
    _check_parent(f.target, r.parent_order)
    return Congruence.from_labels([r.class_of[v] for v in f.map])


def direct_image_relation(f: QuandleHom, r: Congruence) -> Relation:
    _check_parent(f.source, r.parent_order)
    return Relation(f.target.order, frozenset((f.map[a], f.map[b]) for a, b in r.pairs()))


def image_congruence(f: QuandleHom, r: Congruence) -> Congruence:
    """Congruence generated by {(f(a), f(b)) | a R b}; f must be surjective."""
    if not f.is_surjective:
        missing = min(set(f.target.elements) - set(f.map))
        raise NotSurjective(f.map, missing)
    return congruence_generated(f.target, direct_image_relation(f, r))


def enumerate_congruences(q: Quandle) -> List[Congruence]:
    """All congruences, via restricted growth strings filtered by compatibility."""
    n = q.order
    found: List[Congruence] = []
    labels = [0] * n

    def grow(i: int, top: int) -> None:
        if i == n:
            if compatibility_witness(q, labels) is None:
                found.append(Congruence.from_labels(labels))
            return
        for k in range(top + 2):
            labels[i] = k
            grow(i + 1, max(top, k))

    if n == 0:
        found.append(Congruence.discrete(0))
    else:
        grow(1, 0)
    logger.debug("order %d quandle has %d congruences", n, len(found))
    return found
