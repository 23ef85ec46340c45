"""
Finite quandles on the carrier {0..n-1}.

A quandle is stored as its Cayley table for ◁ together with the derived table
for ◁⁻¹ (column-wise inverse permutations). Subsets of a carrier are bitsets;
homomorphisms are plain arrays of images. Everything here is immutable once
constructed and every function is pure.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Literal, Optional, Sequence, Tuple

import numpy as np

from quandle_closure.config import settings
from quandle_closure.errors import (
    AxiomViolation,
    BoundExceeded,
    MalformedTable,
    NotHomomorphism,
    NotSubquandle,
    OverflowOrder,
)

logger = logging.getLogger(__name__)

Sign = Literal["+", "-"]


@dataclass(frozen=True)
class SubSet:
    """A subset of {0..parent_order-1}, stored as a bitmask."""

    parent_order: int
    mask: int = 0

    @classmethod
    def of(cls, parent_order: int, members: Iterable[int]) -> "SubSet":
        mask = 0
        for x in members:
            x = int(x)
            if not 0 <= x < parent_order:
                raise ValueError(f"element {x} outside carrier 0..{parent_order - 1}")
            mask |= 1 << x
        return cls(parent_order, mask)

    @classmethod
    def full(cls, parent_order: int) -> "SubSet":
        return cls(parent_order, (1 << parent_order) - 1)

    @classmethod
    def empty(cls, parent_order: int) -> "SubSet":
        return cls(parent_order, 0)

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(x for x in range(self.parent_order) if self.mask >> x & 1)

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.parent_order) - 1

    def issubset(self, other: "SubSet") -> bool:
        return self.mask & ~other.mask == 0

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.parent_order and bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __or__(self, other: "SubSet") -> "SubSet":
        return SubSet(self.parent_order, self.mask | other.mask)

    def __str__(self) -> str:
        return ",".join(map(str, self.members))


@dataclass(frozen=True, eq=False)
class Quandle:
    """A validated finite quandle; build one with `validate_quandle`."""

    table: np.ndarray
    inv_table: np.ndarray

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(v) for v in row) for row in self.table)

    @cached_property
    def inv_rows(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(v) for v in row) for row in self.inv_table)

    def op(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def inv(self, x: int, y: int) -> int:
        return self.inv_rows[x][y]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Quandle)
            and self.order == other.order
            and bool(np.array_equal(self.table, other.table))
        )

    def __hash__(self) -> int:
        return hash((self.order, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"Quandle(order={self.order}, rows={[list(r) for r in self.rows]})"


@dataclass(frozen=True, eq=False)
class QuandleHom:
    """A validated homomorphism; build one with `validate_hom`."""

    source: Quandle
    target: Quandle
    map: Tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def image(self) -> SubSet:
        return SubSet.of(self.target.order, self.map)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.order

    @property
    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    @property
    def is_constant(self) -> bool:
        # factors through the one-element quandle; maps out of the empty quandle count too
        return len(set(self.map)) <= 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QuandleHom)
            and self.map == other.map
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.map))


def _as_table(order: int, table, what: str = "table") -> np.ndarray:
    if order < 0:
        raise MalformedTable(f"negative order {order}")
    try:
        arr = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise MalformedTable(f"{what} is not a rectangular integer array: {exc}")
    if order == 0 and arr.size == 0:
        arr = arr.reshape(0, 0)
    if arr.shape != (order, order):
        raise MalformedTable(f"expected a {order}x{order} {what}, got shape {arr.shape}")
    bad = np.argwhere((arr < 0) | (arr >= order))
    if bad.size:
        x, y = (int(v) for v in bad[0])
        raise MalformedTable(
            f"{what} entry {int(arr[x, y])} at ({x},{y}) outside 0..{order - 1}"
        )
    return arr


def _first_column_repeat(t: np.ndarray) -> Optional[Tuple[int, int]]:
    """First (x, y) such that t[x, y] already occurs higher up in column y."""
    n = t.shape[0]
    cols = np.arange(n)
    seen = np.zeros((n, n), dtype=bool)
    for x in range(n):
        dup = np.flatnonzero(seen[cols, t[x]])
        if dup.size:
            return x, int(dup[0])
        seen[cols, t[x]] = True
    return None


def _first_distributivity_failure(t: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """First (x, y, z) with (x◁y)◁z ≠ (x◁z)◁(y◁z), scanning x one slab at a time."""
    n = t.shape[0]
    cols = np.arange(n)
    for x in range(n):
        lhs = t[t[x][:, None], cols[None, :]]
        rhs = t[t[x][None, :], t]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            y, z = (int(v) for v in bad[0])
            return x, y, z
    return None


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def validate_quandle(order: int, table, inv_table=None) -> Quandle:
    """
    Check the quandle axioms on a Cayley table and return the Quandle.

    The ◁⁻¹ table is derived by inverting each column permutation. A supplied
    `inv_table` is compared against the derived one and rejected as an (A2)
    failure on mismatch. Witnesses are the first failures in lexicographic order.
    """
    t = _as_table(order, table)
    n = order
    idx = np.arange(n)

    bad = np.flatnonzero(t[idx, idx] != idx)
    if bad.size:
        x = int(bad[0])
        raise AxiomViolation("A1", (x, x))

    repeat = _first_column_repeat(t)
    if repeat is not None:
        raise AxiomViolation("A2", repeat)

    inv = np.empty_like(t)
    inv[t, idx[None, :]] = idx[:, None]
    if inv_table is not None:
        supplied = _as_table(order, inv_table, what="inverse table")
        mismatch = np.argwhere(supplied != inv)
        if mismatch.size:
            raise AxiomViolation("A2", tuple(int(v) for v in mismatch[0]))

    failure = _first_distributivity_failure(t)
    if failure is None:
        failure = _first_distributivity_failure(inv)
    if failure is not None:
        raise AxiomViolation("A3", failure)

    return Quandle(_frozen(t), _frozen(inv))


def trivial_quandle(n: int) -> Quandle:
    return validate_quandle(n, np.repeat(np.arange(n), n).reshape(n, n))


def dihedral_quandle(n: int) -> Quandle:
    """Dihedral quandle on Z/n: a ◁ b = 2b - a mod n."""
    idx = np.arange(n)
    return validate_quandle(n, (2 * idx[None, :] - idx[:, None]) % n)


def relabel(q: Quandle, sigma: Sequence[int]) -> Quandle:
    """Transport the structure of q along the bijection x ↦ sigma[x]."""
    s = np.asarray(sigma, dtype=np.int64)
    if sorted(s.tolist()) != list(q.elements):
        raise ValueError(f"{list(sigma)} is not a permutation of 0..{q.order - 1}")
    t = np.empty_like(q.table)
    t[np.ix_(s, s)] = s[q.table]
    return validate_quandle(q.order, t)


def _check_element(q: Quandle, x: int) -> int:
    if not 0 <= x < q.order:
        raise ValueError(f"element {x} outside carrier 0..{q.order - 1}")
    return x


def _check_subset(q: Quandle, s: SubSet) -> None:
    if s.parent_order != q.order:
        raise ValueError(
            f"subset of a carrier of order {s.parent_order} used on order {q.order}"
        )


def chain_apply(q: Quandle, x: int, steps: Sequence[Tuple[Sign, int]]) -> int:
    """Left fold x ◁^{α1} y1 ◁^{α2} ... ◁^{αn} yn."""
    value = _check_element(q, x)
    for sign, y in steps:
        _check_element(q, y)
        if sign == "+":
            value = q.rows[value][y]
        elif sign == "-":
            value = q.inv_rows[value][y]
        else:
            raise ValueError(f"unknown operation sign {sign!r}")
    return value


def product(q1: Quandle, q2: Quandle) -> Quandle:
    """Componentwise product; the pair (i, j) is encoded as i * q2.order + j."""
    n1, n2 = q1.order, q2.order
    order = n1 * n2
    if order > settings.max_carrier_order:
        raise OverflowOrder(order, settings.max_carrier_order)
    t = q1.table[:, None, :, None] * n2 + q2.table[None, :, None, :]
    return validate_quandle(order, t.reshape(order, order))


def pair_index(q2_order: int, i: int, j: int) -> int:
    return i * q2_order + j


def product_subset(s: SubSet, t: SubSet) -> SubSet:
    """S × T inside the carrier of `product`, in the same pair encoding."""
    n2 = t.parent_order
    return SubSet.of(s.parent_order * n2, (pair_index(n2, i, j) for i in s for j in t))


def product_projections(q1: Quandle, q2: Quandle) -> Tuple["QuandleHom", "QuandleHom"]:
    p = product(q1, q2)
    n2 = q2.order
    first = validate_hom(p, q1, [k // n2 for k in p.elements])
    second = validate_hom(p, q2, [k % n2 for k in p.elements])
    return first, second


def closure_witness(q: Quandle, s: SubSet) -> Optional[Tuple[int, int]]:
    """First (a, b) in s × s whose ◁ or ◁⁻¹ leaves s, or None if s is a subquandle."""
    _check_subset(q, s)
    idx = np.array(s.members, dtype=np.int64)
    if idx.size == 0:
        return None
    inside = np.zeros(q.order, dtype=bool)
    inside[idx] = True
    escapes = ~inside[q.table[np.ix_(idx, idx)]] | ~inside[q.inv_table[np.ix_(idx, idx)]]
    bad = np.argwhere(escapes)
    if bad.size:
        a, b = bad[0]
        return int(idx[a]), int(idx[b])
    return None


def is_subquandle(q: Quandle, s: SubSet) -> bool:
    return closure_witness(q, s) is None


def require_subquandle(q: Quandle, s: SubSet) -> None:
    witness = closure_witness(q, s)
    if witness is not None:
        raise NotSubquandle(s.members, witness)


def generated_subquandle(q: Quandle, seed: SubSet) -> SubSet:
    """Least subquandle containing seed (worklist closure under ◁ and ◁⁻¹)."""
    _check_subset(q, seed)
    rows, inv_rows = q.rows, q.inv_rows
    members: List[int] = list(seed.members)
    mask = seed.mask
    queue = deque(members)
    while queue:
        a = queue.popleft()
        for b in list(members):
            for c in (rows[a][b], rows[b][a], inv_rows[a][b], inv_rows[b][a]):
                if not mask >> c & 1:
                    mask |= 1 << c
                    members.append(c)
                    queue.append(c)
    return SubSet(q.order, mask)


def chain_set(q: Quandle, seed: SubSet) -> SubSet:
    """All chain values a1 ◁^{α1} a2 ... ◁^{αn-1} an with every ai in seed."""
    _check_subset(q, seed)
    letters = seed.members
    values = set(letters)
    frontier = set(letters)
    while frontier:
        fresh = set()
        for v in frontier:
            for a in letters:
                for c in (q.rows[v][a], q.inv_rows[v][a]):
                    if c not in values:
                        fresh.add(c)
        values |= fresh
        frontier = fresh
    return SubSet.of(q.order, values)


def induced_subquandle(q: Quandle, s: SubSet) -> Tuple[Quandle, QuandleHom]:
    """The subquandle on s re-indexed by ascending members, with its inclusion."""
    require_subquandle(q, s)
    idx = np.array(s.members, dtype=np.int64)
    position = np.full(q.order, -1, dtype=np.int64)
    position[idx] = np.arange(idx.size)
    sub = validate_quandle(idx.size, position[q.table[np.ix_(idx, idx)]])
    return sub, QuandleHom(sub, q, tuple(int(v) for v in idx))


def validate_hom(source: Quandle, target: Quandle, mapping) -> QuandleHom:
    """Check that mapping preserves ◁ and ◁⁻¹; the first failing pair is the witness."""
    try:
        f = np.asarray(mapping, dtype=np.int64).reshape(-1)
    except (TypeError, ValueError) as exc:
        raise MalformedTable(f"map is not an integer array: {exc}")
    if f.size != source.order:
        raise MalformedTable(f"map has {f.size} entries, source has order {source.order}")
    out = np.flatnonzero((f < 0) | (f >= target.order))
    if out.size:
        x = int(out[0])
        raise MalformedTable(f"image {int(f[x])} of {x} outside the target carrier")

    for symbol, src, dst in (
        ("◁", source.table, target.table),
        ("◁⁻¹", source.inv_table, target.inv_table),
    ):
        bad = np.argwhere(f[src] != dst[f[:, None], f[None, :]])
        if bad.size:
            raise NotHomomorphism(tuple(int(v) for v in bad[0]), symbol)
    return QuandleHom(source, target, tuple(int(v) for v in f))


def identity_hom(q: Quandle) -> QuandleHom:
    return QuandleHom(q, q, tuple(q.elements))


def compose_homs(g: QuandleHom, f: QuandleHom) -> QuandleHom:
    """g ∘ f."""
    if f.target != g.source:
        raise ValueError("cannot compose: target of f is not the source of g")
    return QuandleHom(f.source, g.target, tuple(g.map[v] for v in f.map))


def image_subquandle(f: QuandleHom, s: SubSet) -> SubSet:
    require_subquandle(f.source, s)
    return SubSet.of(f.target.order, (f.map[x] for x in s))


def preimage_subquandle(f: QuandleHom, t: SubSet) -> SubSet:
    require_subquandle(f.target, t)
    return SubSet.of(f.source.order, (x for x in f.source.elements if f.map[x] in t))


def enumerate_homs(source: Quandle, target: Quandle) -> List[QuandleHom]:
    """
    All homomorphisms source → target in lexicographic order of their maps.

    Elements of the source are assigned in increasing order; each defining
    equation f(a◁b) = f(a)◁f(b) (and its ◁⁻¹ twin) is checked as soon as the
    largest of a, b, a◁b has received its image.
    """
    n1 = source.order
    rows2, inv2 = target.rows, target.inv_rows
    checks: List[List[Tuple[int, int, int, bool]]] = [[] for _ in range(n1)]
    for a in range(n1):
        for b in range(n1):
            for c, inverse in ((source.rows[a][b], False), (source.inv_rows[a][b], True)):
                checks[max(a, b, c)].append((a, b, c, inverse))

    images = [0] * n1
    found: List[QuandleHom] = []

    def extend(x: int) -> None:
        if x == n1:
            found.append(QuandleHom(source, target, tuple(images)))
            return
        for v in target.elements:
            images[x] = v
            if all(
                images[c] == (inv2 if inverse else rows2)[images[a]][images[b]]
                for a, b, c, inverse in checks[x]
            ):
                extend(x + 1)

    extend(0)
    logger.debug(
        "found %d homomorphisms from order %d to order %d", len(found), n1, target.order
    )
    return found


def all_subquandles(q: Quandle) -> List[SubSet]:
    """Every subquandle (empty one included), by size then lexicographically."""
    n = q.order
    if n > settings.exhaustive_bound:
        raise BoundExceeded(n, settings.exhaustive_bound, "subquandle enumeration")
    rows = q.rows
    closed = []
    for mask in range(1 << n):
        members = [x for x in range(n) if mask >> x & 1]
        if all(mask >> rows[a][b] & 1 for a in members for b in members):
            # ρ_b maps a finite set into itself injectively, so ◁⁻¹ closure follows
            closed.append((len(members), members, mask))
    closed.sort()
    return [SubSet(n, mask) for _, _, mask in closed]
