"""
Enumeration of finite quandles up to isomorphism.

A quandle on {0..n-1} is the same thing as a family of permutations ρ_y
(the columns of its table) with ρ_y(y) = y and

    ρ_{ρ_b(a)} = ρ_b ∘ ρ_a ∘ ρ_b⁻¹   for all a, b,

which is self-distributivity read column-wise. The search assigns columns one at
a time and propagates this identity: each pair of assigned columns either
forces a further column or checks an existing one. Column 0 is restricted to one
permutation per cycle type (relabelling by a permutation fixing 0 conjugates
it), and the surviving tables are deduplicated by canonical form.
"""

import itertools
import logging
from collections import deque
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from quandle_closure.config import settings
from quandle_closure.core.connectivity import orbits
from quandle_closure.core.quandle import Quandle, validate_quandle
from quandle_closure.errors import AxiomViolation, BoundExceeded

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]
Table = Tuple[Tuple[int, ...], ...]

NAIVE_BOUND = 3
# configured enumeration bounds are clamped to this
MAX_ENUMERATION_ORDER = 6


@lru_cache(maxsize=None)
def _perm_arrays(n: int) -> Tuple[np.ndarray, np.ndarray]:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    inverses = np.argsort(perms, axis=1)
    return perms, inverses


def _canonical_flat(t: np.ndarray) -> Tuple[int, ...]:
    n = t.shape[0]
    if n <= 1:
        return tuple(int(v) for v in t.reshape(-1))
    perms, inverses = _perm_arrays(n)
    inner = t[inverses[:, :, None], inverses[:, None, :]].reshape(len(perms), n * n)
    relabeled = np.take_along_axis(perms, inner, axis=1)
    best = np.lexsort(relabeled.T[::-1])[0]
    return tuple(int(v) for v in relabeled[best])


def _unflatten(flat: Sequence[int], n: int) -> Table:
    return tuple(tuple(flat[i * n : (i + 1) * n]) for i in range(n))


def canonical_form(q: Quandle) -> Table:
    """Lexicographically least table among all relabellings of q."""
    if q.order > settings.canonical_bound:
        raise BoundExceeded(q.order, settings.canonical_bound, "canonical form")
    return _unflatten(_canonical_flat(q.table), q.order)


def invariants(q: Quandle) -> Tuple:
    """Per-element signatures (column fixed points, row fixed points, orbit size), sorted."""
    return tuple(sorted(_signatures(q)))


def _signatures(q: Quandle) -> List[Tuple[int, int, int]]:
    t = q.table
    idx = np.arange(q.order)
    column_fixed = (t == idx[:, None]).sum(axis=0)
    row_fixed = (t == idx[:, None]).sum(axis=1)
    partition = orbits(q)
    sizes = [len(c) for c in partition.classes]
    return [
        (int(column_fixed[x]), int(row_fixed[x]), sizes[partition.class_of[x]])
        for x in q.elements
    ]


def are_isomorphic(q1: Quandle, q2: Quandle) -> Optional[Perm]:
    """A bijection σ with σ(x ◁ y) = σ(x) ◁ σ(y), or None if there is none."""
    n = q1.order
    if n != q2.order:
        return None
    sig1, sig2 = _signatures(q1), _signatures(q2)
    if sorted(sig1) != sorted(sig2):
        return None

    rows1, rows2 = q1.rows, q2.rows
    checks: List[List[Tuple[int, int, int]]] = [[] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            c = rows1[a][b]
            checks[max(a, b, c)].append((a, b, c))

    sigma = [-1] * n
    used = [False] * n

    def extend(x: int) -> bool:
        if x == n:
            return True
        for v in range(n):
            if used[v] or sig2[v] != sig1[x]:
                continue
            sigma[x], used[v] = v, True
            if all(sigma[c] == rows2[sigma[a]][sigma[b]] for a, b, c in checks[x]):
                if extend(x + 1):
                    return True
            used[v] = False
        sigma[x] = -1
        return False

    return tuple(sigma) if extend(0) else None


def _cycle_type_representatives(n: int) -> List[Perm]:
    """One permutation of {0..n-1} fixing 0 per cycle type on {1..n-1}."""

    def partitions(total: int, largest: int):
        if total == 0:
            yield []
            return
        for part in range(min(total, largest), 0, -1):
            for rest in partitions(total - part, part):
                yield [part] + rest

    reps = []
    for parts in partitions(n - 1, n - 1):
        perm = list(range(n))
        start = 1
        for length in parts:
            cycle = list(range(start, start + length))
            for i, x in enumerate(cycle):
                perm[x] = cycle[(i + 1) % length]
            start += length
        reps.append(tuple(perm))
    return reps


def _perms_fixing(n: int, y: int) -> List[Perm]:
    others = [x for x in range(n) if x != y]
    found = []
    for images in itertools.permutations(others):
        perm = list(images)
        perm.insert(y, y)
        found.append(tuple(perm))
    return found


def _conjugate(outer: Perm, inner: Perm) -> Perm:
    """outer ∘ inner ∘ outer⁻¹."""
    result = [0] * len(outer)
    for x, ox in enumerate(outer):
        result[ox] = outer[inner[x]]
    return tuple(result)


def _search(n: int) -> Dict[Tuple[int, ...], np.ndarray]:
    columns: List[Optional[Perm]] = [None] * n
    candidates = [_cycle_type_representatives(n)] + [_perms_fixing(n, y) for y in range(1, n)]
    found: Dict[Tuple[int, ...], np.ndarray] = {}
    leaves = 0

    def propagate(start: int, added: List[int]) -> bool:
        queue = deque([start])
        while queue:
            y = queue.popleft()
            for z in range(n):
                if columns[z] is None:
                    continue
                for a, b in ((y, z), (z, y)):
                    rho_b = columns[b]
                    w = rho_b[a]
                    required = _conjugate(rho_b, columns[a])
                    if columns[w] is None:
                        columns[w] = required
                        added.append(w)
                        queue.append(w)
                    elif columns[w] != required:
                        return False
        return True

    def extend() -> None:
        nonlocal leaves
        try:
            y = columns.index(None)
        except ValueError:
            leaves += 1
            table = np.array(columns, dtype=np.int64).T
            found.setdefault(_canonical_flat(table), table)
            return
        for perm in candidates[y]:
            columns[y] = perm
            added = [y]
            if propagate(y, added):
                extend()
            for w in added:
                columns[w] = None

    if n == 0:
        found[()] = np.zeros((0, 0), dtype=np.int64)
    else:
        extend()
    logger.debug("order %d search reached %d complete tables", n, leaves)
    return found


def enumerate_quandles(n: int) -> List[Quandle]:
    """One quandle per isomorphism class of order n, as canonical tables in order."""
    if n < 0:
        raise ValueError(f"negative order {n}")
    bound = min(settings.enumeration_bound, MAX_ENUMERATION_ORDER)
    if n > bound:
        raise BoundExceeded(n, bound, "quandle enumeration")
    found = _search(n)
    result = [validate_quandle(n, _unflatten(flat, n)) for flat in sorted(found)]
    logger.info("order %d: %d isomorphism classes", n, len(result))
    return result


def naive_quandles(n: int) -> List[Quandle]:
    """Brute force: every n×n table, filtered by the axioms, deduplicated by canonical form."""
    if n > NAIVE_BOUND:
        raise BoundExceeded(n, NAIVE_BOUND, "naive enumeration")
    found: Dict[Tuple[int, ...], Quandle] = {}
    for flat in itertools.product(range(n), repeat=n * n):
        try:
            q = validate_quandle(n, np.array(flat, dtype=np.int64).reshape(n, n))
        except AxiomViolation:
            continue
        found.setdefault(_canonical_flat(q.table), q)
    return [validate_quandle(n, _unflatten(flat, n)) for flat in sorted(found)]
