"""
The closure operator on subquandles induced by the reflection onto trivial quandles.

A subquandle M of X is closed up to the union of the orbits it touches. The
same subquandle is obtained by pulling the image η_X(M) back along the unit,
which is how `pullback_closure` computes it.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

from quandle_closure.core.connectivity import orbits, pi0
from quandle_closure.core.quandle import (
    Quandle,
    QuandleHom,
    SubSet,
    closure_witness,
    generated_subquandle,
    image_subquandle,
    induced_subquandle,
    pair_index,
    preimage_subquandle,
    product,
    require_subquandle,
)
from quandle_closure.errors import NotSubquandle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DenseClosedFactorization:
    """M → c(M) → X: `inner` is M re-indexed inside the quandle induced on `outer`."""

    inner: SubSet
    outer: SubSet
    closure_quandle: Quandle
    inclusion: QuandleHom


def closure_sub(q: Quandle, m: SubSet) -> SubSet:
    require_subquandle(q, m)
    mask = 0
    for orbit in orbits(q).class_masks():
        if orbit & m.mask:
            mask |= orbit
    return SubSet(q.order, mask)


def pullback_closure(q: Quandle, m: SubSet) -> SubSet:
    """η_X⁻¹(η_X(M))."""
    _, eta = pi0(q)
    return preimage_subquandle(eta, image_subquandle(eta, m))


def is_dense(q: Quandle, m: SubSet) -> bool:
    return closure_sub(q, m).is_full


def is_closed(q: Quandle, m: SubSet) -> bool:
    return closure_sub(q, m) == m


def dense_closed_factorization(q: Quandle, m: SubSet) -> DenseClosedFactorization:
    outer = closure_sub(q, m)
    sub, inclusion = induced_subquandle(q, outer)
    inner = SubSet.of(sub.order, (k for k, x in enumerate(inclusion.map) if x in m))
    return DenseClosedFactorization(inner, outer, sub, inclusion)


def weakly_hereditary_at(q: Quandle, m: SubSet) -> bool:
    """Whether M is dense in its own closure."""
    factorization = dense_closed_factorization(q, m)
    return is_dense(factorization.closure_quandle, factorization.inner)


def diagonal(q: Quandle) -> Tuple[Quandle, SubSet]:
    """q × q together with its diagonal {(x, x)}."""
    square = product(q, q)
    n = q.order
    return square, SubSet.of(square.order, (pair_index(n, x, x) for x in q.elements))


def _diagonal_subquandle(q: Quandle) -> Tuple[Quandle, SubSet]:
    square, diag = diagonal(q)
    generated = generated_subquandle(square, diag)
    if generated != diag:
        # the diagonal is closed by idempotency
        logger.error("diagonal of %r generated %s", q, generated)
        raise NotSubquandle(diag.members, closure_witness(square, diag) or (-1, -1))
    return square, generated


def is_c_connected(q: Quandle) -> bool:
    """The diagonal is dense in q × q."""
    square, diag = _diagonal_subquandle(q)
    return is_dense(square, diag)


def is_c_separated(q: Quandle) -> bool:
    """The diagonal is closed in q × q."""
    square, diag = _diagonal_subquandle(q)
    return is_closed(square, diag)
