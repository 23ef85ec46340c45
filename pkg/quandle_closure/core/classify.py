"""Classification predicates: trivial, quasi-trivial, membership of the disconnectedness 𝒵."""

import logging
from typing import List

from quandle_closure.core.closure import is_c_connected, is_c_separated
from quandle_closure.core.connectivity import is_connected, orbits
from quandle_closure.core.quandle import (
    Quandle,
    QuandleHom,
    SubSet,
    all_subquandles,
    induced_subquandle,
)
from quandle_closure.models import ClassificationReport

logger = logging.getLogger(__name__)


def is_trivial(q: Quandle) -> bool:
    return all(row == (x,) * q.order for x, row in enumerate(q.rows))


def is_quasi_trivial(q: Quandle) -> bool:
    """
    x ◁ y = x = x ◁⁻¹ y whenever y lies in the orbit of x.

    The values of the chains x ◁^{α1} x1 ... ◁^{αn} xn are exactly the orbit
    of x, so this finite check is the full quasi-triviality condition.
    """
    partition = orbits(q)
    for x in q.elements:
        for y in partition.classes[partition.class_of[x]]:
            if q.rows[x][y] != x or q.inv_rows[x][y] != x:
                return False
    return True


def connected_subquandles(q: Quandle) -> List[SubSet]:
    """Subquandles with at least two elements that are connected as quandles."""
    found = []
    for s in all_subquandles(q):
        if len(s) < 2:
            continue
        sub, _ = induced_subquandle(q, s)
        if is_connected(sub):
            found.append(s)
    return found


def in_disconnectedness_Z(q: Quandle) -> bool:
    """No connected subquandle of q has more than one element."""
    return not connected_subquandles(q)


def is_constant(f: QuandleHom) -> bool:
    return f.is_constant


def classify(q: Quandle) -> ClassificationReport:
    report = ClassificationReport(
        order=q.order,
        trivial=is_trivial(q),
        quasi_trivial=is_quasi_trivial(q),
        connected=is_connected(q),
        c_connected=is_c_connected(q),
        c_separated=is_c_separated(q),
        in_Z=in_disconnectedness_Z(q),
        orbits=orbits(q).class_count,
    )
    logger.debug("classified order %d quandle: %r", q.order, report)
    return report
