import pytest
from hypothesis import given, strategies as st

from quandle_closure.config import settings
from quandle_closure.core.enumerate import (
    are_isomorphic,
    canonical_form,
    enumerate_quandles,
    invariants,
    naive_quandles,
)
from quandle_closure.core.quandle import dihedral_quandle, relabel, trivial_quandle
from quandle_closure.errors import BoundExceeded
from tests.helpers import quandles_of_order

E_CANONICAL = ((0, 0, 0), (2, 1, 1), (1, 2, 2))
R3_TABLE = ((0, 2, 1), (2, 1, 0), (1, 0, 2))

quandles = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.sampled_from(quandles_of_order(n))
)


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 1), (3, 3), (4, 7)])
def test_class_counts(n, count):
    assert len(enumerate_quandles(n)) == count


@pytest.mark.slow
@pytest.mark.parametrize("n, count", [(5, 22), (6, 73)])
def test_class_counts_larger(n, count):
    assert len(enumerate_quandles(n)) == count


def test_order_three_listing():
    tables = [q.rows for q in enumerate_quandles(3)]
    assert tables == [trivial_quandle(3).rows, E_CANONICAL, R3_TABLE]


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_matches_naive(n):
    assert enumerate_quandles(n) == naive_quandles(n)


def test_deterministic():
    assert enumerate_quandles(4) == enumerate_quandles(4)


def test_enumeration_bound():
    settings.enumeration_bound = 3
    with pytest.raises(BoundExceeded):
        enumerate_quandles(4)


def test_enumeration_bound_cannot_be_raised_past_six():
    settings.enumeration_bound = 9
    with pytest.raises(BoundExceeded) as info:
        enumerate_quandles(7)
    assert info.value.bound == 6


def test_naive_bound():
    with pytest.raises(BoundExceeded):
        naive_quandles(4)


def test_negative_order():
    with pytest.raises(ValueError):
        enumerate_quandles(-1)


class TestCanonicalForm:
    def test_e(self, e_quandle):
        assert canonical_form(e_quandle) == E_CANONICAL

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_trivial_is_its_own_form(self, n):
        assert canonical_form(trivial_quandle(n)) == trivial_quandle(n).rows

    def test_listed_tables_are_canonical(self):
        for n in range(1, 5):
            for q in quandles_of_order(n):
                assert canonical_form(q) == q.rows

    def test_bound(self, e_quandle):
        settings.canonical_bound = 2
        with pytest.raises(BoundExceeded):
            canonical_form(e_quandle)

    @given(quandles, st.data())
    def test_invariant_under_relabelling(self, q, data):
        sigma = data.draw(st.permutations(list(q.elements)))
        assert canonical_form(relabel(q, sigma)) == canonical_form(q)


class TestIsomorphism:
    def test_e_and_its_canonical_form(self, e_quandle):
        sigma = are_isomorphic(e_quandle, quandles_of_order(3)[1])
        assert sigma is not None
        assert relabel(e_quandle, sigma) == quandles_of_order(3)[1]

    def test_different_orders(self, e_quandle):
        assert are_isomorphic(e_quandle, trivial_quandle(2)) is None

    def test_non_isomorphic(self, e_quandle, r3):
        assert are_isomorphic(e_quandle, r3) is None
        assert invariants(e_quandle) != invariants(r3)

    def test_distinct_classes(self):
        listed = quandles_of_order(4)
        for i, q1 in enumerate(listed):
            for q2 in listed[i + 1 :]:
                assert are_isomorphic(q1, q2) is None

    @given(quandles, st.data())
    def test_finds_relabelling(self, q, data):
        sigma = data.draw(st.permutations(list(q.elements)))
        moved = relabel(q, sigma)
        found = are_isomorphic(q, moved)
        assert found is not None
        assert relabel(q, found) == moved
        assert invariants(moved) == invariants(q)

    def test_dihedral_five_is_listed(self):
        q = dihedral_quandle(5)
        assert any(are_isomorphic(q, other) for other in quandles_of_order(5))
