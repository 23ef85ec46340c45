import pytest

from quandle_closure.core.classify import is_trivial
from quandle_closure.core.closure import (
    closure_sub,
    dense_closed_factorization,
    diagonal,
    is_c_connected,
    is_c_separated,
    is_closed,
    is_dense,
    pullback_closure,
    weakly_hereditary_at,
)
from quandle_closure.core.connectivity import is_connected, orbit_of
from quandle_closure.core.quandle import (
    SubSet,
    all_subquandles,
    enumerate_homs,
    generated_subquandle,
    image_subquandle,
    product,
    product_subset,
    trivial_quandle,
)
from quandle_closure.errors import NotSubquandle
from tests.helpers import quandles_of_order, quandles_up_to


def sub(q, *members):
    return SubSet.of(q.order, members)


class TestWorkedExample:
    def test_closure_of_a_point(self, e_quandle):
        assert closure_sub(e_quandle, sub(e_quandle, 0)).members == (0, 1)

    def test_flags(self, e_quandle):
        m = sub(e_quandle, 0)
        assert not is_dense(e_quandle, m)
        assert not is_closed(e_quandle, m)
        assert is_closed(e_quandle, sub(e_quandle, 0, 1))
        assert is_dense(e_quandle, sub(e_quandle, 0, 2, 1))

    def test_not_weakly_hereditary(self, e_quandle):
        m = sub(e_quandle, 0)
        factorization = dense_closed_factorization(e_quandle, m)
        assert factorization.outer.members == (0, 1)
        assert factorization.closure_quandle == trivial_quandle(2)
        assert factorization.inner.members == (0,)
        assert closure_sub(factorization.closure_quandle, factorization.inner).members == (0,)
        assert not weakly_hereditary_at(e_quandle, m)

    def test_weakly_hereditary_elsewhere(self, e_quandle, r3):
        assert weakly_hereditary_at(e_quandle, sub(e_quandle, 2))
        assert weakly_hereditary_at(r3, sub(r3, 1))

    def test_pullback_agrees(self, e_quandle):
        assert pullback_closure(e_quandle, sub(e_quandle, 0)).members == (0, 1)


def test_empty_subquandle(e_quandle):
    empty = SubSet.empty(3)
    assert closure_sub(e_quandle, empty) == empty
    assert is_closed(e_quandle, empty)
    assert not is_dense(e_quandle, empty)


def test_requires_a_subquandle(e_quandle):
    with pytest.raises(NotSubquandle):
        closure_sub(e_quandle, sub(e_quandle, 0, 2))


def test_dense_in_connected(r3):
    assert closure_sub(r3, sub(r3, 0)).is_full


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_closure_axioms(n):
    for q in quandles_of_order(n):
        subs = all_subquandles(q)
        for m in subs:
            c = closure_sub(q, m)
            assert m.issubset(c)
            assert closure_sub(q, c) == c
            assert pullback_closure(q, m) == c
            for x in m:
                assert orbit_of(q, x).issubset(c)
            for other in subs:
                if m.issubset(other):
                    assert c.issubset(closure_sub(q, other))


@pytest.mark.slow
def test_closure_axioms_order_five():
    for q in quandles_of_order(5):
        for m in all_subquandles(q):
            c = closure_sub(q, m)
            assert m.issubset(c) and closure_sub(q, c) == c
            assert pullback_closure(q, m) == c


def test_singleton_closure_is_orbit():
    for q in quandles_up_to(4):
        for x in q.elements:
            assert closure_sub(q, sub(q, x)) == orbit_of(q, x)


def test_additivity():
    for q in quandles_up_to(4):
        subs = all_subquandles(q)
        for m in subs:
            for n in subs:
                joined = generated_subquandle(q, m | n)
                expected = closure_sub(q, m) | closure_sub(q, n)
                assert closure_sub(q, joined) == expected


def test_continuity_and_surjective_images():
    small = quandles_up_to(3)
    for source in small:
        for target in small:
            for f in enumerate_homs(source, target):
                for m in all_subquandles(source):
                    pushed = image_subquandle(f, closure_sub(source, m))
                    bound = closure_sub(target, image_subquandle(f, m))
                    assert pushed.issubset(bound)
                    if f.is_surjective:
                        assert pushed == bound


def test_productivity(e_quandle, r3):
    p = product(e_quandle, r3)
    for m in all_subquandles(e_quandle):
        for n in all_subquandles(r3):
            cm, cn = closure_sub(e_quandle, m), closure_sub(r3, n)
            assert closure_sub(p, product_subset(m, n)) == product_subset(cm, cn)


def test_productivity_of_three_factors(e_quandle, t2, r3):
    p = product(product(e_quandle, t2), r3)
    assert p.order == 18
    for m in all_subquandles(e_quandle):
        for n in all_subquandles(t2):
            closed = product_subset(closure_sub(e_quandle, m), closure_sub(t2, n))
            for k in all_subquandles(r3):
                box = product_subset(product_subset(m, n), k)
                assert closure_sub(p, box) == product_subset(closed, closure_sub(r3, k))


def test_productivity_with_the_orbit_split(e_quandle):
    # {0} × {0} × {2} in E³ closes to {0, 1} × {0, 1} × {2}
    p = product(product(e_quandle, e_quandle), e_quandle)
    point = product_subset(product_subset(sub(e_quandle, 0), sub(e_quandle, 0)), sub(e_quandle, 2))
    closed = closure_sub(p, point)
    assert len(closed) == 4
    assert closed.members == (2, 5, 11, 14)



class TestDiagonal:
    def test_diagonal_members(self, e_quandle):
        square, diag = diagonal(e_quandle)
        assert square.order == 9
        assert diag.members == (0, 4, 8)

    def test_e(self, e_quandle):
        assert not is_c_connected(e_quandle)
        assert not is_c_separated(e_quandle)

    def test_r3(self, r3):
        assert is_c_connected(r3)
        assert not is_c_separated(r3)

    def test_trivial(self, t3):
        assert not is_c_connected(t3)
        assert is_c_separated(t3)

    def test_empty_quandle_is_c_connected(self):
        q = trivial_quandle(0)
        assert is_c_connected(q)
        assert not is_connected(q)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_characterisations(self, n):
        for q in quandles_of_order(n):
            assert is_c_connected(q) == is_connected(q)
            assert is_c_separated(q) == is_trivial(q)

    @pytest.mark.slow
    def test_characterisations_order_five(self):
        for q in quandles_of_order(5):
            assert is_c_connected(q) == is_connected(q)
            assert is_c_separated(q) == is_trivial(q)
