import pytest

from quandle_closure.core.connectivity import (
    is_connected,
    orbit_of,
    orbits,
    pi0,
    pi0_product_witness,
)
from quandle_closure.core.quandle import enumerate_homs, trivial_quandle
from quandle_closure.core.unionfind import DisjointSet
from tests.helpers import quandles_of_order, quandles_up_to


def test_disjoint_set_labels_by_smallest_member():
    ds = DisjointSet(5)
    assert ds.union(3, 1)
    assert ds.union(4, 3)
    assert not ds.union(1, 4)
    assert ds.labels() == ((0, 1, 2, 1, 1), 3)


def test_orbits_of_e(e_quandle):
    partition = orbits(e_quandle)
    assert [c.members for c in partition.classes] == [(0, 1), (2,)]
    assert partition.class_of == (0, 0, 1)
    assert partition.same_orbit(0, 1)
    assert not partition.same_orbit(1, 2)


def test_orbits_of_trivial_and_dihedral(t3, r3):
    assert [c.members for c in orbits(t3).classes] == [(0,), (1,), (2,)]
    assert [c.members for c in orbits(r3).classes] == [(0, 1, 2)]


def test_orbit_of(e_quandle):
    assert orbit_of(e_quandle, 1).members == (0, 1)
    assert orbit_of(e_quandle, 2).members == (2,)


def test_connected(e_quandle, r3):
    assert is_connected(r3)
    assert not is_connected(e_quandle)
    assert is_connected(trivial_quandle(1))
    assert not is_connected(trivial_quandle(0))


def test_pi0_of_e(e_quandle):
    components, eta = pi0(e_quandle)
    assert components == trivial_quandle(2)
    assert eta.map == (0, 0, 1)


def test_pi0_of_connected(r3):
    components, eta = pi0(r3)
    assert components.order == 1
    assert eta.map == (0, 0, 0)


def test_pi0_of_empty():
    components, eta = pi0(trivial_quandle(0))
    assert components.order == 0
    assert eta.map == ()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_unit_identifies_exactly_the_orbits(n):
    for q in quandles_of_order(n):
        partition = orbits(q)
        _, eta = pi0(q)
        assert eta.is_surjective
        for x in q.elements:
            for y in q.elements:
                assert (eta(x) == eta(y)) == partition.same_orbit(x, y)


def test_product_witness_e_squared(e_quandle):
    gamma = pi0_product_witness(e_quandle, e_quandle)
    assert gamma.is_injective and gamma.is_surjective
    assert gamma.source.order == 4


def test_product_witness_mixed(e_quandle, r3):
    gamma = pi0_product_witness(e_quandle, r3)
    assert gamma.map == (0, 1)


@pytest.mark.parametrize("n1, n2", [(1, 4), (2, 3), (3, 3), (3, 4), (4, 4)])
def test_product_witness_is_bijective(n1, n2):
    for q1 in quandles_of_order(n1):
        for q2 in quandles_of_order(n2):
            gamma = pi0_product_witness(q1, q2)
            assert gamma.is_injective and gamma.is_surjective


def test_homomorphisms_map_orbits_into_orbits():
    small = quandles_up_to(3)
    for source in small:
        for target in small:
            src, dst = orbits(source), orbits(target)
            for f in enumerate_homs(source, target):
                for x in source.elements:
                    for y in source.elements:
                        if src.same_orbit(x, y):
                            assert dst.same_orbit(f(x), f(y))
