import json

import pytest

from quandle_closure.core.classify import (
    classify,
    connected_subquandles,
    in_disconnectedness_Z,
    is_constant,
    is_quasi_trivial,
    is_trivial,
)
from quandle_closure.core.connectivity import is_connected
from quandle_closure.core.quandle import enumerate_homs, trivial_quandle
from tests.helpers import quandles_of_order, quandles_up_to


def test_e_flags(e_quandle):
    assert not is_trivial(e_quandle)
    assert is_quasi_trivial(e_quandle)
    assert in_disconnectedness_Z(e_quandle)
    assert connected_subquandles(e_quandle) == []


def test_r3_flags(r3):
    assert not is_trivial(r3)
    assert not is_quasi_trivial(r3)
    assert not in_disconnectedness_Z(r3)
    assert [s.members for s in connected_subquandles(r3)] == [(0, 1, 2)]


def test_trivial_flags(t3):
    assert is_trivial(t3)
    assert is_quasi_trivial(t3)
    assert in_disconnectedness_Z(t3)


def test_empty_quandle():
    q = trivial_quandle(0)
    assert is_trivial(q) and is_quasi_trivial(q) and in_disconnectedness_Z(q)


def test_every_two_element_quandle_is_trivial():
    assert all(is_trivial(q) for q in quandles_of_order(2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hierarchy(n):
    for q in quandles_of_order(n):
        if is_trivial(q):
            assert is_quasi_trivial(q)
        if is_quasi_trivial(q):
            assert in_disconnectedness_Z(q)
        if is_connected(q) and in_disconnectedness_Z(q):
            assert q.order <= 1


@pytest.mark.slow
def test_hierarchy_order_five():
    for q in quandles_of_order(5):
        assert not is_trivial(q) or is_quasi_trivial(q)
        assert not is_quasi_trivial(q) or in_disconnectedness_Z(q)


def test_homs_from_connected_into_z_are_constant():
    small = quandles_up_to(4)
    connected = [q for q in small if is_connected(q)]
    members = [q for q in small if in_disconnectedness_Z(q)]
    assert connected and members
    for source in connected:
        for target in members:
            for f in enumerate_homs(source, target):
                assert is_constant(f)


def test_constancy_convention(e_quandle):
    empty = trivial_quandle(0)
    (f,) = enumerate_homs(empty, e_quandle)
    assert is_constant(f)


class TestReport:
    def test_e(self, e_quandle):
        report = classify(e_quandle)
        assert report.order == 3
        assert report.trivial is False
        assert report.quasi_trivial is True
        assert report.connected is False
        assert report.c_connected is False
        assert report.c_separated is False
        assert report.in_z is True
        assert report.orbits == 2

    def test_lines(self, r3):
        lines = classify(r3).lines()
        assert lines[0] == "order:         3"
        assert "connected:     true" in lines
        assert lines[-1] == (
            "order=3 trivial=false quasi_trivial=false connected=true "
            "c_connected=true c_separated=false in_Z=false orbits=1"
        )

    def test_json_uses_alias(self, t2):
        data = json.loads(classify(t2).model_dump_json(by_alias=True))
        assert data["in_Z"] is True
        assert data["orbits"] == 2
