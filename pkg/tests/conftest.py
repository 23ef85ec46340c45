import pytest

from quandle_closure.config import settings
from quandle_closure.core.quandle import dihedral_quandle, trivial_quandle, validate_quandle
from tests.helpers import E_TABLE, E_TEXT, R3_TEXT


@pytest.fixture
def e_quandle():
    return validate_quandle(3, E_TABLE)


@pytest.fixture
def r3():
    return dihedral_quandle(3)


@pytest.fixture
def t2():
    return trivial_quandle(2)


@pytest.fixture
def t3():
    return trivial_quandle(3)


@pytest.fixture
def e_file(tmp_path):
    path = tmp_path / "E.qnd"
    path.write_text(E_TEXT)
    return path


@pytest.fixture
def r3_file(tmp_path):
    path = tmp_path / "R3.qnd"
    path.write_text(R3_TEXT)
    return path


@pytest.fixture(autouse=True)
def restore_settings():
    saved = settings.model_dump()
    yield
    for key, value in saved.items():
        setattr(settings, key, value)
