import logging

from quandle_closure import config
from quandle_closure.config import Settings, configure_logging, load_user_config, settings


def test_defaults():
    fresh = Settings()
    assert fresh.enumeration_bound == 6
    assert fresh.verify_max_order == 4
    assert fresh.verify_product_order == 25


def test_environment_prefix(monkeypatch):
    monkeypatch.setenv("QUANDLE_EXHAUSTIVE_BOUND", "9")
    monkeypatch.setenv("UNRELATED_SETTING", "ignored")
    assert Settings().exhaustive_bound == 9


def test_yaml_overrides(tmp_path):
    path = tmp_path / "quandle-closure.yaml"
    path.write_text("bounds:\n  enumeration: 5\nverify:\n  max_order: 3\n  hom_order: 2\n")
    load_user_config(str(path))
    assert settings.enumeration_bound == 5
    assert settings.verify_max_order == 3
    assert settings.verify_hom_order == 2
    assert config.user_config["verify"]["max_order"] == 3


def test_yaml_invalid_entries_are_skipped(tmp_path, caplog):
    path = tmp_path / "bad.yaml"
    path.write_text("bounds:\n  carrier: -1\n  unknown: 3\n  canonical: yes\nverify: 7\n")
    with caplog.at_level(logging.ERROR, logger="quandle_closure.config"):
        load_user_config(str(path))
    assert settings.max_carrier_order == 1024
    assert settings.canonical_bound == 8
    assert "Unknown key 'bounds.unknown'" in caplog.text
    assert "Invalid 'verify' section" in caplog.text


def test_yaml_not_a_mapping(tmp_path, caplog):
    path = tmp_path / "list.yaml"
    path.write_text("- 1\n- 2\n")
    with caplog.at_level(logging.ERROR, logger="quandle_closure.config"):
        load_user_config(str(path))
    assert "not a mapping" in caplog.text


def test_configure_logging_file_handler(tmp_path):
    settings.log_file = str(tmp_path / "run.log")
    settings.log_level = "DEBUG"
    configure_logging()
    root = logging.getLogger()
    try:
        assert root.level == logging.DEBUG
        assert any(isinstance(h, logging.FileHandler) for h in root.handlers)
        logging.getLogger("quandle_closure.test").debug("written")
    finally:
        for handler in root.handlers:
            handler.close()
        logging.basicConfig(force=True)
    assert "written" in (tmp_path / "run.log").read_text()
