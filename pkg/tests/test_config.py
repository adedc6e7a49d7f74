import pytest

from src.core.config_manager import CONFIG_FILENAME, DEFAULTS, ConfigManager, parse_budget
from src.core.errors import ConfigError


def write_config(monkeypatch, tmp_path, text):
    folder = tmp_path / "custom"
    folder.mkdir()
    (folder / CONFIG_FILENAME).write_text(text, encoding="utf-8")
    monkeypatch.setenv("ARRLAB_CONFIG_DIR", str(folder))
    ConfigManager.reset()


def test_defaults():
    cfg = ConfigManager()
    assert cfg.budget("A") == 8
    assert cfg.budget("B") == 5
    assert cfg.threads() == 1
    assert cfg.get("catalog.seed") == DEFAULTS["catalog"]["seed"]
    assert cfg.get("catalog.missing", 3) == 3


def test_singleton():
    assert ConfigManager() is ConfigManager()


@pytest.mark.parametrize("text,expected", [
    ("A=9,B=6", {"A": 9, "B": 6}),
    ("b=4", {"B": 4}),
    ("7", {"A": 7, "B": 7}),
])
def test_parse_budget(text, expected):
    assert parse_budget(text) == expected


@pytest.mark.parametrize("text", ["A", "C=3", "A=x", "-1"])
def test_parse_budget_rejects(text):
    with pytest.raises(ConfigError):
        parse_budget(text)


def test_environment_budget(monkeypatch):
    monkeypatch.setenv("ARRLAB_BUDGET", "A=10")
    ConfigManager.reset()
    cfg = ConfigManager()
    assert cfg.budget("A") == 10
    assert cfg.budget("B") == 5


def test_invalid_environment_budget_is_ignored(monkeypatch):
    monkeypatch.setenv("ARRLAB_BUDGET", "beaucoup")
    ConfigManager.reset()
    assert ConfigManager().budget("A") == 8


def test_yaml_file(monkeypatch, tmp_path):
    write_config(monkeypatch, tmp_path, "budget:\n  B: 6\nthreads: 3\ncatalog:\n  seed: 11\n")
    cfg = ConfigManager()
    assert cfg.budget("B") == 6
    assert cfg.budget("A") == 8
    assert cfg.threads() == 3
    assert cfg.catalog_settings()["seed"] == 11
    assert cfg.catalog_settings()["max_graph_n"] == 5


def test_environment_overrides_file(monkeypatch, tmp_path):
    write_config(monkeypatch, tmp_path, "budget:\n  A: 6\n")
    monkeypatch.setenv("ARRLAB_BUDGET", "A=9")
    ConfigManager.reset()
    assert ConfigManager().budget("A") == 9


@pytest.mark.parametrize("text", ["budget: [1\n", "- 1\n- 2\n"])
def test_malformed_file_falls_back_to_defaults(monkeypatch, tmp_path, text):
    write_config(monkeypatch, tmp_path, text)
    cfg = ConfigManager()
    assert cfg.settings == DEFAULTS
