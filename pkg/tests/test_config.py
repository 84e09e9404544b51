"""
Tests for environment settings and shared utilities.
"""
from flagstab.config import DEFAULT_WEYL_CAP, Settings, load_settings
from flagstab.utils import load_json_file, parallel_map, save_json_file


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("FLAGSTAB_THREADS", "3")
    monkeypatch.setenv("FLAGSTAB_WEYL_CAP", "1000")
    monkeypatch.setenv("FLAGSTAB_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings.threads == 3
    assert settings.weyl_cap == 1000
    assert settings.log_level == "DEBUG"


def test_bad_values_fall_back_to_defaults(monkeypatch):
    monkeypatch.setenv("FLAGSTAB_THREADS", "many")
    monkeypatch.setenv("FLAGSTAB_WEYL_CAP", "")
    settings = load_settings()
    assert settings.threads == 1
    assert settings.weyl_cap == DEFAULT_WEYL_CAP


def test_overrides():
    base = Settings(threads=2)
    assert base.with_overrides(threads=0).threads == 1
    assert base.with_overrides(allow_large=True).allow_large
    assert base.with_overrides() == base


def test_parallel_map_keeps_order():
    items = list(range(50))
    assert parallel_map(lambda x: x * x, items, threads=4) == [x * x for x in items]
    assert parallel_map(lambda x: -x, items, threads=1, progress=False) == [-x for x in items]


def test_json_files(tmp_path):
    path = str(tmp_path / "nested" / "doc.json")
    assert save_json_file(path, {"rank": 2, "coords": ["1/2"]})
    assert load_json_file(path) == {"rank": 2, "coords": ["1/2"]}
