import pytest
from pydantic import ValidationError

from config import Settings, get_settings


def test_defaults(monkeypatch):
    for name in ("DDT_EXACT_GUARD_N", "DDT_ENUMERATION_GUARD_N", "DDT_THREADS", "DDT_LOG_FORMAT"):
        monkeypatch.delenv(name, raising=False)
    settings = Settings(_env_file=None)
    assert settings.exact_guard_n == 64
    assert settings.enumeration_guard_n == 24
    assert settings.threads == 1
    assert settings.log_format == "console"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("DDT_EXACT_GUARD_N", "10")
    monkeypatch.setenv("DDT_LOG_FORMAT", "json")
    settings = Settings(_env_file=None)
    assert settings.exact_guard_n == 10
    assert settings.log_format == "json"


def test_invalid_values_are_rejected(monkeypatch):
    monkeypatch.setenv("DDT_THREADS", "0")
    with pytest.raises(ValidationError):
        Settings(_env_file=None)


def test_settings_are_cached():
    assert get_settings() is get_settings()
