import pytest

from rigid_jets.exceptions import SettingsError
from rigid_jets.resolvers import default_suite_resolver, get_settings, signed_permutation_candidates
from rigid_jets.settings import VERBOSITY_ENV, parse_log_level, validate_settings
from rigid_jets.settings_type import RigidJetsSettings


def test_default_settings():
    settings = RigidJetsSettings()
    assert settings.LOG_LEVEL == "WARNING"
    assert settings.JOBS == 1
    assert settings.RECORD_RUNTIME is False
    assert settings.ORACLE_GRID > 8
    assert settings.SUITE_RESOLVER is default_suite_resolver
    assert settings.CANDIDATE_RESOLVER is signed_permutation_candidates


def test_get_settings_reads_the_patched_instance(jets_settings):
    assert get_settings() is jets_settings


@pytest.mark.parametrize("value,expected", [("debug", "DEBUG"), (" info ", "INFO"), ("10", 10)])
def test_parse_log_level(value, expected):
    assert parse_log_level(value) == expected


def test_parse_log_level_rejects_unknown_names():
    with pytest.raises(SettingsError):
        parse_log_level("loud")


def test_verbosity_from_environment(monkeypatch, jets_settings):
    monkeypatch.setenv(VERBOSITY_ENV, "info")
    assert validate_settings(jets_settings) is jets_settings
    assert jets_settings.LOG_LEVEL == "INFO"


def test_defaults_are_valid(monkeypatch, jets_settings):
    monkeypatch.delenv(VERBOSITY_ENV, raising=False)
    assert validate_settings(jets_settings).LOG_LEVEL == "WARNING"


@pytest.mark.parametrize("name,value,message", [
    ("JOBS", 0, "JOBS must be at least 1, but got 0"),
    ("ORACLE_GRID", 1, "ORACLE_GRID must be at least 2, but got 1"),
])
def test_replaced_settings_are_validated(monkeypatch, jets_settings, name, value, message):
    monkeypatch.delenv(VERBOSITY_ENV, raising=False)
    setattr(jets_settings, name, value)
    with pytest.raises(SettingsError) as excinfo:
        validate_settings(get_settings())
    assert excinfo.value.message == message
