"""
Pytest configuration and fixtures for rigid-jets tests.

Scenario-level tests that run whole degenerations or the full suite are marked `slow`;
deselect them with `-m "not slow"`.
"""
import random

import pytest

from rigid_jets.jetcore.scalars import QQ_FIELD, RationalFunctionField
from rigid_jets.settings_type import RigidJetsSettings


@pytest.fixture
def jets_settings(monkeypatch):
    """Fresh settings patched in where `get_settings` reads them."""
    settings = RigidJetsSettings()
    monkeypatch.setattr("rigid_jets.settings.rigid_jets_settings", settings)
    return settings


@pytest.fixture
def qq():
    return QQ_FIELD


@pytest.fixture
def qq_y():
    return RationalFunctionField("y")


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def uv():
    return ("u", "v")
