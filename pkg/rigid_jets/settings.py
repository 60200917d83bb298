import logging
import os
from typing import Union

from rigid_jets.exceptions import SettingsError
from rigid_jets.settings_type import RigidJetsSettings

VERBOSITY_ENV = "RIGID_JETS_VERBOSITY"

rigid_jets_settings: RigidJetsSettings = RigidJetsSettings()


def parse_log_level(value: str) -> Union[str, int]:
    text = value.strip().upper()
    if text.isdigit():
        return int(text)
    if not isinstance(logging.getLevelName(text), int):
        raise SettingsError(
            f"{VERBOSITY_ENV} must be a logging level name or number, but got {value!r}"
        )
    return text


def validate_settings(settings: RigidJetsSettings) -> RigidJetsSettings:
    """
    Applies RIGID_JETS_VERBOSITY to `settings` and checks the numeric limits.

    Runs on the active instance when the command line starts, so a settings object
    swapped in after import is checked too.

    Raises:
        SettingsError: On an unknown log level or an out-of-range limit
    """
    if verbosity := os.environ.get(VERBOSITY_ENV):
        settings.LOG_LEVEL = parse_log_level(verbosity)

    # Validations
    if settings.JOBS < 1:
        raise SettingsError(f"JOBS must be at least 1, but got {settings.JOBS}")
    if settings.ORACLE_GRID < 2:
        raise SettingsError(f"ORACLE_GRID must be at least 2, but got {settings.ORACLE_GRID}")
    return settings
