"""Internal constants: environment variables and process exit codes."""

from __future__ import annotations

from enum import Enum


class EnvVar(str, Enum):
    DEBUG = "COUSINDEBUG"
    MAX_ENUM = "COUSIN_MAX_ENUM"
    GRID_RADIUS = "COUSIN_GRID_RADIUS"
    SEED = "COUSIN_SEED"
    SUITES = "COUSIN_SUITES"


class ExitCode(int, Enum):
    OK = 0
    CHECK_FAILED = 1
    CONFIG_ERROR = 2
    PRECONDITION_ERROR = 3
    RESOURCE_BOUND = 4


__all__ = [
    "EnvVar",
    "ExitCode",
]
