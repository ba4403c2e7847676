"""Command line, environment and ini options of the pytest-cousin plugin."""

from __future__ import annotations

import os
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import pytest
from cousin._internal.config import CousinConfig
from cousin._internal.constants import EnvVar


def register_options(parser: pytest.Parser) -> None:
    """Register pytest command line options for Cousin."""
    group = parser.getgroup("cousin", "Cousin property checks")

    group.addoption(
        "--cousin-grid-radius",
        action="store",
        type=int,
        default=None,
        help="Coordinate radius of the weight grids swept by property suites",
    )
    group.addoption(
        "--cousin-seed",
        action="store",
        type=int,
        default=None,
        help="Seed for randomized suites",
    )
    group.addoption(
        "--cousin-max-enum",
        action="store",
        type=int,
        default=None,
        help="Override every enumeration bound (exported as COUSIN_MAX_ENUM)",
    )
    group.addoption(
        "--cousin-suites",
        action="append",
        default=None,
        metavar="NAME[,NAME]",
        help="Property suites run_check may execute (repeatable). Others are skipped.",
    )
    group.addoption(
        "--cousin-debug",
        action="store_true",
        help="Enable Cousin debug logging",
    )


def _split_names(values: str | list[str] | None) -> list[str] | None:
    if not values:
        return None
    items = [values] if isinstance(values, str) else values
    names = [name.strip() for item in items for name in item.split(",") if name.strip()]
    return names or None


def _to_bool(raw: str | bool) -> bool:
    if isinstance(raw, bool):
        return raw
    return raw.strip().lower() in {"1", "true", "yes", "on"}


@dataclass(frozen=True)
class _Option:
    """One setting readable from the command line, the environment and the ini file."""

    dest: str
    env: EnvVar
    convert: Callable[[Any], Any] | None = None
    default: Any = None

    def _coerce(self, raw: Any) -> Any:
        if self.convert is None:
            return raw
        try:
            return self.convert(raw)
        except (TypeError, ValueError):
            return self.default

    def resolve(self, config: pytest.Config) -> Any:
        cli = config.getoption(self.dest, default=None)
        # store_true flags report False when absent, which must not shadow ENV or ini.
        if cli is not None and (self.convert is not _to_bool or cli is True):
            return cli
        for raw in (os.getenv(self.env.value), config.getini(self.dest)):
            if raw:
                return self._coerce(raw)
        return self.default


_OPTIONS = (
    _Option("cousin_grid_radius", EnvVar.GRID_RADIUS, int, CousinConfig.grid_radius),
    _Option("cousin_seed", EnvVar.SEED, int, CousinConfig.seed),
    _Option("cousin_max_enum", EnvVar.MAX_ENUM, int, CousinConfig.max_enum),
    _Option("cousin_suites", EnvVar.SUITES),
    _Option("cousin_debug", EnvVar.DEBUG, _to_bool, CousinConfig.debug),
)


def resolve_options(config: pytest.Config) -> CousinConfig:
    """Build the session's CousinConfig; the command line beats ENV, which beats the ini file."""
    values = {option.dest.removeprefix("cousin_"): option.resolve(config) for option in _OPTIONS}
    values["suites"] = _split_names(values["suites"])
    return CousinConfig(**values)


def setup_pytest_ini_options(parser: pytest.Parser) -> None:
    parser.addini("cousin_grid_radius", "Grid radius for property suites")
    parser.addini("cousin_seed", "Seed for randomized suites")
    parser.addini("cousin_max_enum", "Override for every enumeration bound")
    parser.addini("cousin_suites", "Comma separated property suites run_check may execute")
    parser.addini("cousin_debug", "Enable Cousin debug logging", type="bool")
