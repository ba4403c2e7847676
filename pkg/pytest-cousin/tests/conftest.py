"""Test fixtures for the pytest-cousin test suite."""

from __future__ import annotations

import pytest

_COUSIN_ENV = ("COUSIN_GRID_RADIUS", "COUSIN_SEED", "COUSIN_MAX_ENUM", "COUSIN_SUITES", "COUSINDEBUG")


@pytest.fixture(autouse=True)
def _reset_plugin_manager() -> None:
    """Reset plugin manager between tests to avoid registration conflicts."""
    from cousin._internal.hooks.manager import reset_plugin_manager

    reset_plugin_manager()
    yield
    reset_plugin_manager()


@pytest.fixture(autouse=True)
def _clean_cousin_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Option resolution reads the environment; start every test without Cousin variables."""
    for name in _COUSIN_ENV:
        monkeypatch.delenv(name, raising=False)
