"""Shared fixtures for the cousin test suite."""

from __future__ import annotations

import pytest
from cousin._internal.hooks.manager import reset_plugin_manager
from cousin.core.presets import compact_levi, get_preset


@pytest.fixture(autouse=True)
def _fresh_plugin_manager():
    """Every test starts from a manager holding only the builtin plugins."""
    reset_plugin_manager()
    yield
    reset_plugin_manager()


@pytest.fixture
def a1():
    return get_preset("A1")


@pytest.fixture
def a2():
    return get_preset("A2")


@pytest.fixture
def gsp4():
    return get_preset("GSp4")


@pytest.fixture
def gl2():
    return get_preset("GL2")


@pytest.fixture
def gsp4_levi(gsp4):
    """The Siegel Levi: only the compact simple root."""
    return gsp4.levi(compact_levi(2))
