"""Main pytest plugin exposing Cousin root data and property suites."""

from __future__ import annotations

import logging
from collections.abc import Callable
from contextlib import ExitStack

import pytest
from cousin._internal.checks import CheckResult, run_suite
from cousin._internal.config import CousinConfig, exported_environ, library_environment
from cousin._internal.hooks import get_plugin_manager, hookimpl
from cousin._internal.hooks.manager import reset_plugin_manager
from cousin.core.presets import get_preset
from cousin.core.root_datum import RootDatum

from .config import (
    register_options,
    resolve_options,
    setup_pytest_ini_options,
)

logger = logging.getLogger("CousinPytestPlugin")


class CousinPytestPlugin:
    """Collects property-suite results and reports them at the end of the session."""

    def __init__(self, config: CousinConfig):
        self.config = config
        self.results: list[CheckResult] = []

    def attach(self) -> None:
        """Register with the Cousin plugin manager, which tests may have reset."""
        pm = get_plugin_manager()
        if not pm.is_registered(self):
            pm.register(self, "pytest_cousin")

    def allows(self, suite: str) -> bool:
        return self.config.suites is None or suite in self.config.suites

    @hookimpl
    def cousin_check_finished(self, result: CheckResult) -> None:
        self.results.append(result)
        logger.debug(
            "Suite %s on %s: %d cases, %d failed", result.suite, result.preset, result.cases, result.failed
        )

    def summary_lines(self) -> list[str]:
        lines = [
            f"{r.suite} [{r.preset}]: {r.cases} cases, " + ("ok" if r.passed else f"{r.failed} FAILED")
            for r in self.results
        ]
        failed = sum(1 for r in self.results if not r.passed)
        lines.append(f"{len(self.results)} suite runs, {failed} failed")
        return lines

    @pytest.hookimpl(trylast=True)
    def pytest_terminal_summary(self, terminalreporter: pytest.TerminalReporter) -> None:
        if not self.results:
            return
        terminalreporter.write_sep("-", "Cousin property checks")
        for line in self.summary_lines():
            terminalreporter.write_line(line)


def _plugin(request: pytest.FixtureRequest) -> CousinPytestPlugin:
    return request.config._cousin  # type: ignore[attr-defined,no-any-return]


@pytest.fixture(scope="session")
def cousin_config(request: pytest.FixtureRequest) -> CousinConfig:
    """The resolved configuration for this session."""
    return _plugin(request).config


@pytest.fixture
def root_datum() -> Callable[[str], RootDatum]:
    """Factory resolving preset names through the plugin manager."""
    return get_preset


@pytest.fixture
def run_check(request: pytest.FixtureRequest) -> Callable[..., CheckResult]:
    """Run a registered suite on a preset with the session's radius and seed.

    Suites outside ``--cousin-suites`` are skipped.
    """
    plugin = _plugin(request)

    def runner(suite: str, preset: str, *, radius: int | None = None, seed: int | None = None) -> CheckResult:
        if not plugin.allows(suite):
            pytest.skip(f"suite {suite} not selected")
        plugin.attach()
        return run_suite(
            suite,
            preset,
            radius=plugin.config.grid_radius if radius is None else radius,
            seed=plugin.config.seed if seed is None else seed,
        )

    return runner


def pytest_addoption(parser: pytest.Parser) -> None:
    """Add command line options."""
    register_options(parser)
    setup_pytest_ini_options(parser)


def pytest_configure(config: pytest.Config) -> None:
    cousin_config = resolve_options(config)

    environment = ExitStack()
    environment.enter_context(
        exported_environ(library_environment(max_enum=cousin_config.max_enum, debug=cousin_config.debug))
    )
    config._cousin_environment = environment  # type: ignore[attr-defined]

    plugin = CousinPytestPlugin(cousin_config)
    config._cousin = plugin  # type: ignore[attr-defined]
    config.pluginmanager.register(plugin, "cousin_plugin")
    plugin.attach()


def pytest_unconfigure(config: pytest.Config) -> None:
    environment = getattr(config, "_cousin_environment", None)
    if environment is not None:
        environment.close()
    plugin = getattr(config, "_cousin", None)
    if plugin is not None:
        del config._cousin  # type: ignore[attr-defined]
        config.pluginmanager.unregister(plugin, "cousin_plugin")
        reset_plugin_manager()
