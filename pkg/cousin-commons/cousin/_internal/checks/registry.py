"""Registry and runner for property suites."""

from __future__ import annotations

import logging
import random
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import Any

from ...core.errors import ConfigError
from ...core.presets import get_preset
from ...core.root_datum import RootDatum

logger = logging.getLogger("Cousin")

MAX_REPORTED_FAILURES = 20


@dataclass
class CheckContext:
    """Per-run state handed to a suite: grid settings and a case tally."""

    preset: str
    radius: int
    seed: int
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    failed: int = 0

    def expect(self, condition: bool, description: str | Callable[[], str]) -> None:
        self.cases += 1
        if condition:
            return
        self.failed += 1
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(description() if callable(description) else description)

    def rng(self) -> random.Random:
        return random.Random(self.seed)


SuiteFunction = Callable[[RootDatum, CheckContext], None]


@dataclass(frozen=True)
class PropertySuite:
    name: str
    description: str
    presets: tuple[str, ...]
    run: SuiteFunction


@dataclass(frozen=True)
class CheckResult:
    suite: str
    preset: str
    passed: bool
    cases: int
    failed: int
    failures: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "preset": self.preset,
            "passed": self.passed,
            "cases": self.cases,
            "failed": self.failed,
            "failures": list(self.failures),
        }


class CheckRegistry:
    def __init__(self) -> None:
        self._suites: dict[str, PropertySuite] = {}

    def register(self, suite: PropertySuite) -> None:
        if suite.name in self._suites:
            raise ConfigError(
                f"suite {suite.name!r} is already registered", module="checks", operation="register"
            )
        self._suites[suite.name] = suite

    def get(self, name: str) -> PropertySuite:
        try:
            return self._suites[name]
        except KeyError:
            raise ConfigError(
                f"unknown suite {name!r}; known suites: {', '.join(self.names())}",
                module="checks",
                operation="get",
            ) from None

    def names(self) -> list[str]:
        return list(self._suites)

    def suites(self) -> list[PropertySuite]:
        return list(self._suites.values())


def check_registry() -> CheckRegistry:
    """Collect property suites from every registered plugin."""
    from ..hooks.manager import get_plugin_manager

    registry = CheckRegistry()
    get_plugin_manager().hook.cousin_register_checks(registry=registry)
    return registry


def run_suite(
    suite: PropertySuite | str,
    preset: str,
    *,
    radius: int = 2,
    seed: int = 0,
    registry: CheckRegistry | None = None,
) -> CheckResult:
    """Run one suite against one preset and announce the result to plugins."""
    from ..hooks.manager import get_plugin_manager

    if isinstance(suite, str):
        suite = (registry or check_registry()).get(suite)
    context = CheckContext(preset=preset, radius=radius, seed=seed)
    logger.debug("Running suite %s on %s (radius %d)", suite.name, preset, radius)
    suite.run(get_preset(preset), context)
    result = CheckResult(
        suite=suite.name,
        preset=preset,
        passed=context.failed == 0,
        cases=context.cases,
        failed=context.failed,
        failures=tuple(context.failures),
    )
    get_plugin_manager().hook.cousin_check_finished(result=result)
    return result


def run_suites(
    names: Iterable[str] | None = None,
    presets: Iterable[str] | None = None,
    *,
    radius: int = 2,
    seed: int = 0,
) -> list[CheckResult]:
    """Run the selected suites, each on its default presets unless *presets* is given."""
    registry = check_registry()
    selected = [registry.get(n) for n in names] if names else registry.suites()
    chosen = list(presets) if presets else None
    results: list[CheckResult] = []
    for suite in selected:
        for preset in chosen or suite.presets:
            results.append(run_suite(suite, preset, radius=radius, seed=seed))
    return results


__all__ = [
    "CheckContext",
    "CheckRegistry",
    "CheckResult",
    "PropertySuite",
    "check_registry",
    "run_suite",
    "run_suites",
]
