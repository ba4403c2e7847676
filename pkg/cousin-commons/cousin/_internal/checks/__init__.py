"""Property suites: registry, grids and the builtin plugin."""

from .registry import (
    CheckContext,
    CheckRegistry,
    CheckResult,
    PropertySuite,
    check_registry,
    run_suite,
    run_suites,
)

__all__ = [
    "CheckContext",
    "CheckRegistry",
    "CheckResult",
    "PropertySuite",
    "check_registry",
    "run_suite",
    "run_suites",
]
