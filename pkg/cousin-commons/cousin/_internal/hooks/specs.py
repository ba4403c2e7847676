"""Hook specifications for the Cousin plugin system."""

from __future__ import annotations

from typing import TYPE_CHECKING

from pluggy import HookimplMarker, HookspecMarker

if TYPE_CHECKING:
    from ...core.presets import PresetRegistry
    from ..checks.registry import CheckRegistry, CheckResult

hookspec = HookspecMarker("cousin")
hookimpl = HookimplMarker("cousin")


class CousinHookSpecs:
    """Hook specifications for extending presets and property suites."""

    # ========== Registration Hooks ==========

    @hookspec
    def cousin_register_presets(self, registry: PresetRegistry) -> None:
        """Called whenever a preset registry is built.

        Args:
            registry: Registry to add ``(pattern, factory)`` entries to
        """

    @hookspec
    def cousin_register_checks(self, registry: CheckRegistry) -> None:
        """Called whenever the property-suite registry is built.

        Args:
            registry: Registry to add property suites to
        """

    # ========== Check Lifecycle Hooks ==========

    @hookspec
    def cousin_check_finished(self, result: CheckResult) -> None:
        """Called after a property suite has run against one preset.

        Args:
            result: Outcome with case and failure counts
        """
