"""Process-wide pluggy manager carrying presets, property suites and check listeners."""

from __future__ import annotations

import logging
import threading
from typing import Any

from pluggy import PluginManager

from .specs import CousinHookSpecs

logger = logging.getLogger("Cousin")

PROJECT_NAME = "cousin"
BUILTIN_PRESETS = "cousin_builtin_presets"
BUILTIN_CHECKS = "cousin_builtin_checks"

_plugin_manager: PluginManager | None = None
_manager_lock = threading.Lock()


def _build_manager() -> PluginManager:
    # Imported here: presets and checks both import this module.
    from ...core.presets import BuiltinPresets
    from ..checks.builtin import BuiltinChecks

    pm = PluginManager(PROJECT_NAME)
    pm.add_hookspecs(CousinHookSpecs)
    pm.register(BuiltinPresets(), BUILTIN_PRESETS)
    pm.register(BuiltinChecks(), BUILTIN_CHECKS)
    external = pm.load_setuptools_entrypoints(PROJECT_NAME)
    if external:
        logger.debug("Loaded %d cousin plugin(s) from entry points", external)
    return pm


def get_plugin_manager() -> PluginManager:
    """Return the shared manager, building it with the built-in plugins on first use."""
    global _plugin_manager

    manager = _plugin_manager
    if manager is not None:
        return manager
    with _manager_lock:
        if _plugin_manager is None:
            _plugin_manager = _build_manager()
        return _plugin_manager


def reset_plugin_manager() -> None:
    """Drop every registered plugin; the next lookup starts from the built-ins again."""
    global _plugin_manager

    with _manager_lock:
        stale, _plugin_manager = _plugin_manager, None
    if stale is None:
        return
    for plugin in list(stale.get_plugins()):
        stale.unregister(plugin)


class CousinPluginManager:
    """Named access to the shared manager for code that registers plugins by hand."""

    def __init__(self) -> None:
        self._pm = get_plugin_manager()

    @property
    def hook(self) -> Any:
        return self._pm.hook

    def register_plugin(self, plugin: object, name: str | None = None) -> None:
        self._pm.register(plugin, name)
        logger.debug("Registered cousin plugin %s", name or type(plugin).__name__)

    def unregister_plugin(self, plugin: object) -> None:
        self._pm.unregister(plugin)

    def has_plugin(self, name: str) -> bool:
        return self._pm.has_plugin(name)

    def plugin_names(self) -> list[str]:
        return sorted(name for name, _ in self._pm.list_name_plugin() if name)

    def call_hook(self, hook_name: str, **kwargs: Any) -> list[Any]:
        """Invoke ``hook_name`` on every plugin; unknown names raise ValueError."""
        caller = getattr(self._pm.hook, hook_name, None)
        if caller is None:
            raise ValueError(f"Unknown hook: {hook_name}")
        return caller(**kwargs)  # type: ignore[no-any-return]
