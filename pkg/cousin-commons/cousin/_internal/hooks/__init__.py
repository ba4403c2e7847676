"""Hook system for the Cousin plugin architecture (internal)."""

from __future__ import annotations

from .manager import CousinPluginManager, get_plugin_manager, reset_plugin_manager
from .specs import CousinHookSpecs, hookimpl, hookspec

__all__ = [
    "hookspec",
    "hookimpl",
    "CousinHookSpecs",
    "get_plugin_manager",
    "CousinPluginManager",
    "reset_plugin_manager",
]
