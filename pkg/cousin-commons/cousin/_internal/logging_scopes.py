"""Scoped logging helpers for the ``Cousin`` library logger.

This module provides a context manager that controls visibility of the
library's DEBUG records (enumeration sizes, bound overrides, cache misses)
without touching the user's global logging configuration.

- Outside the context, nothing is installed or modified; logging behaves as-is.
- Inside the context:
  * When COUSINDEBUG is truthy ("true", "1", "yes", "on"), DEBUG records from
    the ``Cousin`` logger are allowed and the logger level is temporarily set
    to DEBUG.
  * When COUSINDEBUG is not enabled, DEBUG records from ``Cousin`` are
    suppressed within the scope.

Usage:
    from cousin._internal.logging_scopes import debug_logging_scope

    with debug_logging_scope():
        ...
"""

from __future__ import annotations

import logging
import os
from collections.abc import Generator
from contextlib import contextmanager, suppress
from contextvars import ContextVar

from .constants import EnvVar

LIBRARY_LOGGER = "Cousin"

_DEBUG_SCOPE_ACTIVE: ContextVar[bool] = ContextVar("cousin_debug_scope_active", default=False)


def _is_truthy(value: str | None) -> bool:
    """Parse common truthy strings to bool.

    Accepts: "true", "1", "yes", "on" (case-insensitive).
    """
    if value is None:
        return False
    return value.strip().lower() in {"true", "1", "yes", "on"}


def is_debug_enabled() -> bool:
    """Return True if COUSINDEBUG enables debug output."""
    return _is_truthy(os.getenv(EnvVar.DEBUG.value))


class _DebugVisibilityFilter(logging.Filter):
    """Gate DEBUG records of the library logger by scope and COUSINDEBUG.

    Records at INFO and above always pass.
    """

    def filter(self, record: logging.LogRecord) -> bool:  # noqa: D401
        if record.name.startswith(LIBRARY_LOGGER) and record.levelno == logging.DEBUG:
            return is_debug_enabled() and _DEBUG_SCOPE_ACTIVE.get()
        return True


@contextmanager
def debug_logging_scope() -> Generator[None, None, None]:
    """Allow ``Cousin`` DEBUG records within this scope when COUSINDEBUG is set."""
    visibility_filter = _DebugVisibilityFilter()
    library_logger = logging.getLogger(LIBRARY_LOGGER)
    previous_level = library_logger.level

    token = _DEBUG_SCOPE_ACTIVE.set(True)
    library_logger.addFilter(visibility_filter)
    if is_debug_enabled():
        library_logger.setLevel(logging.DEBUG)
    try:
        yield
    finally:
        _DEBUG_SCOPE_ACTIVE.reset(token)
        with suppress(Exception):
            library_logger.removeFilter(visibility_filter)
        library_logger.setLevel(previous_level)


__all__ = ["LIBRARY_LOGGER", "debug_logging_scope", "is_debug_enabled"]
