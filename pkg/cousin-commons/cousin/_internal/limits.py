"""Enumeration bounds guarding root closures, group orders and characters."""

from __future__ import annotations

import logging
import os

from ..core.errors import ConfigError, ResourceBoundError
from .constants import EnvVar

MAX_ROOTS = 10_000
MAX_GROUP_ORDER = 1_000_000
MAX_CHARACTER_TERMS = 2_000_000
MAX_VALUATION_BITS = 4096

logger = logging.getLogger("Cousin")


def resolve_limit(default: int, *, context: str) -> int:
    """Return *default* unless ``COUSIN_MAX_ENUM`` overrides it."""

    raw = os.getenv(EnvVar.MAX_ENUM.value)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(
            f"{EnvVar.MAX_ENUM.value} must be an integer, got {raw!r}",
            module="limits",
            operation="resolve_limit",
        ) from exc
    if value <= 0:
        raise ConfigError(
            f"{EnvVar.MAX_ENUM.value} must be positive", module="limits", operation="resolve_limit"
        )
    if value != default:
        logger.debug("Overriding %s bound from %d to %d", context, default, value)
    return value


def check_bound(
    count: int,
    default: int,
    *,
    context: str,
    module: str,
    operation: str,
) -> None:
    """Raise ``ResourceBoundError`` when *count* exceeds the resolved bound."""

    limit = resolve_limit(default, context=context)
    if count > limit:
        raise ResourceBoundError(
            f"{context} exceeds bound {limit} (reached {count})",
            module=module,
            operation=operation,
        )


__all__ = [
    "MAX_CHARACTER_TERMS",
    "MAX_GROUP_ORDER",
    "MAX_ROOTS",
    "MAX_VALUATION_BITS",
    "check_bound",
    "resolve_limit",
]
