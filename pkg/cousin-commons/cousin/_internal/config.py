"""Public configuration models for Cousin runs and integrations."""

from __future__ import annotations

import os
from collections.abc import Iterator, Mapping
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Literal

from ..core.errors import ConfigError
from .constants import EnvVar

OutputFormat = Literal["plain", "json", "md", "latex"]
OUTPUT_FORMATS: tuple[str, ...] = ("plain", "json", "md", "latex")


@dataclass
class CousinConfig:
    """Configuration shared by the CLI and the pytest plugin.

    This dataclass is framework-agnostic; integrations resolve it from their
    own option sources and hand it to the library.
    """

    # Property sweep settings
    grid_radius: int = 2
    seed: int = 0
    suites: list[str] | None = None

    # Enumeration bounds (None keeps the library defaults)
    max_enum: int | None = None

    # Output settings
    output_format: OutputFormat = "plain"

    debug: bool = False


@dataclass
class JobConfig:
    """A single CLI invocation, loadable from a JSON document.

    Either ``preset`` or ``datum`` (a custom root-datum document) names the
    group; ``params`` holds the command-specific arguments.
    """

    command: str
    action: str | None = None
    preset: str | None = None
    datum: dict[str, Any] | None = None
    levi: list[int] | None = None
    params: dict[str, Any] = field(default_factory=dict)
    output_format: OutputFormat = "plain"
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"unknown output format {self.output_format!r}",
                module="cli",
                operation="JobConfig",
            )
        if self.preset is not None and self.datum is not None:
            raise ConfigError(
                "give either a preset or a datum document, not both",
                module="cli",
                operation="JobConfig",
            )

    def to_dict(self) -> dict[str, Any]:
        return {key: value for key, value in asdict(self).items() if value not in (None, {})}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> JobConfig:
        if not isinstance(data, dict):
            raise ConfigError("job document must be a JSON object", module="cli", operation="JobConfig")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(
                f"unknown job keys: {', '.join(unknown)}", module="cli", operation="JobConfig"
            )
        if "command" not in data:
            raise ConfigError("job document needs a 'command'", module="cli", operation="JobConfig")
        return cls(**data)


def library_environment(*, max_enum: int | None, debug: bool) -> dict[str, str]:
    """Variables through which the library reads its bounds and debug switch."""
    values: dict[str, str] = {}
    if max_enum is not None:
        values[EnvVar.MAX_ENUM.value] = str(max_enum)
    if debug:
        values[EnvVar.DEBUG.value] = "1"
    return values


@contextmanager
def exported_environ(values: Mapping[str, str]) -> Iterator[None]:
    """Set *values* in ``os.environ`` and restore the previous state on exit."""
    saved = {name: os.environ.get(name) for name in values}
    os.environ.update(values)
    try:
        yield
    finally:
        for name, previous in saved.items():
            if previous is None:
                os.environ.pop(name, None)
            else:
                os.environ[name] = previous


__all__ = [
    "OUTPUT_FORMATS",
    "CousinConfig",
    "JobConfig",
    "OutputFormat",
    "exported_environ",
    "library_environment",
]
