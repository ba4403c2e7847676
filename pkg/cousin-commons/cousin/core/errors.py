"""Exception hierarchy for the Cousin toolkit.

Every error carries the module and operation it was raised from so the CLI
can emit a structured report instead of free text.
"""

from __future__ import annotations

from typing import Any, ClassVar


class CousinError(Exception):
    """Base exception for all toolkit errors."""

    exit_code: ClassVar[int] = 1

    def __init__(
        self,
        message: str,
        *,
        module: str | None = None,
        operation: str | None = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.module = module
        self.operation = operation

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": type(self).__name__,
            "module": self.module,
            "operation": self.operation,
            "message": self.message,
        }


class ConfigError(CousinError):
    """Unparseable input, bad flags or an invalid job document."""

    exit_code = 2


class PresetError(ConfigError):
    """Unknown preset name or malformed preset arguments."""


class RootDatumError(ConfigError):
    """Root datum violating the Cartan or Galois-action axioms."""


class PreconditionError(CousinError):
    """Inputs are well formed but violate an operation's precondition."""

    exit_code = 3


class DimensionMismatchError(PreconditionError):
    pass


class NotDominantError(PreconditionError):
    pass


class NotKostantRepresentativeError(PreconditionError):
    pass


class IncompatibleCharactersError(PreconditionError):
    """Characters whose anchors differ by a non-integral root combination."""


class ZeroPolynomialError(PreconditionError):
    pass


class ResourceBoundError(CousinError):
    """An enumeration, character or valuation bound was exceeded."""

    exit_code = 4


__all__ = [
    "ConfigError",
    "CousinError",
    "DimensionMismatchError",
    "IncompatibleCharactersError",
    "NotDominantError",
    "NotKostantRepresentativeError",
    "PreconditionError",
    "PresetError",
    "ResourceBoundError",
    "RootDatumError",
    "ZeroPolynomialError",
]
