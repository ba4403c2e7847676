"""Data models for weights, slopes and the enumerations used across the toolkit."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, TypeVar

Rational = Fraction | int

_W = TypeVar("_W", bound="Weight")


class Sign(str, Enum):
    """Which finite slope part a condition or bound refers to."""

    PLUS = "+"
    MINUS = "-"


class Chamber(str, Enum):
    """Dominance chamber: the whole group or the Levi."""

    G = "G"
    M = "M"


class Order(str, Enum):
    """Partial order used when comparing weights."""

    ABSOLUTE = "absolute"
    SPLIT = "split"


class Kind(str, Enum):
    SS = "ss"
    SSS = "sss"


class Flavor(str, Enum):
    """Family of a slope condition."""

    NU = "nu"
    M = "M"
    MW = "Mw"
    W = "w"
    B = "b"


class BoundVariant(str, Enum):
    CONJECTURAL = "conjectural"
    PROVEN_PAIR = "proven_pair"


class MwForm(str, Enum):
    """Shape of the strongly small ``sss_{M,w}`` bounds.

    ``dot`` takes the dot image as the first ``-`` bound and shifts the second
    bound of either sign by ``2 w^-1 w' 2rho_nc``. ``linear`` acts linearly in
    both signs and shifts by ``w^-1 2rho_nc``, like ``sss^M``; only this form is
    exchanged by ``w_0`` and by duality.
    """

    DOT = "dot"
    LINEAR = "linear"


class CousinVariant(str, Enum):
    FLAG = "flag"
    SHIMURA = "shimura"


class SignClass(str, Enum):
    """Position of a cocharacter valuation relative to the positive roots."""

    T_PLUS_PLUS = "T++"
    T_PLUS = "T+"
    T_MINUS_MINUS = "T--"
    T_MINUS = "T-"
    MIXED = "mixed"


def to_fraction(value: Any) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/2"`` to ``Fraction``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not weight coordinates")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if hasattr(value, "p") and hasattr(value, "q"):
        # sympy.Rational
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"cannot use {value!r} as an exact rational")


@dataclass(frozen=True, eq=False)
class Weight:
    """Rational vector in the ambient weight space.

    Coordinates are always stored as ``Fraction``; arithmetic keeps the
    concrete subclass so a ``SlopeVector`` stays a ``SlopeVector``.
    """

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(to_fraction(c) for c in self.coords))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Weight):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coords)

    @classmethod
    def of(cls: type[_W], *values: Any) -> _W:
        return cls(tuple(values))

    @classmethod
    def zero(cls: type[_W], dim: int) -> _W:
        return cls((Fraction(0),) * dim)

    @classmethod
    def from_iterable(cls: type[_W], values: Iterable[Any]) -> _W:
        return cls(tuple(values))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> Fraction:
        return self.coords[index]

    def _check_dim(self, other: Weight) -> None:
        if len(other.coords) != len(self.coords):
            from .errors import DimensionMismatchError

            raise DimensionMismatchError(
                f"dimension mismatch: {len(self.coords)} vs {len(other.coords)}",
                module="models",
                operation="arithmetic",
            )

    def __add__(self: _W, other: Weight) -> _W:
        self._check_dim(other)
        return type(self)(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self: _W, other: Weight) -> _W:
        self._check_dim(other)
        return type(self)(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self: _W) -> _W:
        return type(self)(tuple(-a for a in self.coords))

    def __mul__(self: _W, scalar: Rational) -> _W:
        s = to_fraction(scalar)
        return type(self)(tuple(s * a for a in self.coords))

    __rmul__ = __mul__

    def dot(self, other: Weight) -> Fraction:
        self._check_dim(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def cast(self, cls: type[_W]) -> _W:
        """Reinterpret the coordinates as another weight-like type."""
        return cls(self.coords)

    def to_list(self) -> list[str]:
        return [format_fraction(c) for c in self.coords]

    def __str__(self) -> str:
        return "(" + ",".join(self.to_list()) + ")"


class Coweight(Weight):
    """Rational covector, paired with weights by the standard dot product."""


class SlopeVector(Weight):
    """Slope of an eigensystem, kept in Gamma-invariant ambient coordinates."""


@dataclass(frozen=True)
class CocharacterValuation:
    """Valuation of a torus element, seen as a rational covector.

    ``sign_class`` and the ``min``/``max`` values are derived from the
    pairings with the positive roots supplied at construction.
    """

    coords: Coweight
    pairings: tuple[Fraction, ...]

    @property
    def sign_class(self) -> SignClass:
        if not self.pairings:
            return SignClass.T_PLUS
        if all(p > 0 for p in self.pairings):
            return SignClass.T_PLUS_PLUS
        if all(p < 0 for p in self.pairings):
            return SignClass.T_MINUS_MINUS
        if all(p >= 0 for p in self.pairings):
            return SignClass.T_PLUS
        if all(p <= 0 for p in self.pairings):
            return SignClass.T_MINUS
        return SignClass.MIXED

    @property
    def in_t_plus(self) -> bool:
        return all(p >= 0 for p in self.pairings)

    @property
    def in_t_minus(self) -> bool:
        return all(p <= 0 for p in self.pairings)

    @property
    def min(self) -> Fraction | None:
        """Smallest pairing with a positive root, defined on ``T++``."""
        if self.sign_class is SignClass.T_PLUS_PLUS:
            return min(self.pairings)
        if self.sign_class is SignClass.T_MINUS_MINUS:
            return min(-p for p in self.pairings)
        return None

    @property
    def max(self) -> Fraction | None:
        if self.sign_class is SignClass.T_PLUS_PLUS:
            return max(self.pairings)
        if self.sign_class is SignClass.T_MINUS_MINUS:
            return max(-p for p in self.pairings)
        return None


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


__all__ = [
    "BoundVariant",
    "Chamber",
    "CocharacterValuation",
    "Coweight",
    "CousinVariant",
    "Flavor",
    "Kind",
    "MwForm",
    "Order",
    "Rational",
    "Sign",
    "SignClass",
    "SlopeVector",
    "Weight",
    "format_fraction",
    "to_fraction",
]
