"""Truncated formal characters on the weight lattice.

A character is stored relative to an anchor weight: the key ``c`` (a tuple of
nonnegative integers) stands for ``anchor - sum(c_i alpha_i)``. Only keys of
total height ``sum(c) <= depth`` are meaningful; everything deeper has been
truncated away.
"""

from __future__ import annotations

import logging
import math
from collections import defaultdict
from collections.abc import Callable, Iterator
from fractions import Fraction

from .._internal.limits import MAX_CHARACTER_TERMS, check_bound
from .errors import DimensionMismatchError, IncompatibleCharactersError, NotDominantError
from .models import Weight
from .root_datum import RootDatum, is_dominant, is_integral, leq, pairing
from .weyl import dot_action, enumerate_group

logger = logging.getLogger("Cousin")

Offset = tuple[int, ...]


class FormalCharacter:
    """Finitely supported integer function on ``anchor - Z_{>=0} Delta``, truncated at ``depth``."""

    __slots__ = ("datum", "anchor", "depth", "_terms")

    def __init__(
        self,
        datum: RootDatum,
        anchor: Weight,
        depth: int,
        terms: dict[Offset, int] | None = None,
    ) -> None:
        datum.check_dim(anchor)
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        self.datum = datum
        self.anchor = Weight(anchor.coords)
        self.depth = depth
        self._terms: dict[Offset, int] = {
            key: value
            for key, value in (terms or {}).items()
            if value != 0 and sum(key) <= depth
        }

    # ========== constructors ==========

    @classmethod
    def zero(cls, datum: RootDatum, anchor: Weight, depth: int) -> FormalCharacter:
        return cls(datum, anchor, depth)

    @classmethod
    def monomial(cls, datum: RootDatum, weight: Weight, depth: int = 0) -> FormalCharacter:
        return cls(datum, weight, depth, {(0,) * datum.rank: 1})

    # ========== access ==========

    def _offset_of(self, weight: Weight) -> Offset | None:
        coeffs = self.datum.simple_coefficients(self.anchor - weight)
        if coeffs is None or any(c.denominator != 1 or c < 0 for c in coeffs):
            return None
        return tuple(int(c) for c in coeffs)

    def weight_of(self, offset: Offset) -> Weight:
        return self.anchor - self.datum.from_coefficients(offset)

    def coefficient(self, weight: Weight) -> int:
        """Multiplicity of *weight*; weights below the truncation read as 0."""
        offset = self._offset_of(weight)
        if offset is None:
            return 0
        return self._terms.get(offset, 0)

    def items(self) -> Iterator[tuple[Weight, int]]:
        for offset in sorted(self._terms, key=lambda c: (sum(c), tuple(-x for x in c))):
            yield self.weight_of(offset), self._terms[offset]

    def to_weight_dict(self) -> dict[Weight, int]:
        return dict(self.items())

    def support(self) -> list[Weight]:
        return [weight for weight, _ in self.items()]

    @property
    def total_mass(self) -> int:
        return sum(self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.depth == other.depth and self.to_weight_dict() == other.to_weight_dict()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"FormalCharacter(anchor={self.anchor}, depth={self.depth}, terms={len(self)})"

    # ========== truncation ==========

    def restrict_depth(self, depth: int) -> FormalCharacter:
        return FormalCharacter(self.datum, self.anchor, min(depth, self.depth), self._terms)

    def filter(self, keep: Callable[[Weight], bool]) -> FormalCharacter:
        """Keep only the terms whose weight satisfies *keep*."""
        kept = {c: v for c, v in self._terms.items() if keep(self.weight_of(c))}
        return FormalCharacter(self.datum, self.anchor, self.depth, kept)

    # ========== arithmetic ==========

    def _check_same_datum(self, other: FormalCharacter, operation: str) -> None:
        if other.datum != self.datum:
            raise DimensionMismatchError(
                "characters belong to different root data",
                module="char_ring",
                operation=operation,
            )

    def _shifts(self, other: FormalCharacter) -> tuple[Weight, Offset, Offset]:
        """Common anchor and the offsets of both anchors below it."""
        coeffs = self.datum.simple_coefficients(self.anchor - other.anchor)
        if coeffs is None or any(c.denominator != 1 for c in coeffs):
            raise IncompatibleCharactersError(
                f"anchors {self.anchor} and {other.anchor} differ by a non-integral root combination",
                module="char_ring",
                operation="add",
            )
        delta = [int(c) for c in coeffs]
        own = tuple(max(0, -d) for d in delta)
        theirs = tuple(max(0, d) for d in delta)
        anchor = self.anchor + self.datum.from_coefficients(own)
        return anchor, own, theirs

    def __add__(self, other: FormalCharacter) -> FormalCharacter:
        self._check_same_datum(other, "add")
        anchor, own, theirs = self._shifts(other)
        depth = min(self.depth + sum(own), other.depth + sum(theirs))
        terms: dict[Offset, int] = defaultdict(int)
        for shift, source in ((own, self._terms), (theirs, other._terms)):
            for offset, value in source.items():
                terms[tuple(a + b for a, b in zip(offset, shift))] += value
        return FormalCharacter(self.datum, anchor, depth, terms)

    def __neg__(self) -> FormalCharacter:
        return self.scale(-1)

    def __sub__(self, other: FormalCharacter) -> FormalCharacter:
        return self + (-other)

    def scale(self, factor: int) -> FormalCharacter:
        return FormalCharacter(
            self.datum, self.anchor, self.depth, {c: v * factor for c, v in self._terms.items()}
        )

    __rmul__ = scale

    def __mul__(self, other: FormalCharacter | int) -> FormalCharacter:
        """Convolution; the result keeps the smaller depth."""
        if isinstance(other, int):
            return self.scale(other)
        self._check_same_datum(other, "convolve")
        depth = min(self.depth, other.depth)
        terms: dict[Offset, int] = defaultdict(int)
        for c1, v1 in self._terms.items():
            h1 = sum(c1)
            if h1 > depth:
                continue
            for c2, v2 in other._terms.items():
                if h1 + sum(c2) > depth:
                    continue
                terms[tuple(a + b for a, b in zip(c1, c2))] += v1 * v2
        return FormalCharacter(self.datum, self.anchor + other.anchor, depth, terms)


# ========== operations ==========


def monomial(datum: RootDatum, weight: Weight, depth: int = 0) -> FormalCharacter:
    return FormalCharacter.monomial(datum, weight, depth)


def _check_term_bound(datum: RootDatum, depth: int, operation: str) -> None:
    check_bound(
        math.comb(depth + datum.rank, datum.rank),
        MAX_CHARACTER_TERMS,
        context="character terms",
        module="char_ring",
        operation=operation,
    )


def verma_character(datum: RootDatum, highest_weight: Weight, depth: int) -> FormalCharacter:
    """``[lambda] / prod_{alpha > 0} (1 - [-alpha])`` truncated at *depth*.

    The coefficient at ``lambda - mu`` is the Kostant partition count of ``mu``.
    """
    _check_term_bound(datum, depth, "verma_character")
    terms: dict[Offset, int] = {(0,) * datum.rank: 1}
    for root_coeffs in datum.positive_root_coefficients:
        step = sum(root_coeffs)
        expanded: dict[Offset, int] = defaultdict(int)
        for offset, value in terms.items():
            current = offset
            height = sum(offset)
            while height <= depth:
                expanded[current] += value
                current = tuple(a + b for a, b in zip(current, root_coeffs))
                height += step
        terms = expanded
    logger.debug("Verma character at depth %d has %d terms", depth, len(terms))
    return FormalCharacter(datum, highest_weight, depth, terms)


def kostant_partition_count(datum: RootDatum, mu: Weight) -> int:
    """Ways of writing *mu* as a nonnegative integer sum of positive roots."""
    coeffs = datum.simple_coefficients(mu)
    if coeffs is None or any(c.denominator != 1 or c < 0 for c in coeffs):
        return 0
    depth = int(sum(coeffs))
    zero = Weight.zero(datum.dim)
    return verma_character(datum, zero, depth).coefficient(zero - mu)


def _require_dominant_integral(datum: RootDatum, weight: Weight, operation: str) -> None:
    if not is_dominant(datum, weight) or not is_integral(datum, weight):
        raise NotDominantError(
            f"{weight} is not a dominant integral weight", module="char_ring", operation=operation
        )


def weyl_character(datum: RootDatum, highest_weight: Weight, depth: int) -> FormalCharacter:
    """BGG alternating sum ``sum_w (-1)^l(w) verma(w . lambda)`` within *depth*."""
    _require_dominant_integral(datum, highest_weight, "weyl_character")
    total = FormalCharacter.zero(datum, highest_weight, depth)
    for w in enumerate_group(datum):
        anchor = dot_action(w, highest_weight)
        remaining = depth - int(datum.height(highest_weight - anchor))
        if remaining < 0:
            continue
        term = verma_character(datum, anchor, remaining)
        total = total + (term if w.length % 2 == 0 else -term)
    return total


def weyl_dimension(datum: RootDatum, highest_weight: Weight) -> int:
    _require_dominant_integral(datum, highest_weight, "weyl_dimension")
    shifted = highest_weight + datum.rho
    value = Fraction(1)
    for root in datum.positive_roots:
        coroot = datum.coroot_of(root)
        value *= pairing(shifted, coroot) / pairing(datum.rho, coroot)
    assert value.denominator == 1
    return int(value)


__all__ = [
    "FormalCharacter",
    "kostant_partition_count",
    "leq",
    "monomial",
    "verma_character",
    "weyl_character",
    "weyl_dimension",
]
