"""p-adic valuations, Newton polygons and slope decomposition dimensions.

Slopes of the Newton polygon are the negatives of the root valuations: a
segment of slope ``s`` and length ``n`` accounts for ``n`` roots of
valuation ``-s``.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any

import sympy

from .._internal.limits import MAX_VALUATION_BITS, check_bound
from .errors import ConfigError, DimensionMismatchError, PreconditionError, ZeroPolynomialError
from .models import to_fraction

logger = logging.getLogger("Cousin")

Valuation = Fraction | float  # math.inf for zero


@dataclass(frozen=True)
class PValuation:
    """The p-adic valuation on Q normalized by ``v(p) = 1``."""

    p: int

    def __post_init__(self) -> None:
        if not sympy.isprime(self.p):
            raise ConfigError(f"{self.p} is not a prime", module="newton", operation="PValuation")

    def __call__(self, value: Any) -> Valuation:
        x = to_fraction(value)
        if x == 0:
            return math.inf
        bits = max(abs(x.numerator).bit_length(), x.denominator.bit_length())
        check_bound(
            bits,
            MAX_VALUATION_BITS,
            context="valuation input bit length",
            module="newton",
            operation="valuation",
        )
        num = sympy.multiplicity(self.p, abs(x.numerator))
        den = sympy.multiplicity(self.p, x.denominator)
        return Fraction(int(num) - int(den))


@dataclass(frozen=True)
class Segment:
    slope: Fraction
    length: int


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of the points ``(i, v(a_i))`` with finite ordinate."""

    points: tuple[tuple[int, Fraction], ...]

    @cached_property
    def hull(self) -> tuple[tuple[int, Fraction], ...]:
        # monotone chain, collinear points dropped
        vertices: list[tuple[int, Fraction]] = []
        for point in self.points:
            while len(vertices) >= 2:
                (x1, y1), (x2, y2) = vertices[-2], vertices[-1]
                if (point[1] - y2) * (x2 - x1) <= (y2 - y1) * (point[0] - x2):
                    vertices.pop()
                else:
                    break
            vertices.append(point)
        return tuple(vertices)

    @cached_property
    def segments(self) -> tuple[Segment, ...]:
        hull = self.hull
        return tuple(
            Segment(Fraction(y2 - y1) / (x2 - x1), x2 - x1)
            for (x1, y1), (x2, y2) in zip(hull, hull[1:])
        )

    def slope_multiset(self) -> list[Fraction]:
        return [s.slope for s in self.segments for _ in range(s.length)]

    def root_valuations(self) -> list[Fraction]:
        """Valuations of the nonzero roots, ascending, with multiplicity."""
        return sorted(-slope for slope in self.slope_multiset())

    def to_dict(self) -> dict[str, Any]:
        return {
            "vertices": [[x, str(y)] for x, y in self.hull],
            "segments": [{"slope": str(s.slope), "length": s.length} for s in self.segments],
        }


def _coefficients(poly: Sequence[Any]) -> list[Fraction]:
    coeffs = [to_fraction(c) for c in poly]
    if not any(coeffs):
        raise ZeroPolynomialError("the zero polynomial has no Newton polygon", module="newton", operation="newton_polygon")
    return coeffs


def newton_polygon(poly: Sequence[Any], p: int) -> NewtonPolygon:
    """Newton polygon of ``sum a_i X^i`` from coefficients in ascending degree."""
    v = PValuation(p)
    coeffs = _coefficients(poly)
    points = tuple(
        (i, Fraction(v(c)))  # type: ignore[arg-type]
        for i, c in enumerate(coeffs)
        if c != 0
    )
    polygon = NewtonPolygon(points)
    logger.debug("Newton polygon over p=%d has %d segments", p, len(polygon.segments))
    return polygon


def is_slope_leq_h(poly: Sequence[Any], h: Any, p: int) -> bool:
    """True iff every root of ``Q*(X) = X^deg Q(1/X)`` has valuation at most *h*.

    Equivalently every finite root valuation of ``Q`` is at least ``-h``.
    """
    coeffs = _coefficients(poly)
    if coeffs[-1] == 0:
        raise PreconditionError(
            "leading coefficient must be a nonzero rational", module="newton", operation="is_slope_leq_h"
        )
    bound = -to_fraction(h)
    return all(rv >= bound for rv in newton_polygon(coeffs, p).root_valuations())


def _charpoly(matrix: Sequence[Sequence[Any]]) -> list[Fraction]:
    rows = [list(row) for row in matrix]
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise DimensionMismatchError("matrix must be square", module="newton", operation="h_slope_dimension")
    if size == 0:
        return [Fraction(1)]
    sym = sympy.Matrix(
        [[sympy.Rational(to_fraction(x).numerator, to_fraction(x).denominator) for x in row] for row in rows]
    )
    x = sympy.Symbol("x")
    descending = sym.charpoly(x).all_coeffs()
    return [to_fraction(sympy.Rational(c)) for c in reversed(descending)]


def h_slope_dimension(matrix: Sequence[Sequence[Any]], h: Any, p: int) -> int:
    """Number of eigenvalues (with multiplicity) of valuation at most *h*; zero counts as infinite."""
    bound = to_fraction(h)
    polygon = newton_polygon(_charpoly(matrix), p)
    return sum(1 for rv in polygon.root_valuations() if rv <= bound)


def finite_slope_dimension(matrix: Sequence[Sequence[Any]], p: int) -> int:
    """Limit of ``h_slope_dimension`` as ``h`` grows: the number of nonzero eigenvalues."""
    return len(newton_polygon(_charpoly(matrix), p).root_valuations())


__all__ = [
    "NewtonPolygon",
    "PValuation",
    "Segment",
    "finite_slope_dimension",
    "h_slope_dimension",
    "is_slope_leq_h",
    "newton_polygon",
]
