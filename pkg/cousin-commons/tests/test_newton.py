"""Tests for p-adic valuations and Newton polygons."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from cousin.core.errors import (
    ConfigError,
    DimensionMismatchError,
    PreconditionError,
    ResourceBoundError,
    ZeroPolynomialError,
)
from cousin.core.newton import (
    PValuation,
    Segment,
    finite_slope_dimension,
    h_slope_dimension,
    is_slope_leq_h,
    newton_polygon,
)


class TestPValuation:
    @pytest.mark.parametrize(
        "p, value, expected",
        [(2, 8, 3), (2, Fraction(3, 4), -2), (5, 7, 0), (3, "-18", 2)],
    )
    def test_values(self, p, value, expected):
        assert PValuation(p)(value) == expected

    def test_zero_is_infinite(self):
        assert PValuation(3)(0) == math.inf

    def test_requires_prime(self):
        with pytest.raises(ConfigError):
            PValuation(4)

    def test_bit_length_bound(self, monkeypatch):
        monkeypatch.setenv("COUSIN_MAX_ENUM", "8")
        with pytest.raises(ResourceBoundError):
            PValuation(2)(2**20)


class TestNewtonPolygon:
    def test_linear(self):
        polygon = newton_polygon([-2, 1], 2)
        assert polygon.segments == (Segment(Fraction(-1), 1),)
        assert polygon.root_valuations() == [1]
        assert polygon.to_dict() == {
            "vertices": [[0, "1"], [1, "0"]],
            "segments": [{"slope": "-1", "length": 1}],
        }

    def test_two_slopes(self):
        """(X - 1)(X - 3) over p = 3 has one unit root and one of valuation 1."""
        polygon = newton_polygon([3, -4, 1], 3)
        assert polygon.slope_multiset() == [-1, 0]
        assert polygon.root_valuations() == [0, 1]

    def test_collinear_points_merge(self):
        polygon = newton_polygon([4, 2, 1], 2)
        assert polygon.segments == (Segment(Fraction(-1), 2),)

    def test_product_slopes_are_the_union(self):
        """(X - 2)(X - 1) over p = 2 collects the slopes of both factors."""
        product = newton_polygon([2, -3, 1], 2)
        assert product.slope_multiset() == sorted(
            newton_polygon([-2, 1], 2).slope_multiset() + newton_polygon([-1, 1], 2).slope_multiset()
        )

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomialError):
            newton_polygon([0, 0], 5)


class TestSlopeTests:
    @pytest.mark.parametrize(
        "poly, h, p, expected",
        [
            ([-2, 1], -1, 2, True),
            ([-2, 1], -2, 2, False),
            ([-1, 1], 0, 7, True),
            ([-2, 0, 1], "-1/2", 2, True),
            ([-2, 0, 1], -1, 2, False),
        ],
    )
    def test_is_slope_leq_h(self, poly, h, p, expected):
        assert is_slope_leq_h(poly, h, p) is expected

    def test_needs_nonzero_leading_coefficient(self):
        with pytest.raises(PreconditionError):
            is_slope_leq_h([1, 0], 0, 2)


class TestSlopeDimensions:
    def test_diagonal(self):
        matrix = [[1, 0, 0], [0, 5, 0], [0, 0, 25]]
        assert h_slope_dimension(matrix, 1, 5) == 2
        assert finite_slope_dimension(matrix, 5) == 3

    def test_zero_matrix(self):
        assert h_slope_dimension([[0, 0], [0, 0]], 10, 3) == 0
        assert finite_slope_dimension([[0, 0], [0, 0]], 3) == 0

    @pytest.mark.parametrize("h, expected", [(0, 2), ("-1/2", 1), (-2, 0)])
    def test_negative_valuations(self, h, expected):
        assert h_slope_dimension([["1/5", 0], [0, 1]], h, 5) == expected

    def test_zero_eigenvalue_is_not_finite_slope(self):
        assert finite_slope_dimension([[0, 0], [0, 3]], 3) == 1

    def test_triangular_matrix(self):
        """Only the diagonal matters: eigenvalue valuations are 1, 0 and 2."""
        block = [[2, 1, 0], [0, 1, 0], [0, 0, 4]]
        assert h_slope_dimension(block, 1, 2) == 2
        assert h_slope_dimension(block, 2, 2) == 3
        assert finite_slope_dimension(block, 2) == 3

    def test_not_square(self):
        with pytest.raises(DimensionMismatchError):
            h_slope_dimension([[1, 2]], 0, 2)

    def test_dimensions_grow_with_h_in_size_eight(self):
        """Upper triangular with diagonal 2**i: one new eigenvalue per unit of h."""
        size = 8
        matrix = [[2**i if i == j else (1 if j > i else 0) for j in range(size)] for i in range(size)]
        dimensions = [h_slope_dimension(matrix, h, 2) for h in range(-1, size)]
        assert dimensions == list(range(size + 1))
        assert finite_slope_dimension(matrix, 2) == size
