"""Parsing, formatting and exact linear-algebra helpers."""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Any

import sympy

from .errors import ConfigError
from .models import Weight, format_fraction, to_fraction

Matrix = tuple[tuple[Fraction, ...], ...]

_WORD_LETTER = re.compile(r"s(\d+)")


def parse_fraction(text: Any) -> Fraction:
    try:
        return to_fraction(text.strip() if isinstance(text, str) else text)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"not an exact rational: {text!r}", module="utils", operation="parse") from exc


def parse_vector(text: str | Sequence[Any]) -> tuple[Fraction, ...]:
    """Parse ``"5,3,-8"`` (or a JSON list) into a tuple of fractions."""
    if isinstance(text, str):
        parts = [p for p in re.split(r"[,\s;]+", text.strip().strip("()[]")) if p]
    else:
        parts = list(text)
    if not parts:
        raise ConfigError("empty vector", module="utils", operation="parse_vector")
    return tuple(parse_fraction(p) for p in parts)


def parse_word(text: str | Sequence[int]) -> tuple[int, ...]:
    """Parse a Weyl word: ``"s1s0s1"``, ``"1,0,1"``, ``"Id"`` or ``"e"``."""
    if not isinstance(text, str):
        return tuple(int(i) for i in text)
    stripped = text.strip()
    if stripped in ("", "Id", "id", "e"):
        return ()
    if stripped.startswith("s"):
        letters = _WORD_LETTER.findall(stripped)
        if "".join(f"s{x}" for x in letters) != stripped.replace(" ", "").replace("*", ""):
            raise ConfigError(f"malformed word {text!r}", module="utils", operation="parse_word")
        return tuple(int(x) for x in letters)
    try:
        return tuple(int(p) for p in re.split(r"[,\s]+", stripped) if p)
    except ValueError as exc:
        raise ConfigError(f"malformed word {text!r}", module="utils", operation="parse_word") from exc


def parse_index_set(text: str | Iterable[int] | None) -> frozenset[int]:
    if text is None:
        return frozenset()
    if isinstance(text, str):
        try:
            return frozenset(int(p) for p in re.split(r"[,\s]+", text.strip()) if p)
        except ValueError as exc:
            raise ConfigError(
                f"malformed index set {text!r}", module="utils", operation="parse_index_set"
            ) from exc
    return frozenset(int(i) for i in text)


def format_word(word: Sequence[int]) -> str:
    if not word:
        return "Id"
    return "".join(f"s{i}" for i in word)


def format_vector(vector: Weight | Sequence[Fraction]) -> str:
    return "(" + ",".join(format_fraction(to_fraction(c)) for c in vector) + ")"


# ========== exact linear algebra ==========


def identity_matrix(dim: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if r == c else Fraction(0) for c in range(dim)) for r in range(dim)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    columns = list(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in columns) for row in a
    )


def mat_vec(m: Matrix, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in m)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def _from_sympy(matrix: sympy.Matrix) -> Matrix:
    return tuple(
        tuple(to_fraction(sympy.Rational(matrix[r, c])) for c in range(matrix.cols))
        for r in range(matrix.rows)
    )


def left_inverse(columns: Sequence[Sequence[Fraction]]) -> Matrix | None:
    """Left inverse ``(A^T A)^{-1} A^T`` of the matrix whose columns are given.

    Returns None when the columns are linearly dependent. The result maps a
    vector in the column span to its exact coordinates.
    """
    if not columns:
        return ()
    a = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in col] for col in columns]).T
    gram = a.T * a
    if gram.det() == 0:
        return None
    return _from_sympy(gram.inv() * a.T)


def span_coordinates(
    columns: Sequence[Sequence[Fraction]],
    inverse: Matrix,
    vector: Sequence[Fraction],
) -> tuple[Fraction, ...] | None:
    """Coordinates of *vector* in the basis *columns*, or None outside their span."""
    coeffs = mat_vec(inverse, vector)
    for i, entry in enumerate(vector):
        rebuilt = sum((c * col[i] for c, col in zip(coeffs, columns)), Fraction(0))
        if rebuilt != entry:
            return None
    return coeffs


def matrix_inverse(m: Matrix) -> Matrix:
    inv = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m]).inv()
    return _from_sympy(inv)


__all__ = [
    "Matrix",
    "format_fraction",
    "format_vector",
    "format_word",
    "identity_matrix",
    "left_inverse",
    "mat_mul",
    "mat_vec",
    "matrix_inverse",
    "parse_fraction",
    "parse_index_set",
    "parse_vector",
    "parse_word",
    "span_coordinates",
    "transpose",
]
