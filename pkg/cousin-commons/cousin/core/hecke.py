"""Hecke operator normalizations and symbolic slope-bound tables for ``GSp_2g``."""

from __future__ import annotations

import re
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import PresetError
from .models import Coweight, Kind, Sign, Weight
from .presets import compact_levi, gsp
from .root_datum import LeviDatum, RootDatum, pairing
from .slope_calc import slope_bound
from .utils import format_fraction
from .weyl import WeylElement, kostant_reps

_GENUS = re.compile(r"GSp2g:g=(?P<g>\d+)")


@dataclass(frozen=True)
class AffineForm:
    """``sum a_i k_i + c`` with exact rational coefficients."""

    coefficients: tuple[Fraction, ...]
    constant: Fraction = Fraction(0)

    def variables(self) -> list[str]:
        if len(self.coefficients) == 1:
            return ["k"]
        return [f"k{i + 1}" for i in range(len(self.coefficients))]

    def evaluate(self, values: Sequence[Fraction | int]) -> Fraction:
        return sum((a * Fraction(v) for a, v in zip(self.coefficients, values)), self.constant)

    def render(self, latex: bool = False) -> str:
        """Canonical string: variables in order, then the constant; zero terms omitted."""
        parts: list[str] = []
        for coeff, name in zip(self.coefficients, self.variables()):
            if coeff == 0:
                continue
            if latex:
                name = f"k_{{{name[1:]}}}" if len(name) > 1 else name
            if coeff == 1:
                parts.append(name)
            elif coeff == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{format_fraction(coeff)}{'' if latex else '*'}{name}")
        if self.constant != 0 or not parts:
            parts.append(format_fraction(self.constant))
        text = parts[0]
        for part in parts[1:]:
            text += part if part.startswith("-") else f"+{part}"
        return text

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def interpolate(cls, g: int, function: Callable[[tuple[Fraction, ...]], Fraction]) -> AffineForm:
        """Recover an affine function of ``(k_1..k_g)`` from ``g + 1`` evaluations."""
        origin = (Fraction(0),) * g
        constant = function(origin)
        coefficients = []
        for i in range(g):
            point = tuple(Fraction(int(i == j)) for j in range(g))
            coefficients.append(function(point) - constant)
        return cls(tuple(coefficients), constant)


@dataclass(frozen=True)
class HeckeOperator:
    name: str
    valuation: Coweight


def hecke_operators(g: int) -> list[HeckeOperator]:
    """``U_g`` then ``U_{g-1}, ..., U_1`` as cocharacter valuations ``(t_1..t_g; c)``."""
    half = Fraction(-1, 2)
    operators = [HeckeOperator(f"U{g}", Coweight((half,) * (g + 1)))]
    for i in range(g - 1, 0, -1):
        coords = (Fraction(0),) * (g - i) + (Fraction(-1),) * i + (Fraction(-1),)
        operators.append(HeckeOperator(f"U{i}", Coweight(coords)))
    return operators


def symplectic_kappa(values: Sequence[Fraction | int]) -> Weight:
    """``(k_1..k_g; -sum k_i)``."""
    ks = tuple(Fraction(v) for v in values)
    return Weight(ks + (-sum(ks, Fraction(0)),))


@dataclass(frozen=True)
class HeckeTable:
    g: int
    variant: Kind
    columns: tuple[str, ...]
    rows: tuple[tuple[str, tuple[AffineForm, ...]], ...]

    def cell(self, operator: str, column: str) -> AffineForm:
        for name, forms in self.rows:
            if name == operator:
                return forms[self.columns.index(column)]
        raise KeyError(operator)

    def to_dict(self) -> dict[str, Any]:
        return {
            "g": self.g,
            "variant": self.variant.value,
            "columns": list(self.columns),
            "rows": [
                {"operator": name, "cells": [str(form) for form in forms]} for name, forms in self.rows
            ],
        }


def _entry(
    datum: RootDatum,
    levi: LeviDatum,
    w: WeylElement,
    operator: HeckeOperator,
    variant: Kind,
) -> AffineForm:
    def value(ks: tuple[Fraction, ...]) -> Fraction:
        kappa = symplectic_kappa(ks)
        if variant is Kind.SS:
            bound = slope_bound(datum, levi, w, kappa, "conjectural", Sign.PLUS)
            return pairing(bound, operator.valuation)  # type: ignore[arg-type]
        low, high = slope_bound(datum, levi, w, kappa, "proven_pair", Sign.PLUS)  # type: ignore[misc]
        return max(pairing(low, operator.valuation), pairing(high, operator.valuation))

    return AffineForm.interpolate(datum.dim - 1, value)


def hecke_table(g: int, variant: Kind | str = Kind.SS) -> HeckeTable:
    """Pairings of every slope bound with every standard operator valuation.

    ``ss`` uses the conjectural bound; ``sss`` uses the larger of the two
    proven bounds, whose difference does not depend on the weight.
    """
    if g < 1:
        raise PresetError("hecke tables need g >= 1", module="hecke", operation="hecke_table")
    variant = Kind(variant)
    datum = gsp(g)
    levi = datum.levi(compact_levi(g))
    reps = kostant_reps(datum, levi)
    rows = tuple(
        (op.name, tuple(_entry(datum, levi, w, op, variant) for w in reps))
        for op in hecke_operators(g)
    )
    return HeckeTable(g, variant, tuple(w.name for w in reps), rows)


def symplectic_genus(preset: str) -> int:
    name = preset.strip()
    if name in ("GSp4", "C2"):
        return 2
    if name == "GL2":
        return 1
    match = _GENUS.fullmatch(name)
    if match is None:
        raise PresetError(
            f"hecke tables are defined for GSp2g presets, not {preset!r}",
            module="hecke",
            operation="hecke_table",
        )
    return int(match["g"])


__all__ = [
    "AffineForm",
    "HeckeOperator",
    "HeckeTable",
    "hecke_operators",
    "hecke_table",
    "symplectic_genus",
    "symplectic_kappa",
]
