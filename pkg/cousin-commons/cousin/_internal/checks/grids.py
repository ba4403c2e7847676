"""Finite weight grids for exhaustive property sweeps."""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from ...core.models import Chamber, SlopeVector, Weight
from ...core.root_datum import LeviDatum, RootDatum, is_dominant, restrict_to_split


def weight_grid(datum: RootDatum, radius: int) -> Iterator[Weight]:
    """Integer weights with every non-central coordinate in ``[-radius, radius]``.

    Central coordinates are held at 0.
    """
    central = set(datum.central_axes)
    ranges = [
        range(0, 1) if axis in central else range(-radius, radius + 1) for axis in range(datum.dim)
    ]
    for coords in itertools.product(*ranges):
        yield Weight(coords)


def slope_grid(datum: RootDatum, radius: int) -> list[SlopeVector]:
    seen: dict[SlopeVector, None] = {}
    for weight in weight_grid(datum, radius):
        seen.setdefault(restrict_to_split(datum, weight), None)
    return list(seen)


def shifted_dominant_grid(datum: RootDatum, radius: int) -> list[Weight]:
    """Grid weights ``nu`` with ``nu + rho`` dominant."""
    return [nu for nu in weight_grid(datum, radius) if is_dominant(datum, nu + datum.rho)]


def dominant_grid(datum: RootDatum, radius: int) -> list[Weight]:
    return [nu for nu in weight_grid(datum, radius) if is_dominant(datum, nu)]


def m_dominant_grid(datum: RootDatum, levi: LeviDatum, radius: int) -> list[Weight]:
    return [k for k in weight_grid(datum, radius) if is_dominant(datum, k, Chamber.M, levi)]


def all_levis(datum: RootDatum) -> list[LeviDatum]:
    """Every standard Levi, including the torus and the whole group."""
    indices = range(datum.rank)
    return [
        datum.levi(theta)
        for size in range(datum.rank + 1)
        for theta in itertools.combinations(indices, size)
    ]


def proper_levis(datum: RootDatum) -> list[LeviDatum]:
    return [levi for levi in all_levis(datum) if len(levi.theta) < datum.rank]


__all__ = [
    "all_levis",
    "dominant_grid",
    "m_dominant_grid",
    "proper_levis",
    "shifted_dominant_grid",
    "slope_grid",
    "weight_grid",
]
