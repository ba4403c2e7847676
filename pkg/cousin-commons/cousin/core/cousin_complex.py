"""Cousin complexes of flag varieties, big weights and Borel-Weil-Bott."""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from .char_ring import FormalCharacter, verma_character, weyl_dimension
from .errors import NotDominantError, PreconditionError
from .models import Chamber, CousinVariant, Order, Sign, Weight
from .root_datum import LeviDatum, RootDatum, is_dominant, is_integral, is_regular, leq, pairing
from .slope_calc import c_set, ell_min_max, slope_bound
from .weyl import (
    WeylElement,
    dominant_decomposition,
    dot_action,
    ell_pm,
    enumerate_group,
    kostant_reps,
)

logger = logging.getLogger("Cousin")


@dataclass(eq=False)
class CousinTerm:
    degree: int
    w: WeylElement
    label: Weight
    _factory: Callable[[], FormalCharacter | None] | None = field(default=None, repr=False)

    @cached_property
    def character(self) -> FormalCharacter | None:
        """Truncated Verma character of the term, computed on first access."""
        if self._factory is None:
            return None
        return self._factory()

    def to_dict(self) -> dict[str, Any]:
        return {"degree": self.degree, "w": self.w.name, "label": self.label.to_list()}


@dataclass
class CousinDescriptor:
    datum: RootDatum
    variant: CousinVariant
    sign: Sign
    d: int
    terms: dict[int, list[CousinTerm]]
    top: Weight | None = None
    depth: int | None = None

    def term_counts(self) -> list[int]:
        return [len(self.terms.get(p, [])) for p in range(self.d + 1)]

    def euler_character(self) -> FormalCharacter:
        """``sum_p (-1)^p`` of the term characters, anchored at the top of the dot orbit."""
        if self.top is None or self.depth is None:
            raise PreconditionError(
                "only flag Cousin complexes carry characters",
                module="cousin",
                operation="euler_character",
            )
        total = FormalCharacter.zero(self.datum, self.top, self.depth)
        for degree, terms in sorted(self.terms.items()):
            for term in terms:
                character = term.character
                if character is None:
                    continue
                total = total + (character if degree % 2 == 0 else -character)
        return total

    def to_dict(self) -> dict[str, Any]:
        return {
            "variant": self.variant.value,
            "sign": self.sign.value,
            "d": self.d,
            "terms": {
                str(p): [t.to_dict() for t in self.terms.get(p, [])] for p in range(self.d + 1)
            },
        }


# ========== dot orbits ==========


def dot_orbit_top(datum: RootDatum, kappa: Weight) -> Weight:
    """The unique ``nu`` in ``W . kappa`` with ``nu + rho`` dominant."""
    _, dominant = dominant_decomposition(datum, kappa + datum.rho)
    return dominant - datum.rho


def _require_integral(datum: RootDatum, kappa: Weight, operation: str) -> None:
    if not is_integral(datum, kappa):
        raise PreconditionError(f"{kappa} is not integral", module="cousin", operation=operation)


def flag_cousin(datum: RootDatum, kappa: Weight, depth: int) -> CousinDescriptor:
    """Cousin complex of the full flag variety.

    Degree ``p`` holds the ``w`` with ``l(w) = d - p``, labelled by
    ``(w^{-1} w_0) . kappa``. Characters are truncated so that every term is
    exact down to height *depth* below the top of the dot orbit.
    """
    _require_integral(datum, kappa, "flag_cousin")
    group = enumerate_group(datum)
    d = len(datum.positive_roots)
    top = dot_orbit_top(datum, kappa)
    terms: dict[int, list[CousinTerm]] = {p: [] for p in range(d + 1)}
    for w in group:
        label = dot_action(w.inverse * group.longest, kappa)
        remaining = depth - int(datum.height(top - label))

        def factory(label: Weight = label, remaining: int = remaining) -> FormalCharacter | None:
            if remaining < 0:
                return None
            return verma_character(datum, label, remaining)

        terms[d - w.length].append(CousinTerm(d - w.length, w, label, factory))
    return CousinDescriptor(datum, CousinVariant.FLAG, Sign.PLUS, d, terms, top=top, depth=depth)


# ========== big weights ==========


def big_weight(datum: RootDatum, weight: Weight, nu: Weight, method: str = "simple") -> bool:
    """True iff ``weight`` is not below ``w . nu`` for any ``w`` moving ``nu``."""
    shifted = nu + datum.rho
    if not is_dominant(datum, shifted):
        raise NotDominantError(f"{nu} + rho is not dominant", module="cousin", operation="big_weight")
    if method == "full":
        return not any(
            leq(datum, weight, dot_action(w, nu))
            for w in enumerate_group(datum)
            if dot_action(w, nu) != nu
        )
    moving = [i for i, c in enumerate(datum.simple_coroots) if pairing(shifted, c) != 0]
    if method == "simple":
        group = enumerate_group(datum)
        return not any(leq(datum, weight, dot_action(group.simple(i), nu)) for i in moving)
    if method == "coefficients":
        if not leq(datum, weight, nu, Order.ABSOLUTE):
            return True
        coeffs = datum.simple_coefficients(nu - weight)
        assert coeffs is not None
        return all(coeffs[i] < pairing(nu, datum.simple_coroots[i]) + 1 for i in moving)
    raise PreconditionError(f"unknown method {method!r}", module="cousin", operation="big_weight")


def big_weight_filter(character: FormalCharacter, nu: Weight) -> FormalCharacter:
    """The part of *character* supported on big weights for ``nu``."""
    return character.filter(lambda weight: big_weight(character.datum, weight, nu, "coefficients"))


# ========== Borel-Weil-Bott ==========


def bw_amplitude(datum: RootDatum, kappa: Weight) -> tuple[int, int]:
    """Degree range ``[min, max]`` of ``d - l(w)`` over ``w`` with ``(w^{-1} w_0) . kappa`` on top."""
    group = enumerate_group(datum)
    d = len(datum.positive_roots)
    top = dot_orbit_top(datum, kappa)
    degrees = [d - w.length for w in group if dot_action(w.inverse * group.longest, kappa) == top]
    return min(degrees), max(degrees)


@dataclass(frozen=True)
class BWBResult:
    w: WeylElement
    degree: int
    weight: Weight
    dimension: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "w": self.w.name,
            "degree": self.degree,
            "weight": self.weight.to_list(),
            "dimension": self.dimension,
        }


def bwb(datum: RootDatum, kappa: Weight) -> BWBResult | None:
    """Cohomology of the line bundle of weight *kappa*: None when ``kappa + rho`` is singular."""
    _require_integral(datum, kappa, "bwb")
    if not is_regular(datum, kappa + datum.rho):
        return None
    for w in enumerate_group(datum):
        image = dot_action(w, kappa)
        if is_dominant(datum, image):
            return BWBResult(w, w.length, image, weyl_dimension(datum, image))
    raise AssertionError("a regular orbit always meets the dominant chamber")


# ========== Shimura-variety shapes ==========


def shimura_cousin_shape(
    datum: RootDatum, levi: LeviDatum, kappa: Weight, sign: Sign = Sign.PLUS
) -> CousinDescriptor:
    """Terms indexed by ``^MW`` in degree ``l_+/l_-``, labelled by the conjectural slope bounds."""
    sign = Sign(sign)
    if not is_dominant(datum, kappa, Chamber.M, levi):
        raise NotDominantError(
            f"{kappa} is not M-dominant", module="cousin", operation="shimura_cousin_shape"
        )
    terms: dict[int, list[CousinTerm]] = {p: [] for p in range(levi.d + 1)}
    for w in kostant_reps(datum, levi):
        degree = ell_pm(w, levi, sign)
        label = slope_bound(datum, levi, w, kappa, "conjectural", sign)
        terms[degree].append(CousinTerm(degree, w, label))  # type: ignore[arg-type]
    return CousinDescriptor(datum, CousinVariant.SHIMURA, sign, levi.d, terms)


@dataclass(frozen=True)
class ClassicalRanges:
    cuspidal: tuple[int, int]
    non_cuspidal: tuple[int, int]
    interior: tuple[int, int]
    c_plus: tuple[str, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "cuspidal": list(self.cuspidal),
            "non_cuspidal": list(self.non_cuspidal),
            "interior": list(self.interior),
            "c_plus": list(self.c_plus),
        }


def classical_ranges(datum: RootDatum, levi: LeviDatum, kappa: Weight) -> ClassicalRanges:
    """Degrees where strongly small slope classical cohomology can live."""
    low, high = ell_min_max(datum, levi, kappa)
    names = tuple(w.name for w in c_set(datum, levi, kappa, Sign.PLUS))
    return ClassicalRanges((0, high), (low, levi.d), (low, high), names)


__all__ = [
    "BWBResult",
    "ClassicalRanges",
    "CousinDescriptor",
    "CousinTerm",
    "big_weight",
    "big_weight_filter",
    "bw_amplitude",
    "bwb",
    "classical_ranges",
    "dot_orbit_top",
    "flag_cousin",
    "shimura_cousin_shape",
]
