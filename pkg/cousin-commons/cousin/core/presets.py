"""Preset root data and the pluggable preset registry.

Built-in families:

- ``A<n>``: type A_n in fundamental-weight coordinates (``A1``, ``A2``, ...).
- ``GSp2g:g=<n>``: GSp_2g with coordinates ``(k_1,...,k_g;k)``, dominant
  chamber ``0 >= k_1 >= ... >= k_g``; simple indices ``0..g-2`` are the
  compact roots ``e_i - e_{i+1}`` and index ``g-1`` is the long root ``-2e_1``.
- ``GSp4``/``C2`` (``g=2``) and ``GL2`` (``g=1``).
- ``product:<p1>x<p2>[x...]``: block sum of presets.
- ``res:<preset>^<r>``: ``r`` copies permuted cyclically by the Galois action.

Further families are contributed through the ``cousin_register_presets`` hook.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .._internal.hooks.specs import hookimpl
from .errors import ConfigError, PresetError, RootDatumError
from .models import Coweight, Weight
from .root_datum import RootDatum
from .utils import parse_vector

logger = logging.getLogger("Cousin")

PresetFactory = Callable[["re.Match[str]", "PresetRegistry"], RootDatum]


@dataclass(frozen=True)
class _PresetEntry:
    pattern: re.Pattern[str]
    factory: PresetFactory
    usage: str


class PresetRegistry:
    """Name patterns mapped to root-datum factories; first match wins."""

    def __init__(self) -> None:
        self._entries: list[_PresetEntry] = []

    def register(self, pattern: str, factory: PresetFactory, *, usage: str | None = None) -> None:
        self._entries.append(_PresetEntry(re.compile(pattern), factory, usage or pattern))

    def usages(self) -> list[str]:
        return [entry.usage for entry in self._entries]

    def resolve(self, name: str) -> RootDatum:
        name = name.strip()
        for entry in self._entries:
            match = entry.pattern.fullmatch(name)
            if match is not None:
                logger.debug("Resolving preset %r via %s", name, entry.usage)
                return entry.factory(match, self)
        raise PresetError(
            f"unknown preset {name!r}; known families: {', '.join(self.usages())}",
            module="presets",
            operation="resolve",
        )


# ========== constructors ==========


def type_a(n: int) -> RootDatum:
    if n < 1:
        raise PresetError("A<n> needs n >= 1", module="presets", operation="type_a")
    roots = []
    for i in range(n):
        row = [Fraction(0)] * n
        row[i] = Fraction(2)
        if i > 0:
            row[i - 1] = Fraction(-1)
        if i < n - 1:
            row[i + 1] = Fraction(-1)
        roots.append(Weight(tuple(row)))
    coroots = [Coweight(tuple(Fraction(int(i == j)) for j in range(n))) for i in range(n)]
    return RootDatum(n, tuple(roots), tuple(coroots), preset_tag=f"A{n}")


def gsp(g: int, tag: str | None = None) -> RootDatum:
    if g < 1:
        raise PresetError("GSp2g needs g >= 1", module="presets", operation="gsp")
    dim = g + 1

    def unit(i: int, scale: int = 1) -> list[Fraction]:
        vec = [Fraction(0)] * dim
        vec[i] = Fraction(scale)
        return vec

    roots: list[Weight] = []
    coroots: list[Coweight] = []
    for i in range(g - 1):
        vec = [a - b for a, b in zip(unit(i), unit(i + 1))]
        roots.append(Weight(tuple(vec)))
        coroots.append(Coweight(tuple(vec)))
    roots.append(Weight(tuple(unit(0, -2))))
    coroots.append(Coweight(tuple(unit(0, -1))))
    return RootDatum(dim, tuple(roots), tuple(coroots), preset_tag=tag or f"GSp2g:g={g}")


def compact_levi(g: int) -> frozenset[int]:
    """Simple indices of the Siegel Levi in the ``GSp2g`` preset."""
    return frozenset(range(g - 1))


def product(factors: Sequence[RootDatum], tag: str | None = None) -> RootDatum:
    dim = sum(f.dim for f in factors)
    roots: list[Weight] = []
    coroots: list[Coweight] = []
    gamma: list[tuple[int, ...]] = []
    offset = 0
    for factor in factors:

        def pad(vec: Weight, offset: int = offset, width: int = factor.dim) -> tuple[Fraction, ...]:
            return (
                (Fraction(0),) * offset + vec.coords + (Fraction(0),) * (dim - offset - width)
            )

        roots.extend(Weight(pad(r)) for r in factor.simple_roots)
        coroots.extend(Coweight(pad(c)) for c in factor.simple_coroots)
        for perm in factor.gamma:
            full = list(range(dim))
            for i, image in enumerate(perm):
                full[offset + i] = offset + image
            gamma.append(tuple(full))
        offset += factor.dim
    return RootDatum(dim, tuple(roots), tuple(coroots), tuple(gamma), preset_tag=tag)


def restriction_of_scalars(base: RootDatum, copies: int, tag: str | None = None) -> RootDatum:
    """``copies`` blocks of *base* with the Galois action shifting blocks cyclically."""
    if copies < 1:
        raise PresetError("res needs r >= 1", module="presets", operation="restriction_of_scalars")
    blocks = product([base] * copies)
    dim = blocks.dim
    gamma = list(blocks.gamma)
    if copies > 1:
        gamma.append(tuple((i + base.dim) % dim for i in range(dim)))
    return RootDatum(
        dim, blocks.simple_roots, blocks.simple_coroots, tuple(gamma), preset_tag=tag
    )


def load_datum_document(document: Mapping[str, Any]) -> RootDatum:
    """Build a datum from ``{dim, simple_roots, simple_coroots, gamma_generators}``.

    Gamma generators are lists of 0-based coordinate images.
    """
    try:
        dim = int(document["dim"])
        roots = tuple(Weight(parse_vector(r)) for r in document["simple_roots"])
        coroots = tuple(Coweight(parse_vector(c)) for c in document["simple_coroots"])
        gamma = tuple(tuple(int(i) for i in g) for g in document.get("gamma_generators", ()))
    except (KeyError, TypeError, ValueError) as exc:
        raise RootDatumError(
            f"malformed root-datum document: {exc}",
            module="presets",
            operation="load_datum_document",
        ) from exc
    except ConfigError as exc:
        raise RootDatumError(exc.message, module="presets", operation="load_datum_document") from exc
    return RootDatum(dim, roots, coroots, gamma, preset_tag=document.get("name", "custom"))


# ========== built-in registrations ==========


def _split_product(text: str) -> list[str]:
    parts = [p.strip() for p in text.split("x")]
    if len(parts) < 2 or not all(parts):
        raise PresetError(
            f"product needs at least two factors, got {text!r}",
            module="presets",
            operation="product",
        )
    return parts


class BuiltinPresets:
    """Plugin registering the preset families shipped with the toolkit."""

    @hookimpl
    def cousin_register_presets(self, registry: PresetRegistry) -> None:
        registry.register(
            r"A(?P<n>\d+)", lambda m, _r: type_a(int(m["n"])), usage="A<n>"
        )
        registry.register(r"C2|GSp4", lambda m, _r: gsp(2, tag=m.group(0)), usage="GSp4|C2")
        registry.register(r"GL2", lambda m, _r: gsp(1, tag="GL2"), usage="GL2")
        registry.register(
            r"GSp2g:g=(?P<g>\d+)", lambda m, _r: gsp(int(m["g"])), usage="GSp2g:g=<n>"
        )
        registry.register(
            r"product:(?P<parts>.+)",
            lambda m, r: product(
                [r.resolve(p) for p in _split_product(m["parts"])], tag=m.group(0)
            ),
            usage="product:<p1>x<p2>",
        )
        registry.register(
            r"res:(?P<base>.+)\^(?P<r>\d+)",
            lambda m, r: restriction_of_scalars(r.resolve(m["base"]), int(m["r"]), tag=m.group(0)),
            usage="res:<preset>^<r>",
        )


def preset_registry() -> PresetRegistry:
    """Collect preset families from every registered plugin."""
    from .._internal.hooks.manager import get_plugin_manager

    registry = PresetRegistry()
    get_plugin_manager().hook.cousin_register_presets(registry=registry)
    return registry


def get_preset(name: str) -> RootDatum:
    return preset_registry().resolve(name)


__all__ = [
    "BuiltinPresets",
    "PresetRegistry",
    "compact_levi",
    "get_preset",
    "gsp",
    "load_datum_document",
    "preset_registry",
    "product",
    "restriction_of_scalars",
    "type_a",
]
