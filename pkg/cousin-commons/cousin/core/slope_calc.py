"""Slope calculus: the weight dictionary, slope bounds and small slope conditions.

Every condition has the shape "for each excluded bound, the slope does not
dominate it" (``+``) or "is not dominated by it" (``-``). Strongly small slope
conditions exclude a pair of bounds at a time and only fail when both are
dominated. Comparisons use the split order after restriction.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ConfigError, NotDominantError, NotKostantRepresentativeError
from .models import BoundVariant, Chamber, Flavor, Kind, MwForm, Order, Sign, SlopeVector, Weight
from .root_datum import (
    LeviDatum,
    RootDatum,
    is_dominant,
    is_regular,
    leq,
    pairing,
    restrict_to_split,
    two_rho_nc,
)
from .weyl import (
    WeylElement,
    dominant_decomposition,
    dot_action,
    enumerate_group,
    is_kostant,
    kostant_reps,
    longest_element,
    parabolic_subgroup,
    stabilizer,
)

logger = logging.getLogger("Cousin")

Exclusion = tuple[SlopeVector, ...]

_ALLOWED_FLAVORS: dict[Kind, frozenset[Flavor]] = {
    Kind.SS: frozenset({Flavor.NU, Flavor.M, Flavor.MW, Flavor.B}),
    Kind.SSS: frozenset({Flavor.M, Flavor.MW, Flavor.W, Flavor.B}),
}


@dataclass(frozen=True)
class SlopeCondition:
    """A conjunction of non-domination tests against excluded bounds.

    A slope passes an exclusion unless it dominates (``+``) or is dominated
    by (``-``) every bound in it.
    """

    datum: RootDatum
    sign: Sign
    exclusions: tuple[Exclusion, ...]

    def violated_by(self, slope: Weight) -> Exclusion | None:
        for exclusion in self.exclusions:
            if all(self._hits(slope, bound) for bound in exclusion):
                return exclusion
        return None

    def _hits(self, slope: Weight, bound: Weight) -> bool:
        if self.sign is Sign.PLUS:
            return leq(self.datum, bound, slope, Order.SPLIT)
        return leq(self.datum, slope, bound, Order.SPLIT)

    def __call__(self, slope: Weight) -> bool:
        return self.violated_by(slope) is None

    def __and__(self, other: SlopeCondition) -> SlopeCondition:
        if other.sign is not self.sign:
            raise ConfigError(
                "cannot combine conditions of different signs",
                module="slope_calc",
                operation="slope_condition",
            )
        return SlopeCondition(self.datum, self.sign, self.exclusions + other.exclusions)


# ========== weight dictionary ==========


def _w0(datum: RootDatum) -> WeylElement:
    return longest_element(datum)


def _w0m(levi: LeviDatum) -> WeylElement:
    return longest_element(levi.datum, levi)


def nu_from_kappa(
    datum: RootDatum, levi: LeviDatum, kappa: Weight, w: WeylElement, sign: Sign = Sign.PLUS
) -> Weight:
    """``-w^{-1} w_{0,M}(kappa+rho) - rho`` (``+``) or ``-w_0 w^{-1}(kappa+rho) - rho`` (``-``)."""
    shifted = kappa + datum.rho
    if Sign(sign) is Sign.PLUS:
        image = w.inverse.act(_w0m(levi).act(shifted))
    else:
        image = _w0(datum).act(w.inverse.act(shifted))
    return -image - datum.rho


def kappa_from_nu(
    datum: RootDatum, levi: LeviDatum, nu: Weight, w: WeylElement, sign: Sign = Sign.PLUS
) -> Weight:
    """``-w_{0,M} w(nu+rho) - rho`` (``+``) or ``-w w_0(nu+rho) - rho`` (``-``)."""
    shifted = nu + datum.rho
    if Sign(sign) is Sign.PLUS:
        image = _w0m(levi).act(w.act(shifted))
    else:
        image = w.act(_w0(datum).act(shifted))
    return -image - datum.rho


# ========== C(kappa) and W(kappa) ==========


def _require_m_dominant(datum: RootDatum, levi: LeviDatum, kappa: Weight, operation: str) -> None:
    if not is_dominant(datum, kappa, Chamber.M, levi):
        raise NotDominantError(
            f"{kappa} is not M-dominant", module="slope_calc", operation=operation
        )


def _is_antidominant(datum: RootDatum, weight: Weight) -> bool:
    return all(pairing(weight, c) <= 0 for c in datum.simple_coroots)


@lru_cache(maxsize=4096)
def _c_set(datum: RootDatum, levi: LeviDatum, kappa: Weight, sign: Sign) -> tuple[WeylElement, ...]:
    shifted = kappa + datum.rho
    group = enumerate_group(datum)
    if sign is Sign.PLUS:
        target = _w0m(levi).act(shifted)
        return tuple(w for w in group if _is_antidominant(datum, w.inverse.act(target)))
    return tuple(w for w in group if is_dominant(datum, w.inverse.act(shifted)))


def c_set(
    datum: RootDatum, levi: LeviDatum, kappa: Weight, sign: Sign = Sign.PLUS
) -> tuple[WeylElement, ...]:
    """``C(kappa)^+``: ``w^{-1} w_{0,M}(kappa+rho)`` anti-dominant; ``C(kappa)^-``: ``w^{-1}(kappa+rho)`` dominant."""
    _require_m_dominant(datum, levi, kappa, "c_set")
    return _c_set(datum, levi, Weight(kappa.coords), Sign(sign))


def w_set(
    datum: RootDatum, levi: LeviDatum, kappa: Weight, sign: Sign = Sign.PLUS
) -> tuple[WeylElement, ...]:
    """Stabilizer of ``w_{0,M}(kappa+rho)`` (``+``) or of ``kappa+rho`` (``-``)."""
    _require_m_dominant(datum, levi, kappa, "w_set")
    shifted = kappa + datum.rho
    if Sign(sign) is Sign.PLUS:
        shifted = _w0m(levi).act(shifted)
    return stabilizer(datum, Weight(shifted.coords))


def ell_min_max(datum: RootDatum, levi: LeviDatum, kappa: Weight) -> tuple[int, int]:
    lengths = [w.length for w in c_set(datum, levi, kappa, Sign.PLUS)]
    return min(lengths), max(lengths)


def is_kappa_regular(datum: RootDatum, kappa: Weight) -> bool:
    return is_regular(datum, kappa + datum.rho)


# ========== slope bounds ==========


def _require_kostant(levi: LeviDatum, w: WeylElement, operation: str) -> None:
    if not is_kostant(levi, w):
        raise NotKostantRepresentativeError(
            f"{w.name} is not a Kostant representative", module="slope_calc", operation=operation
        )


def _split(datum: RootDatum, weight: Weight) -> SlopeVector:
    return restrict_to_split(datum, weight)


def _conjectural(datum: RootDatum, levi: LeviDatum, w: WeylElement, kappa: Weight, sign: Sign) -> SlopeVector:
    shifted = kappa + datum.rho
    if sign is Sign.PLUS:
        return _split(datum, w.inverse.act(_w0m(levi).act(shifted)) + datum.rho)
    return _split(datum, w.inverse.act(shifted) - datum.rho)


def _proven_pair(
    datum: RootDatum, levi: LeviDatum, w: WeylElement, kappa: Weight, sign: Sign
) -> tuple[SlopeVector, SlopeVector]:
    base = _w0m(levi).act(kappa) if sign is Sign.PLUS else kappa
    low = w.inverse.act(base)
    high = low + w.inverse.act(two_rho_nc(datum, levi))
    return _split(datum, low), _split(datum, high)


def slope_bound(
    datum: RootDatum,
    levi: LeviDatum,
    w: WeylElement,
    kappa: Weight,
    variant: BoundVariant = BoundVariant.CONJECTURAL,
    sign: Sign = Sign.PLUS,
) -> SlopeVector | tuple[SlopeVector, SlopeVector]:
    """Lower (``+``) or upper (``-``) slope bound on the cohomology attached to ``w``."""
    _require_kostant(levi, w, "slope_bound")
    if BoundVariant(variant) is BoundVariant.CONJECTURAL:
        return _conjectural(datum, levi, w, kappa, Sign(sign))
    return _proven_pair(datum, levi, w, kappa, Sign(sign))


# ========== exclusion sets ==========


@lru_cache(maxsize=4096)
def _ss_nu(datum: RootDatum, nu: Weight, sign: Sign) -> tuple[Exclusion, ...]:
    w0 = _w0(datum)
    out: list[Exclusion] = []
    for w in enumerate_group(datum):
        image = dot_action(w, nu)
        if image == nu:
            continue
        bound = -image if sign is Sign.PLUS else -w0.act(image)
        out.append((_split(datum, bound),))
    return tuple(out)


@lru_cache(maxsize=4096)
def _ss_m(datum: RootDatum, levi: LeviDatum, kappa: Weight, sign: Sign) -> tuple[Exclusion, ...]:
    excluded = set(_c_set(datum, levi, kappa, sign))
    return tuple(
        (_conjectural(datum, levi, w, kappa, sign),)
        for w in kostant_reps(datum, levi)
        if w not in excluded
    )


@lru_cache(maxsize=4096)
def _ss_mw(
    datum: RootDatum, levi: LeviDatum, kappa: Weight, w: WeylElement, sign: Sign
) -> tuple[Exclusion, ...]:
    shifted = kappa + datum.rho
    w0m = _w0m(levi)
    out: list[Exclusion] = []
    for inner in parabolic_subgroup(datum, levi):
        if inner.length == 0:
            continue
        if sign is Sign.PLUS:
            bound = w.inverse.act(w0m.act(inner.act(shifted))) + datum.rho
        else:
            bound = w.inverse.act(inner.act(shifted)) - datum.rho
        out.append((_split(datum, bound),))
    return tuple(out)


@lru_cache(maxsize=4096)
def _sss_m(datum: RootDatum, levi: LeviDatum, kappa: Weight, sign: Sign) -> tuple[Exclusion, ...]:
    excluded = set(_c_set(datum, levi, kappa, sign))
    return tuple(
        _proven_pair(datum, levi, w, kappa, sign)
        for w in kostant_reps(datum, levi)
        if w not in excluded
    )


@lru_cache(maxsize=4096)
def _sss_mw(
    datum: RootDatum, levi: LeviDatum, kappa: Weight, w: WeylElement, sign: Sign, form: MwForm
) -> tuple[Exclusion, ...]:
    w0m = _w0m(levi)
    nc = two_rho_nc(datum, levi)
    out: list[Exclusion] = []
    for inner in parabolic_subgroup(datum, levi):
        if inner.length == 0:
            continue
        move = w.inverse * w0m * inner if sign is Sign.PLUS else w.inverse * inner
        linear = move.act(kappa)
        if form is MwForm.LINEAR:
            first, second = linear, linear + w.inverse.act(nc)
        elif sign is Sign.PLUS:
            first, second = linear, linear + 2 * move.act(nc)
        else:
            first, second = w.inverse.act(dot_action(inner, kappa)), linear + 2 * move.act(nc)
        out.append((_split(datum, first), _split(datum, second)))
    return tuple(out)


def _kappa_for_b(datum: RootDatum, levi: LeviDatum, nu: Weight, w: WeylElement) -> Weight:
    return Weight(kappa_from_nu(datum, levi, nu, w, Sign.PLUS).coords)


def _missing(name: str) -> ConfigError:
    return ConfigError(f"this condition needs {name}", module="slope_calc", operation="slope_condition")


def build_condition(
    datum: RootDatum,
    levi: LeviDatum,
    kind: Kind | str,
    flavor: Flavor | str,
    sign: Sign | str = Sign.PLUS,
    *,
    nu: Weight | None = None,
    kappa: Weight | None = None,
    w: WeylElement | None = None,
    mw_form: MwForm | str = MwForm.DOT,
) -> SlopeCondition:
    """Compile a small slope condition into its exclusion set.

    *mw_form* only shapes the strongly small ``Mw`` and ``w`` flavors.
    """
    kind, flavor, sign, mw_form = Kind(kind), Flavor(flavor), Sign(sign), MwForm(mw_form)
    if flavor not in _ALLOWED_FLAVORS[kind]:
        raise ConfigError(
            f"no {kind.value} condition of flavor {flavor.value}",
            module="slope_calc",
            operation="slope_condition",
        )
    exclusions: tuple[Exclusion, ...]

    if flavor is Flavor.NU:
        if nu is None:
            raise _missing("nu")
        if not is_dominant(datum, nu + datum.rho):
            raise NotDominantError(
                f"{nu} + rho is not dominant", module="slope_calc", operation="slope_condition"
            )
        exclusions = _ss_nu(datum, Weight(nu.coords), sign)

    elif flavor is Flavor.M:
        if kappa is None:
            raise _missing("kappa")
        _require_m_dominant(datum, levi, kappa, "slope_condition")
        key = Weight(kappa.coords)
        exclusions = (_ss_m if kind is Kind.SS else _sss_m)(datum, levi, key, sign)

    elif flavor is Flavor.MW:
        if kappa is None or w is None:
            raise _missing("kappa and w")
        _require_kostant(levi, w, "slope_condition")
        key = Weight(kappa.coords)
        if kind is Kind.SS:
            exclusions = _ss_mw(datum, levi, key, w, sign)
        else:
            exclusions = _sss_mw(datum, levi, key, w, sign, mw_form)

    elif flavor is Flavor.B:
        if nu is None:
            raise _missing("nu")
        if not is_dominant(datum, nu):
            raise NotDominantError(
                f"{nu} is not dominant", module="slope_calc", operation="slope_condition"
            )
        inner = _ss_m if kind is Kind.SS else _sss_m
        collected: list[Exclusion] = []
        for rep in kostant_reps(datum, levi):
            collected.extend(inner(datum, levi, _kappa_for_b(datum, levi, nu, rep), sign))
        exclusions = tuple(collected)

    else:  # Flavor.W, strongly small only
        if nu is None or w is None:
            raise _missing("nu and w")
        if not is_dominant(datum, nu + datum.rho):
            raise NotDominantError(
                f"{nu} + rho is not dominant", module="slope_calc", operation="slope_condition"
            )
        _require_kostant(levi, w, "slope_condition")
        key = Weight(kappa_from_nu(datum, levi, nu, w, sign).coords)
        exclusions = _sss_m(datum, levi, key, sign) + _sss_mw(datum, levi, key, w, sign, mw_form)

    return SlopeCondition(datum, sign, exclusions)


def slope_condition(
    datum: RootDatum,
    levi: LeviDatum,
    slope: Weight,
    kind: Kind | str,
    flavor: Flavor | str,
    sign: Sign | str = Sign.PLUS,
    *,
    nu: Weight | None = None,
    kappa: Weight | None = None,
    w: WeylElement | None = None,
    mw_form: MwForm | str = MwForm.DOT,
) -> bool:
    """Evaluate ``sign, kind_flavor`` on *slope*."""
    datum.check_dim(slope)
    condition = build_condition(
        datum, levi, kind, flavor, sign, nu=nu, kappa=kappa, w=w, mw_form=mw_form
    )
    return condition(slope)


# ========== alternative characterizations ==========


def _ge(datum: RootDatum, slope: Weight, bound: Weight) -> bool:
    return leq(datum, bound, slope, Order.SPLIT)


def _coefficient_test(
    datum: RootDatum, nu: Weight, slope: Weight, simple_indices: Iterable[int]
) -> bool | None:
    """Split-coefficient form of the simple-reflection test; None unless ``slope >= -nu``."""
    coeffs = datum.split_coefficients(slope + nu)
    if coeffs is None or any(c < 0 for c in coeffs):
        return None
    caps: dict[int, Fraction] = {}
    for i in simple_indices:
        cap = pairing(nu, datum.simple_coroots[i]) + 1
        a = datum.split_index[i]
        caps[a] = min(caps.get(a, cap), cap)
    return all(coeffs[a] < cap for a, cap in caps.items())


def _moving_simple_indices(datum: RootDatum, nu: Weight) -> list[int]:
    shifted = nu + datum.rho
    return [i for i, c in enumerate(datum.simple_coroots) if pairing(shifted, c) != 0]


def ss_nu_equivalent(datum: RootDatum, nu: Weight, slope: Weight, method: str = "simple") -> bool | None:
    """``+, ss(nu)`` through the full Weyl group, simple reflections or split coefficients."""
    if method == "full":
        return slope_condition(datum, datum.levi(), slope, Kind.SS, Flavor.NU, Sign.PLUS, nu=nu)
    moving = _moving_simple_indices(datum, nu)
    if method == "simple":
        group = enumerate_group(datum)
        return not any(_ge(datum, slope, -dot_action(group.simple(i), nu)) for i in moving)
    if method == "coefficients":
        return _coefficient_test(datum, nu, slope, moving)
    raise ConfigError(f"unknown method {method!r}", module="slope_calc", operation="ss_nu_equivalent")


@dataclass(frozen=True)
class OrbitData:
    """``-kappa - rho = v(nu + rho)`` with ``nu + rho`` dominant."""

    v: WeylElement
    nu: Weight
    stabilizer: frozenset[WeylElement]


def orbit_data(datum: RootDatum, kappa: Weight) -> OrbitData:
    v, dominant = dominant_decomposition(datum, -kappa - datum.rho)
    return OrbitData(v, dominant - datum.rho, frozenset(stabilizer(datum, Weight(dominant.coords))))


@lru_cache(maxsize=4096)
def _ssnc_set(datum: RootDatum, levi: LeviDatum, kappa: Weight) -> tuple[OrbitData, frozenset[WeylElement]]:
    data = orbit_data(datum, kappa)
    products = {
        rep.inverse * c for rep in kostant_reps(datum, levi) for c in _c_set(datum, levi, kappa, Sign.PLUS)
    }
    return data, frozenset(products - data.stabilizer)


def ss_m_equivalent(
    datum: RootDatum, levi: LeviDatum, kappa: Weight, slope: Weight, method: str = "simple"
) -> bool | None:
    """``+, ss^M(kappa)`` as non-domination of ``-x . nu`` over ``x`` in ``(^MW)^{-1} C(kappa)^+ \\ W_nu``."""
    _require_m_dominant(datum, levi, kappa, "ss_m_equivalent")
    data, moving = _ssnc_set(datum, levi, Weight(kappa.coords))
    if method == "full":
        return not any(_ge(datum, slope, -dot_action(x, data.nu)) for x in moving)
    group = enumerate_group(datum)
    simple = [i for i in range(datum.rank) if group.simple(i) in moving]
    if method == "simple":
        return not any(_ge(datum, slope, -dot_action(group.simple(i), data.nu)) for i in simple)
    if method == "coefficients":
        return _coefficient_test(datum, data.nu, slope, simple)
    raise ConfigError(f"unknown method {method!r}", module="slope_calc", operation="ss_m_equivalent")


def ss_mw_equivalent(
    datum: RootDatum,
    levi: LeviDatum,
    kappa: Weight,
    w: WeylElement,
    slope: Weight,
    method: str = "simple",
) -> bool:
    """``+, ss_{M,w}(kappa)`` through conjugates ``v^{-1} w' v`` with ``v = w_{0,M} w``."""
    _require_kostant(levi, w, "ss_mw_equivalent")
    v = _w0m(levi) * w
    nu = -v.inverse.act(kappa + datum.rho) - datum.rho
    if method == "full":
        inner = [x for x in parabolic_subgroup(datum, levi) if x.length > 0]
    elif method == "simple":
        group = enumerate_group(datum)
        inner = [group.simple(i) for i in levi.simple_indices]
    else:
        raise ConfigError(f"unknown method {method!r}", module="slope_calc", operation="ss_mw_equivalent")
    return not any(_ge(datum, slope, -dot_action(v.inverse * x * v, nu)) for x in inner)


def ss_b_equivalent(datum: RootDatum, levi: LeviDatum, nu: Weight, slope: Weight) -> bool:
    """``+, ss_b(nu)`` as non-domination of ``-s_alpha . nu`` for ``alpha`` in ``Delta_b``."""
    if not is_dominant(datum, nu):
        raise NotDominantError(f"{nu} is not dominant", module="slope_calc", operation="ss_b_equivalent")
    group = enumerate_group(datum)
    return not any(
        _ge(datum, slope, -dot_action(group.simple(i), nu)) for i in levi.b_simple_indices
    )


# ========== symmetries ==========


def w0_image(datum: RootDatum, slope: Weight) -> SlopeVector:
    return SlopeVector(_w0(datum).act(slope).coords)


def dual_nu(datum: RootDatum, nu: Weight) -> Weight:
    """``-w_0 nu``."""
    return -_w0(datum).act(nu)


def dual_kappa(datum: RootDatum, levi: LeviDatum, kappa: Weight) -> Weight:
    """``-w_{0,M} kappa - 2 rho_nc``."""
    return -_w0m(levi).act(kappa) - two_rho_nc(datum, levi)


def mirror_kostant(datum: RootDatum, levi: LeviDatum, w: WeylElement) -> WeylElement:
    """``w_{0,M} w w_0``, a bijection of ``^MW`` exchanging the two length functions."""
    return _w0m(levi) * w * _w0(datum)


__all__ = [
    "OrbitData",
    "SlopeCondition",
    "build_condition",
    "c_set",
    "dual_kappa",
    "dual_nu",
    "ell_min_max",
    "is_kappa_regular",
    "kappa_from_nu",
    "mirror_kostant",
    "nu_from_kappa",
    "orbit_data",
    "slope_bound",
    "slope_condition",
    "ss_b_equivalent",
    "ss_m_equivalent",
    "ss_mw_equivalent",
    "ss_nu_equivalent",
    "w0_image",
    "w_set",
]
