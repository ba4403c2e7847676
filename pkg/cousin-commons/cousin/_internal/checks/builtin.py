"""Property suites shipped with the toolkit.

Every suite compares a computed answer against an independent brute-force
route over a finite grid; see ``grids`` for the sweep ranges.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Any

import sympy

from ...core.char_ring import kostant_partition_count, verma_character, weyl_character
from ...core.cousin_complex import big_weight_filter, bw_amplitude, bwb, flag_cousin
from ...core.models import Flavor, Kind, MwForm, Sign, SlopeVector, Weight
from ...core.newton import finite_slope_dimension, h_slope_dimension, is_slope_leq_h, newton_polygon
from ...core.root_datum import LeviDatum, RootDatum, is_dominant, leq
from ...core.slope_calc import (
    build_condition,
    c_set,
    dual_kappa,
    dual_nu,
    ell_min_max,
    is_kappa_regular,
    mirror_kostant,
    nu_from_kappa,
    slope_bound,
    slope_condition,
    ss_b_equivalent,
    ss_m_equivalent,
    ss_mw_equivalent,
    ss_nu_equivalent,
    w0_image,
    w_set,
)
from ...core.weyl import (
    WeylElement,
    bruhat_leq,
    cell_dimension,
    dot_action,
    ell_pm,
    enumerate_group,
    inversion_set,
    is_kostant,
    kostant_reps,
    reduced_words,
)
from ..hooks.specs import hookimpl
from .grids import all_levis, dominant_grid, m_dominant_grid, shifted_dominant_grid, slope_grid, weight_grid
from .registry import CheckContext, CheckRegistry, PropertySuite

logger = logging.getLogger("Cousin")

SLOPE_PRESETS = ("A1", "product:A1xA1", "A2", "C2")
GROUP_PRESETS = ("A2", "C2")
CHARACTER_PRESETS = ("A1", "A2", "C2")
CHARACTER_DEPTH = 6
NEWTON_PRIMES = (2, 3, 5)
NEWTON_POLYNOMIALS = 200
NEWTON_MATRICES = 40
NEWTON_MAX_SIZE = 8

# the sss_(M,w) form exchanged by w0 and duality
LINEAR: dict[str, Any] = {"mw_form": MwForm.LINEAR}


# ========== Weyl combinatorics ==========


def _bruhat_by_reflections(elements: list[WeylElement], reflections: list[WeylElement]) -> dict[WeylElement, set[WeylElement]]:
    """Lower Bruhat intervals from chains of length-decreasing reflections."""
    below: dict[WeylElement, set[WeylElement]] = {}
    for v in sorted(elements, key=lambda e: e.length):
        lower = {v}
        for t in reflections:
            u = t * v
            if u.length < v.length:
                lower |= below[u]
        below[v] = lower
    return below


def check_weyl_lemmas(datum: RootDatum, ctx: CheckContext) -> None:
    group = enumerate_group(datum)
    elements = list(group)
    below = _bruhat_by_reflections(elements, [group.reflection(r) for r in datum.positive_roots])

    for u in elements:
        for v in elements:
            ctx.expect(
                bruhat_leq(u, v) == (u in below[v]),
                lambda u=u, v=v: f"bruhat order disagrees with reflection chains at {u.name} <= {v.name}",
            )

    for w in elements:
        ctx.expect(len(inversion_set(w)) == w.length, lambda w=w: f"inversions of {w.name} != length")

    comparable = [(u, v) for u in elements for v in elements if u in below[v]]
    for nu in shifted_dominant_grid(datum, ctx.radius):
        for u, v in comparable:
            ctx.expect(
                leq(datum, dot_action(v, nu), dot_action(u, nu)),
                lambda u=u, v=v, nu=nu: f"{v.name}.{nu} not below {u.name}.{nu}",
            )

    for levi in all_levis(datum):
        reps = kostant_reps(datum, levi)
        theta = sorted(levi.theta)
        for w in reps:
            ctx.expect(cell_dimension(w, levi) == w.length, lambda w=w: f"cell dimension of {w.name}")
            mirrored = mirror_kostant(datum, levi, w)
            ctx.expect(
                is_kostant(levi, mirrored)
                and ell_pm(mirrored, levi, Sign.PLUS) == ell_pm(w, levi, Sign.MINUS),
                lambda w=w, theta=theta: f"length duality fails at {w.name} for levi {theta}",
            )

            for w_other in reps:
                for word in reduced_words(w.inverse * w_other):
                    current = w
                    for i in word:
                        current = current * group.simple(i)
                        ctx.expect(
                            is_kostant(levi, current),
                            lambda w=w, w_other=w_other, word=word, theta=theta: (
                                f"gallery from {w.name} to {w_other.name} along {word} leaves ^MW for levi {theta}"
                            ),
                        )

            for alpha in range(datum.rank):
                product = w * group.simple(alpha)
                ctx.expect(
                    is_kostant(levi, product)
                    or any(group.simple(beta) * w == product for beta in levi.simple_indices),
                    lambda w=w, alpha=alpha, theta=theta: (
                        f"{w.name} s{alpha} is neither in ^MW nor s_beta {w.name} (levi {theta})"
                    ),
                )


# ========== small slope conditions ==========


def check_ss_equivalence(datum: RootDatum, ctx: CheckContext) -> None:
    slopes = slope_grid(datum, ctx.radius)
    for nu in shifted_dominant_grid(datum, ctx.radius):
        for slope in slopes:
            full = ss_nu_equivalent(datum, nu, slope, "full")
            ctx.expect(
                ss_nu_equivalent(datum, nu, slope, "simple") == full,
                lambda nu=nu, slope=slope: f"ss({nu}) simple test disagrees at {slope}",
            )
            coefficients = ss_nu_equivalent(datum, nu, slope, "coefficients")
            if coefficients is not None:
                ctx.expect(
                    coefficients == full,
                    lambda nu=nu, slope=slope: f"ss({nu}) coefficient test disagrees at {slope}",
                )


def check_ssnc_equivalence(datum: RootDatum, ctx: CheckContext) -> None:
    slopes = slope_grid(datum, ctx.radius)
    for levi in all_levis(datum):
        for kappa in m_dominant_grid(datum, levi, ctx.radius):
            for slope in slopes:
                direct = slope_condition(datum, levi, slope, Kind.SS, Flavor.M, Sign.PLUS, kappa=kappa)
                for method in ("full", "simple", "coefficients"):
                    value = ss_m_equivalent(datum, levi, kappa, slope, method)
                    if value is None:
                        continue
                    ctx.expect(
                        value == direct,
                        lambda kappa=kappa, slope=slope, method=method, levi=levi: (
                            f"ss^M({kappa}) {method} test disagrees at {slope} (levi {sorted(levi.theta)})"
                        ),
                    )


def check_ssc_equivalence(datum: RootDatum, ctx: CheckContext) -> None:
    slopes = slope_grid(datum, ctx.radius)
    for levi in all_levis(datum):
        reps = kostant_reps(datum, levi)
        for kappa in m_dominant_grid(datum, levi, ctx.radius):
            for w in reps:
                for slope in slopes:
                    direct = slope_condition(
                        datum, levi, slope, Kind.SS, Flavor.MW, Sign.PLUS, kappa=kappa, w=w
                    )
                    for method in ("full", "simple"):
                        ctx.expect(
                            ss_mw_equivalent(datum, levi, kappa, w, slope, method) == direct,
                            lambda kappa=kappa, w=w, slope=slope, method=method: (
                                f"ss_(M,{w.name})({kappa}) {method} test disagrees at {slope}"
                            ),
                        )


def check_small_slope_relation(datum: RootDatum, ctx: CheckContext) -> None:
    slopes = slope_grid(datum, ctx.radius)
    for levi in all_levis(datum):
        for kappa in m_dominant_grid(datum, levi, ctx.radius):
            for sign in (Sign.PLUS, Sign.MINUS):
                strong = build_condition(datum, levi, Kind.SSS, Flavor.M, sign, kappa=kappa)
                weak = build_condition(datum, levi, Kind.SS, Flavor.M, sign, kappa=kappa)
                for slope in slopes:
                    ctx.expect(
                        not strong(slope) or weak(slope),
                        lambda kappa=kappa, sign=sign, slope=slope: (
                            f"{sign.value}sss^M({kappa}) holds at {slope} but ss^M does not"
                        ),
                    )
            for w in c_set(datum, levi, kappa, Sign.PLUS):
                nu = nu_from_kappa(datum, levi, kappa, w, Sign.PLUS)
                for slope in slopes:
                    whole = slope_condition(datum, levi, slope, Kind.SS, Flavor.NU, Sign.PLUS, nu=nu)
                    parts = slope_condition(
                        datum, levi, slope, Kind.SS, Flavor.M, Sign.PLUS, kappa=kappa
                    ) and slope_condition(
                        datum, levi, slope, Kind.SS, Flavor.MW, Sign.PLUS, kappa=kappa, w=w
                    )
                    ctx.expect(
                        whole == parts,
                        lambda kappa=kappa, w=w, slope=slope: (
                            f"ss(nu) splits badly for kappa={kappa}, w={w.name} at {slope}"
                        ),
                    )


def check_ssb_condition(datum: RootDatum, ctx: CheckContext) -> None:
    slopes = slope_grid(datum, ctx.radius)
    for levi in all_levis(datum):
        for nu in dominant_grid(datum, ctx.radius):
            for slope in slopes:
                direct = slope_condition(datum, levi, slope, Kind.SS, Flavor.B, Sign.PLUS, nu=nu)
                ctx.expect(
                    ss_b_equivalent(datum, levi, nu, slope) == direct,
                    lambda nu=nu, slope=slope, levi=levi: (
                        f"ss_b({nu}) disagrees at {slope} (levi {sorted(levi.theta)})"
                    ),
                )


def _expect_symmetric(
    ctx: CheckContext, label: str, slope: SlopeVector, minus: bool, flipped: bool, dual: bool
) -> None:
    ctx.expect(minus == flipped, lambda: f"{label}: -cond({slope}) != +cond(w0 {slope})")
    ctx.expect(minus == dual, lambda: f"{label}: -cond({slope}) != +dual cond(-{slope})")


def check_plusminus_symmetry(datum: RootDatum, ctx: CheckContext) -> None:
    slopes = slope_grid(datum, ctx.radius)
    images = {slope: w0_image(datum, slope) for slope in slopes}

    def cond(levi: LeviDatum, slope: Weight, kind: Kind, flavor: Flavor, sign: Sign, **kw: Any) -> bool:
        return slope_condition(datum, levi, slope, kind, flavor, sign, **kw)

    torus = datum.levi()
    for nu in shifted_dominant_grid(datum, ctx.radius):
        for slope in slopes:
            _expect_symmetric(
                ctx,
                f"ss({nu})",
                slope,
                cond(torus, slope, Kind.SS, Flavor.NU, Sign.MINUS, nu=nu),
                cond(torus, images[slope], Kind.SS, Flavor.NU, Sign.PLUS, nu=nu),
                cond(torus, -slope, Kind.SS, Flavor.NU, Sign.PLUS, nu=dual_nu(datum, nu)),
            )

    for levi in all_levis(datum):
        reps = kostant_reps(datum, levi)
        for nu in dominant_grid(datum, ctx.radius):
            for slope in slopes:
                for kind in (Kind.SS, Kind.SSS):
                    _expect_symmetric(
                        ctx,
                        f"{kind.value}_b({nu})",
                        slope,
                        cond(levi, slope, kind, Flavor.B, Sign.MINUS, nu=nu),
                        cond(levi, images[slope], kind, Flavor.B, Sign.PLUS, nu=nu),
                        cond(levi, -slope, kind, Flavor.B, Sign.PLUS, nu=dual_nu(datum, nu)),
                    )
        for nu in shifted_dominant_grid(datum, ctx.radius):
            for w in reps:
                mirrored = mirror_kostant(datum, levi, w)
                for slope in slopes:
                    minus = cond(levi, slope, Kind.SSS, Flavor.W, Sign.MINUS, nu=nu, w=w, **LINEAR)
                    plus = cond(levi, images[slope], Kind.SSS, Flavor.W, Sign.PLUS, nu=nu, w=mirrored, **LINEAR)
                    ctx.expect(
                        minus == plus,
                        lambda nu=nu, w=w, slope=slope: f"sss_{w.name}({nu}): -cond({slope}) != +cond(w0 {slope})",
                    )
        for kappa in m_dominant_grid(datum, levi, ctx.radius):
            dual = dual_kappa(datum, levi, kappa)
            for slope in slopes:
                for kind in (Kind.SS, Kind.SSS):
                    _expect_symmetric(
                        ctx,
                        f"{kind.value}^M({kappa})",
                        slope,
                        cond(levi, slope, kind, Flavor.M, Sign.MINUS, kappa=kappa),
                        cond(levi, images[slope], kind, Flavor.M, Sign.PLUS, kappa=kappa),
                        cond(levi, -slope, kind, Flavor.M, Sign.PLUS, kappa=dual),
                    )
                for w in reps:
                    mirrored = mirror_kostant(datum, levi, w)
                    for kind in (Kind.SS, Kind.SSS):
                        form = LINEAR if kind is Kind.SSS else {}
                        _expect_symmetric(
                            ctx,
                            f"{kind.value}_(M,{w.name})({kappa})",
                            slope,
                            cond(levi, slope, kind, Flavor.MW, Sign.MINUS, kappa=kappa, w=w, **form),
                            cond(levi, images[slope], kind, Flavor.MW, Sign.PLUS, kappa=kappa, w=mirrored, **form),
                            cond(levi, -slope, kind, Flavor.MW, Sign.PLUS, kappa=dual, w=w, **form),
                        )


def check_c_set_structure(datum: RootDatum, ctx: CheckContext) -> None:
    for levi in all_levis(datum):
        reps = set(kostant_reps(datum, levi))
        for kappa in m_dominant_grid(datum, levi, ctx.radius):
            dual = dual_kappa(datum, levi, kappa)
            plus = c_set(datum, levi, kappa, Sign.PLUS)
            minus = c_set(datum, levi, kappa, Sign.MINUS)
            for sign, members in ((Sign.PLUS, plus), (Sign.MINUS, minus)):
                torsor = {s * members[0] for s in w_set(datum, levi, kappa, sign)}
                ctx.expect(torsor == set(members), lambda kappa=kappa, sign=sign: f"C{sign.value}({kappa}) is not a torsor")
                ctx.expect(set(members) <= reps, lambda kappa=kappa, sign=sign: f"C{sign.value}({kappa}) leaves ^MW")
            ctx.expect(
                {mirror_kostant(datum, levi, c) for c in minus} == set(plus),
                lambda kappa=kappa: f"C-({kappa}) does not mirror onto C+",
            )
            ctx.expect(
                set(plus) == set(c_set(datum, levi, dual, Sign.MINUS))
                and set(minus) == set(c_set(datum, levi, dual, Sign.PLUS)),
                lambda kappa=kappa: f"dual weight of {kappa} does not swap C+ and C-",
            )
            ctx.expect(
                (len(plus) == 1) == is_kappa_regular(datum, kappa),
                lambda kappa=kappa: f"regularity of {kappa} does not match |C+|",
            )
            low, high = ell_min_max(datum, levi, kappa)
            minus_lengths = [ell_pm(c, levi, Sign.MINUS) for c in minus]
            ctx.expect(
                (low, high) == (min(minus_lengths), max(minus_lengths)),
                lambda kappa=kappa: f"l_min/l_max of {kappa} disagree between C+ and C-",
            )
            for w in reps:
                conjectural = slope_bound(datum, levi, w, kappa, "conjectural", Sign.PLUS)
                pair = slope_bound(datum, levi, w, kappa, "proven_pair", Sign.PLUS)
                ctx.expect(
                    all(leq(datum, bound, conjectural) for bound in pair),  # type: ignore[union-attr, arg-type]
                    lambda kappa=kappa, w=w: f"proven bounds of {w.name} exceed the conjectural one at {kappa}",
                )


# ========== characters and cohomology ==========


@lru_cache(maxsize=None)
def _brute_partitions(target: tuple[int, ...], roots: tuple[tuple[int, ...], ...]) -> int:
    if not any(target):
        return 1
    if not roots:
        return 0
    first, rest = roots[0], roots[1:]
    total = 0
    current = target
    while all(c >= 0 for c in current):
        total += _brute_partitions(current, rest)
        current = tuple(c - r for c, r in zip(current, first))
    return total


def check_verma_oracle(datum: RootDatum, ctx: CheckContext) -> None:
    roots = tuple(datum.positive_root_coefficients)
    for highest in weight_grid(datum, min(ctx.radius, 1)):
        character = verma_character(datum, highest, CHARACTER_DEPTH)
        for weight, count in character.items():
            coeffs = datum.simple_coefficients(highest - weight)
            assert coeffs is not None
            offset = tuple(int(c) for c in coeffs)
            ctx.expect(
                count == _brute_partitions(offset, roots),
                lambda highest=highest, offset=offset: f"verma({highest}) miscounts offset {offset}",
            )
    for mu in weight_grid(datum, ctx.radius):
        coeffs = datum.simple_coefficients(mu)
        if coeffs is None or any(c < 0 or c.denominator != 1 for c in coeffs) or sum(coeffs) > CHARACTER_DEPTH:
            continue
        ctx.expect(
            kostant_partition_count(datum, mu) == _brute_partitions(tuple(int(c) for c in coeffs), roots),
            lambda mu=mu: f"partition count of {mu}",
        )


def _full_depth(datum: RootDatum, highest: Weight) -> int:
    lowest = enumerate_group(datum).longest.act(highest)
    return int(datum.height(highest - lowest))


def check_bwb_oracle(datum: RootDatum, ctx: CheckContext) -> None:
    group = enumerate_group(datum)
    order = len(group)
    for kappa in weight_grid(datum, ctx.radius):
        orbit = {dot_action(w, kappa) for w in group}
        regular = len(orbit) == order
        result = bwb(datum, kappa)
        ctx.expect((result is None) == (not regular), lambda kappa=kappa: f"bwb({kappa}) regularity")
        low, high = bw_amplitude(datum, kappa)
        if result is None:
            ctx.expect(low < high, lambda kappa=kappa: f"singular {kappa} has a one-point amplitude")
            continue
        ctx.expect(
            is_dominant(datum, result.weight) and dot_action(result.w, kappa) == result.weight,
            lambda kappa=kappa: f"bwb({kappa}) weight is not the dominant dot image",
        )
        ctx.expect(result.degree == result.w.length, lambda kappa=kappa: f"bwb({kappa}) degree")
        ctx.expect((low, high) == (result.degree, result.degree), lambda kappa=kappa: f"amplitude of {kappa}")
        full = weyl_character(datum, result.weight, _full_depth(datum, result.weight))
        ctx.expect(
            full.total_mass == result.dimension,
            lambda kappa=kappa: f"bwb({kappa}) dimension disagrees with the character",
        )


def check_cousin_euler(datum: RootDatum, ctx: CheckContext) -> None:
    for kappa in weight_grid(datum, ctx.radius):
        complex_ = flag_cousin(datum, kappa, CHARACTER_DEPTH)
        euler = complex_.euler_character()
        result = bwb(datum, kappa)
        if result is None:
            ctx.expect(euler.is_zero(), lambda kappa=kappa: f"singular {kappa} has nonzero Euler character")
        else:
            expected = weyl_character(datum, result.weight, CHARACTER_DEPTH)
            if result.degree % 2:
                expected = -expected
            ctx.expect(euler == expected, lambda kappa=kappa: f"Euler character of {kappa} is not the BWB character")
        top = complex_.top
        assert top is not None
        for terms in complex_.terms.values():
            for term in terms:
                if term.label == top or term.character is None:
                    continue
                ctx.expect(
                    big_weight_filter(term.character, top).is_zero(),
                    lambda kappa=kappa, term=term: f"big weights survive in the {term.w.name} term for {kappa}",
                )


# ========== Newton polygons ==========


def _unit(rng, p: int) -> int:  # type: ignore[no-untyped-def]
    while True:
        u = rng.randint(1, 3 * p)
        if u % p:
            return u if rng.random() < 0.5 else -u


def _expand(roots: list[Fraction], lead: Fraction) -> list[Fraction]:
    coeffs = [lead]
    for r in roots:
        shifted = [Fraction(0)] + coeffs
        scaled = [-r * c for c in coeffs] + [Fraction(0)]
        coeffs = [a + b for a, b in zip(shifted, scaled)]
    return coeffs


def _multiply(left: list[Fraction], right: list[Fraction]) -> list[Fraction]:
    product = [Fraction(0)] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        for j, b in enumerate(right):
            product[i + j] += a * b
    return product


def check_newton_random(datum: RootDatum, ctx: CheckContext) -> None:
    rng = ctx.rng()
    for _ in range(NEWTON_POLYNOMIALS):
        p = rng.choice(NEWTON_PRIMES)
        valuations = [rng.randint(-4, 4) for _ in range(rng.randint(1, 6))]
        roots = [_unit(rng, p) * Fraction(p) ** a for a in valuations]
        cut = rng.randint(0, len(roots))
        left = _expand(roots[:cut], Fraction(_unit(rng, p)))
        right = _expand(roots[cut:], Fraction(_unit(rng, p)))
        poly = _multiply(left, right)
        ctx.expect(
            newton_polygon(poly, p).root_valuations() == sorted(Fraction(a) for a in valuations),
            lambda valuations=valuations, p=p: f"root valuations {valuations} over p={p}",
        )
        ctx.expect(
            sorted(newton_polygon(poly, p).slope_multiset())
            == sorted(newton_polygon(left, p).slope_multiset() + newton_polygon(right, p).slope_multiset()),
            lambda valuations=valuations, cut=cut: f"slopes of a product split at {cut} for {valuations}",
        )
        h = Fraction(rng.randint(-10, 10), 2)
        ctx.expect(
            is_slope_leq_h(poly, h, p) == all(a >= -h for a in valuations),
            lambda valuations=valuations, h=h: f"slope <= {h} for valuations {valuations}",
        )

    for _ in range(NEWTON_MATRICES):
        p = rng.choice(NEWTON_PRIMES)
        size = rng.randint(1, NEWTON_MAX_SIZE)
        eigen_valuations: list[int | None] = [
            None if rng.random() < 0.15 else rng.randint(-4, 4) for _ in range(size)
        ]
        diagonal = sympy.diag(
            *[0 if a is None else _unit(rng, p) * sympy.Rational(p) ** a for a in eigen_valuations]
        )
        basis = sympy.Matrix(
            size, size, lambda i, j: 1 if i == j else (rng.randint(-2, 2) if j > i else 0)
        )
        conjugated = basis * diagonal * basis.inv()
        matrix = [
            [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in conjugated.row(i)]
            for i in range(size)
        ]
        finite = [a for a in eigen_valuations if a is not None]
        ctx.expect(
            finite_slope_dimension(matrix, p) == len(finite),
            lambda finite=finite: f"finite slope dimension for {finite}",
        )
        dimensions = [h_slope_dimension(matrix, h, p) for h in range(-5, 6)]
        for h, dimension in zip(range(-5, 6), dimensions):
            ctx.expect(
                dimension == sum(1 for a in finite if a <= h),
                lambda finite=finite, h=h: f"{h}-slope dimension for {finite}",
            )
        ctx.expect(
            dimensions == sorted(dimensions),
            lambda finite=finite: f"slope dimensions decrease in h for {finite}",
        )


class BuiltinChecks:
    """Plugin registering the property suites shipped with the toolkit."""

    @hookimpl
    def cousin_register_checks(self, registry: CheckRegistry) -> None:
        suites = [
            PropertySuite("weyl-lemmas", "Bruhat order, galleries and length functions", GROUP_PRESETS, check_weyl_lemmas),
            PropertySuite("ss-equiv", "three forms of the small slope condition", SLOPE_PRESETS, check_ss_equivalence),
            PropertySuite("ssnc-equiv", "forms of the non-compact condition", SLOPE_PRESETS, check_ssnc_equivalence),
            PropertySuite("ssc-equiv", "forms of the compact condition", SLOPE_PRESETS, check_ssc_equivalence),
            PropertySuite("small-slope-rel", "ss(nu) splits into ss^M and ss_(M,w)", SLOPE_PRESETS, check_small_slope_relation),
            PropertySuite("ssb-cond", "ss_b as a simple reflection test", SLOPE_PRESETS, check_ssb_condition),
            PropertySuite("plusminus-symmetry", "w0 and duality exchange the signs", SLOPE_PRESETS, check_plusminus_symmetry),
            PropertySuite("c-set-structure", "C(kappa) torsors, mirrors and bound ordering", SLOPE_PRESETS, check_c_set_structure),
            PropertySuite("verma-oracle", "Verma characters against partition counts", CHARACTER_PRESETS, check_verma_oracle),
            PropertySuite("bwb-oracle", "Borel-Weil-Bott against dot orbits", CHARACTER_PRESETS, check_bwb_oracle),
            PropertySuite("cousin-euler", "flag Cousin Euler characters", CHARACTER_PRESETS, check_cousin_euler),
            PropertySuite("newton-random", "seeded Newton polygon sweeps", ("A1",), check_newton_random),
        ]
        for suite in suites:
            registry.register(suite)
        logger.debug("Registered %d builtin property suites", len(suites))


__all__ = ["BuiltinChecks"]
