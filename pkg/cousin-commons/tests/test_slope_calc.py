"""Tests for slope bounds and small slope conditions."""

from __future__ import annotations

import itertools

import pytest
from cousin.core.errors import (
    ConfigError,
    DimensionMismatchError,
    NotDominantError,
    NotKostantRepresentativeError,
)
from cousin.core.models import BoundVariant, Coweight, MwForm, Sign, Weight
from cousin.core.root_datum import pairing
from cousin.core.slope_calc import (
    build_condition,
    c_set,
    dual_kappa,
    ell_min_max,
    is_kappa_regular,
    kappa_from_nu,
    mirror_kostant,
    nu_from_kappa,
    slope_bound,
    slope_condition,
    ss_nu_equivalent,
    w0_image,
    w_set,
)
from cousin.core.weyl import enumerate_group, kostant_reps

KAPPA = Weight.of(5, 3, -8)


class TestSlopeBounds:
    """Bounds attached to Kostant representatives."""

    def test_gl2_conjectural_bound(self, gl2):
        group = enumerate_group(gl2)
        bound = slope_bound(gl2, gl2.levi(), group.identity, Weight.of(5, -5))
        assert bound == Weight.of(3, -5)
        assert pairing(bound, Coweight.of("-1/2", "-1/2")) == 1

    def test_gsp4_longest_representative(self, gsp4, gsp4_levi):
        w = enumerate_group(gsp4).element((1, 0, 1))
        assert slope_bound(gsp4, gsp4_levi, w, KAPPA) == Weight.of(-5, -3, -8)

    def test_proven_pair(self, gsp4, gsp4_levi):
        """The two proven bounds differ by a weight-independent shift."""
        low, high = slope_bound(
            gsp4, gsp4_levi, enumerate_group(gsp4).identity, KAPPA, BoundVariant.PROVEN_PAIR
        )
        assert (low, high) == (Weight.of(3, 5, -8), Weight.of(0, 2, -8))
        u2 = Coweight.of("-1/2", "-1/2", "-1/2")
        assert (pairing(low, u2), pairing(high, u2)) == (0, 3)

    def test_non_kostant_element(self, gsp4, gsp4_levi):
        with pytest.raises(NotKostantRepresentativeError):
            slope_bound(gsp4, gsp4_levi, enumerate_group(gsp4).simple(0), KAPPA)


class TestCSets:
    def test_regular_weight_has_single_element(self, gsp4, gsp4_levi):
        assert [w.name for w in c_set(gsp4, gsp4_levi, KAPPA)] == ["Id"]
        assert [w.name for w in c_set(gsp4, gsp4_levi, KAPPA, Sign.MINUS)] == ["s1s0s1"]
        assert ell_min_max(gsp4, gsp4_levi, KAPPA) == (0, 0)
        assert is_kappa_regular(gsp4, KAPPA)

    def test_mirror_and_dual_exchange_signs(self, gsp4, gsp4_levi):
        """C(kappa)^- is the mirror of C(kappa)^+ and equals C(kappa')^+."""
        (plus,) = c_set(gsp4, gsp4_levi, KAPPA)
        assert mirror_kostant(gsp4, gsp4_levi, plus).name == "s1s0s1"
        dual = dual_kappa(gsp4, gsp4_levi, KAPPA)
        assert dual == Weight.of(0, -2, 8)
        assert c_set(gsp4, gsp4_levi, dual) == c_set(gsp4, gsp4_levi, KAPPA, Sign.MINUS)

    def test_degenerate_weight_with_borel(self, gsp4):
        """With kappa + rho = 0 every Weyl element qualifies."""
        levi = gsp4.levi()
        kappa = -gsp4.rho
        assert len(c_set(gsp4, levi, kappa)) == 8
        assert len(w_set(gsp4, levi, kappa)) == 8
        assert not is_kappa_regular(gsp4, kappa)

    def test_requires_m_dominant(self, gsp4, gsp4_levi):
        with pytest.raises(NotDominantError):
            c_set(gsp4, gsp4_levi, Weight.of(3, 5, -8))


class TestWeightDictionary:
    @pytest.mark.parametrize("sign", [Sign.PLUS, Sign.MINUS])
    def test_round_trip(self, gsp4, gsp4_levi, sign):
        """kappa -> nu -> kappa is the identity for every representative."""
        for w in kostant_reps(gsp4, gsp4_levi):
            for kappa in (KAPPA, Weight.of(2, 0, -2), Weight.of(-1, -1, 2)):
                nu = nu_from_kappa(gsp4, gsp4_levi, kappa, w, sign)
                assert kappa_from_nu(gsp4, gsp4_levi, nu, w, sign) == kappa


class TestSmallSlopeConditions:
    @pytest.mark.parametrize("k", [-1, 0, 3])
    @pytest.mark.parametrize("slope", range(-6, 7))
    def test_a1_ss_nu(self, a1, k, slope):
        """For A1, +ss(k) fails exactly when the slope reaches k + 2."""
        result = slope_condition(a1, a1.levi(), Weight.of(slope), "ss", "nu", "+", nu=Weight.of(k))
        expected = True if k == -1 else not slope >= k + 2
        assert result is expected

    @pytest.mark.parametrize("slope", range(-6, 7))
    def test_a1_minus_mirrors_plus(self, a1, slope):
        nu = Weight.of(1)
        minus = slope_condition(a1, a1.levi(), Weight.of(slope), "ss", "nu", "-", nu=nu)
        plus = slope_condition(a1, a1.levi(), w0_image(a1, Weight.of(slope)), "ss", "nu", "+", nu=nu)
        assert minus is plus is (not slope <= -3)

    def test_gsp4_ss_m(self, gsp4, gsp4_levi):
        condition = build_condition(gsp4, gsp4_levi, "ss", "M", "+", kappa=KAPPA)
        bounds = sorted(str(bound) for (bound,) in condition.exclusions)
        assert bounds == ["(-2,2,-8)", "(-5,-3,-8)", "(3,-3,-8)"]
        assert condition(Weight.of(-3, 3, -8))
        assert condition.violated_by(Weight.of(3, -3, -8)) == (Weight.of(-2, 2, -8),)

    def test_sss_w_pairs_bounds(self, gsp4, gsp4_levi):
        condition = build_condition(
            gsp4, gsp4_levi, "sss", "w", nu=Weight.zero(3), w=enumerate_group(gsp4).identity
        )
        assert condition.exclusions
        assert all(len(exclusion) == 2 for exclusion in condition.exclusions)

    def test_simple_reflections_suffice(self, a2):
        """The simple-reflection test agrees with the full Weyl group test."""
        for nu in (Weight.of(0, 0), Weight.of(1, 0), Weight.of(-1, 2)):
            for coords in itertools.product(range(-3, 4), repeat=2):
                slope = Weight.of(*coords)
                full = ss_nu_equivalent(a2, nu, slope, "full")
                assert ss_nu_equivalent(a2, nu, slope, "simple") == full
                by_coefficients = ss_nu_equivalent(a2, nu, slope, "coefficients")
                assert by_coefficients is None or by_coefficients == full

    def test_combining_conditions(self, a1):
        first = build_condition(a1, a1.levi(), "ss", "nu", "+", nu=Weight.of(0))
        second = build_condition(a1, a1.levi(), "ss", "nu", "+", nu=Weight.of(2))
        assert len((first & second).exclusions) == 2
        with pytest.raises(ConfigError):
            _ = first & build_condition(a1, a1.levi(), "ss", "nu", "-", nu=Weight.of(0))


class TestStronglySmallConditions:
    """Pinned exclusions of the strongly small conditions on the Siegel Levi."""

    @pytest.mark.parametrize(
        "word, sign, expected",
        [
            ((), "+", ((5, 3, -8), (-1, -3, -8))),
            ((), "-", ((2, 6, -8), (-3, -1, -8))),
            ((1,), "+", ((-5, 3, -8), (1, -3, -8))),
            ((1,), "-", ((-2, 6, -8), (3, -1, -8))),
        ],
    )
    def test_mw_dot_form(self, gsp4, gsp4_levi, word, sign, expected):
        """The ``-`` side starts from the dot image; the shift is doubled."""
        w = enumerate_group(gsp4).element(word)
        condition = build_condition(gsp4, gsp4_levi, "sss", "Mw", sign, kappa=KAPPA, w=w)
        assert condition.exclusions == (tuple(Weight.of(*b) for b in expected),)

    @pytest.mark.parametrize(
        "word, sign, expected",
        [
            ((), "+", ((5, 3, -8), (2, 0, -8))),
            ((), "-", ((3, 5, -8), (0, 2, -8))),
            ((1,), "+", ((-5, 3, -8), (-2, 0, -8))),
        ],
    )
    def test_mw_linear_form(self, gsp4, gsp4_levi, word, sign, expected):
        w = enumerate_group(gsp4).element(word)
        condition = build_condition(
            gsp4, gsp4_levi, "sss", "Mw", sign, kappa=KAPPA, w=w, mw_form=MwForm.LINEAR
        )
        assert condition.exclusions == (tuple(Weight.of(*b) for b in expected),)

    def test_only_linear_form_is_exchanged_by_w0(self, gsp4, gsp4_levi):
        for w in kostant_reps(gsp4, gsp4_levi):
            mirrored = mirror_kostant(gsp4, gsp4_levi, w)
            for form, first_matches in ((MwForm.LINEAR, True), (MwForm.DOT, False)):
                minus = build_condition(
                    gsp4, gsp4_levi, "sss", "Mw", "-", kappa=KAPPA, w=w, mw_form=form
                )
                plus = build_condition(
                    gsp4, gsp4_levi, "sss", "Mw", "+", kappa=KAPPA, w=mirrored, mw_form=form
                )
                flipped = [tuple(w0_image(gsp4, b) for b in pair) for pair in minus.exclusions]
                assert [pair[1] for pair in flipped] == [pair[1] for pair in plus.exclusions]
                firsts_agree = [pair[0] for pair in flipped] == [pair[0] for pair in plus.exclusions]
                assert firsts_agree is first_matches

    def test_strongly_small_is_stronger_than_small(self, gsp4, gsp4_levi):
        """Both proven bounds sit below the conjectural one, so sss^M implies ss^M."""
        slope = Weight.of(0, 2, -8)
        assert slope_condition(gsp4, gsp4_levi, slope, "ss", "M", "+", kappa=KAPPA)
        strong = build_condition(gsp4, gsp4_levi, "sss", "M", "+", kappa=KAPPA)
        assert strong.violated_by(slope) == (Weight.of(-3, 5, -8), Weight.of(0, 2, -8))

        for coords in itertools.product(range(-6, 7), repeat=2):
            candidate = Weight.of(*coords, -8)
            if strong(candidate):
                assert slope_condition(gsp4, gsp4_levi, candidate, "ss", "M", "+", kappa=KAPPA)

    def test_sss_w_combines_m_and_mw(self, gsp4, gsp4_levi):
        identity = enumerate_group(gsp4).identity
        nu = Weight.zero(3)
        kappa = kappa_from_nu(gsp4, gsp4_levi, nu, identity, Sign.PLUS)
        combined = build_condition(gsp4, gsp4_levi, "sss", "w", nu=nu, w=identity)
        parts = build_condition(gsp4, gsp4_levi, "sss", "M", kappa=kappa) & build_condition(
            gsp4, gsp4_levi, "sss", "Mw", kappa=kappa, w=identity
        )
        assert combined.exclusions == parts.exclusions


class TestConditionErrors:
    def test_flavor_not_allowed(self, gsp4, gsp4_levi):
        with pytest.raises(ConfigError, match="no ss condition"):
            build_condition(gsp4, gsp4_levi, "ss", "w", nu=Weight.zero(3))

    def test_missing_parameter(self, gsp4, gsp4_levi):
        with pytest.raises(ConfigError, match="kappa"):
            build_condition(gsp4, gsp4_levi, "ss", "M")

    def test_preconditions(self, a1, gsp4, gsp4_levi):
        with pytest.raises(NotDominantError):
            build_condition(a1, a1.levi(), "ss", "nu", nu=Weight.of(-3))
        with pytest.raises(NotDominantError):
            build_condition(gsp4, gsp4_levi, "ss", "M", kappa=Weight.of(3, 5, -8))
        with pytest.raises(DimensionMismatchError):
            slope_condition(gsp4, gsp4_levi, Weight.of(0, 0), "ss", "M", kappa=KAPPA)
