"""Tests for the property-suite registry, grids and builtin suites."""

from __future__ import annotations

import pytest
from cousin._internal.checks import (
    CheckContext,
    CheckRegistry,
    PropertySuite,
    check_registry,
    run_suite,
    run_suites,
)
from cousin._internal.checks.grids import (
    all_levis,
    m_dominant_grid,
    proper_levis,
    shifted_dominant_grid,
    slope_grid,
    weight_grid,
)
from cousin._internal.checks.registry import MAX_REPORTED_FAILURES
from cousin.core.errors import ConfigError
from cousin.core.models import Weight

BUILTIN_SUITES = [
    "weyl-lemmas",
    "ss-equiv",
    "ssnc-equiv",
    "ssc-equiv",
    "small-slope-rel",
    "ssb-cond",
    "plusminus-symmetry",
    "c-set-structure",
    "verma-oracle",
    "bwb-oracle",
    "cousin-euler",
    "newton-random",
]


class TestGrids:
    def test_central_coordinates_stay_fixed(self, gsp4):
        weights = list(weight_grid(gsp4, 1))
        assert len(weights) == 9
        assert all(w[2] == 0 for w in weights)

    def test_sizes(self, a1, a2):
        assert len(list(weight_grid(a1, 2))) == 5
        assert shifted_dominant_grid(a1, 2) == [Weight.of(k) for k in (-1, 0, 1, 2)]
        assert len(slope_grid(a2, 1)) == 9

    def test_levis(self, a2):
        assert len(all_levis(a2)) == 4
        assert [sorted(levi.theta) for levi in proper_levis(a2)] == [[], [0], [1]]

    def test_m_dominant_grid(self, gsp4, gsp4_levi):
        grid = m_dominant_grid(gsp4, gsp4_levi, 1)
        assert all(w[0] >= w[1] for w in grid)
        assert len(grid) == 6


class TestRegistry:
    def test_builtin_suites(self):
        assert check_registry().names() == BUILTIN_SUITES

    def test_duplicate_names(self):
        registry = CheckRegistry()
        suite = PropertySuite("dup", "", ("A1",), lambda datum, context: None)
        registry.register(suite)
        with pytest.raises(ConfigError, match="already registered"):
            registry.register(suite)

    def test_unknown_suite(self):
        with pytest.raises(ConfigError, match="unknown suite"):
            check_registry().get("no-such-suite")


class TestContext:
    def test_failures_are_capped(self):
        """Every failure is counted but only the first few are kept."""
        context = CheckContext(preset="A1", radius=1, seed=0)
        for i in range(MAX_REPORTED_FAILURES + 5):
            context.expect(False, lambda i=i: f"case {i}")
        context.expect(True, "never rendered")

        assert context.cases == MAX_REPORTED_FAILURES + 6
        assert context.failed == MAX_REPORTED_FAILURES + 5
        assert len(context.failures) == MAX_REPORTED_FAILURES
        assert context.failures[0] == "case 0"

    def test_rng_is_seeded(self):
        context = CheckContext(preset="A1", radius=1, seed=7)
        assert context.rng().random() == context.rng().random()


def test_failing_suite_reports_failures():
    def broken(datum, context):
        context.expect(datum.rank == 0, f"rank of {context.preset} is {datum.rank}")

    registry = CheckRegistry()
    registry.register(PropertySuite("broken", "", ("A2",), broken))

    result = run_suite("broken", "A2", registry=registry)

    assert not result.passed
    assert result.to_dict() == {
        "suite": "broken",
        "preset": "A2",
        "passed": False,
        "cases": 1,
        "failed": 1,
        "failures": ["rank of A2 is 2"],
    }


@pytest.mark.parametrize(
    "suite, preset",
    [
        ("weyl-lemmas", "A2"),
        ("weyl-lemmas", "C2"),
        ("ss-equiv", "A1"),
        ("ss-equiv", "C2"),
        ("ssnc-equiv", "A2"),
        ("ssc-equiv", "C2"),
        ("small-slope-rel", "C2"),
        ("ssb-cond", "product:A1xA1"),
        ("plusminus-symmetry", "product:A1xA1"),
        ("plusminus-symmetry", "C2"),
        ("c-set-structure", "C2"),
        ("verma-oracle", "A2"),
        ("bwb-oracle", "C2"),
        ("cousin-euler", "A2"),
        ("newton-random", "A1"),
    ],
)
def test_builtin_suite_passes(suite, preset):
    result = run_suite(suite, preset, radius=1, seed=3)
    assert result.passed, result.failures
    assert result.cases > 0


def test_run_suites_restricts_presets():
    results = run_suites(["ss-equiv", "verma-oracle"], ["A1"], radius=1)
    assert [(r.suite, r.preset) for r in results] == [("ss-equiv", "A1"), ("verma-oracle", "A1")]


@pytest.mark.slow
@pytest.mark.parametrize("suite", BUILTIN_SUITES)
def test_full_sweep(suite):
    """Each suite on its default presets at the larger grid radius."""
    for result in run_suites([suite], radius=4):
        assert result.passed, (result.preset, result.failures)
