"""Tests for preset resolution and the preset registration hook."""

from __future__ import annotations

import pytest
from cousin._internal.hooks.manager import get_plugin_manager
from cousin._internal.hooks.specs import hookimpl
from cousin.core.errors import PresetError, RootDatumError
from cousin.core.models import Weight
from cousin.core.presets import compact_levi, get_preset, load_datum_document, type_a


class TestBuiltinPresets:
    @pytest.mark.parametrize(
        "name, dim, rank",
        [
            ("A1", 1, 1),
            ("A3", 3, 3),
            ("GL2", 2, 1),
            ("GSp4", 3, 2),
            ("GSp2g:g=3", 4, 3),
            ("product:A1xA2", 3, 3),
            ("res:A1^3", 3, 3),
        ],
    )
    def test_shapes(self, name, dim, rank):
        datum = get_preset(name)
        assert (datum.dim, datum.rank) == (dim, rank)

    def test_aliases_are_equal(self):
        """The preset tag does not take part in equality."""
        assert get_preset("C2") == get_preset("GSp4")
        assert get_preset("C2").preset_tag == "C2"

    def test_compact_levi(self):
        assert compact_levi(1) == frozenset()
        assert compact_levi(3) == frozenset({0, 1})

    @pytest.mark.parametrize("name", ["Z9", "A0", "product:A1", "GSp2g:g=0"])
    def test_unknown_or_invalid(self, name):
        with pytest.raises(PresetError):
            get_preset(name)


class TestDatumDocuments:
    def test_loads_a1(self):
        datum = load_datum_document(
            {"dim": 1, "simple_roots": [[2]], "simple_coroots": [[1]], "name": "mine"}
        )
        assert datum == type_a(1)
        assert datum.preset_tag == "mine"

    def test_missing_key(self):
        with pytest.raises(RootDatumError, match="malformed"):
            load_datum_document({"dim": 1, "simple_roots": [[2]]})

    def test_bad_vector(self):
        with pytest.raises(RootDatumError):
            load_datum_document({"dim": 1, "simple_roots": [["x"]], "simple_coroots": [[1]]})


class TestPresetHook:
    def test_plugin_contributes_a_family(self):
        """A registered plugin can add its own name pattern."""

        class ToyPresets:
            @hookimpl
            def cousin_register_presets(self, registry):
                registry.register(r"toy", lambda m, r: r.resolve("A1"), usage="toy")

        get_plugin_manager().register(ToyPresets())

        datum = get_preset("toy")
        assert datum.simple_roots == (Weight.of(2),)
