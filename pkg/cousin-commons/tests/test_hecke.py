"""Tests for the symbolic Hecke slope tables."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest
from cousin.core.errors import PresetError
from cousin.core.hecke import (
    AffineForm,
    hecke_operators,
    hecke_table,
    symplectic_genus,
    symplectic_kappa,
)
from cousin.core.models import Weight

DATA_DIR = Path(__file__).parent / "data"


def _rows(table):
    return {name: [str(form) for form in forms] for name, forms in table.rows}


class TestGSp4Tables:
    def test_ss_table(self):
        table = hecke_table(2, "ss")
        assert table.columns == ("Id", "s1", "s1s0", "s1s0s1")
        assert _rows(table) == {
            "U2": ["3", "k2+1", "k2+1", "k1+k2"],
            "U1": ["k2+3", "k2+3", "k1+2*k2", "k1+2*k2"],
        }

    def test_sss_table(self):
        """Strongly small bounds lose the constant on U2 but not on U1."""
        assert _rows(hecke_table(2, "sss")) == {
            "U2": ["3", "k2", "k2", "k1+k2"],
            "U1": ["k2+3", "k2+3", "k1+2*k2", "k1+2*k2"],
        }

    @pytest.mark.parametrize("variant", ["ss", "sss"])
    def test_matches_stored_table(self, variant):
        stored = json.loads((DATA_DIR / f"gsp4_{variant}.json").read_text())
        assert hecke_table(2, variant).to_dict() == stored["result"]

    def test_to_dict(self):
        payload = hecke_table(2).to_dict()
        assert payload["variant"] == "ss"
        assert payload["rows"][0] == {"operator": "U2", "cells": ["3", "k2+1", "k2+1", "k1+k2"]}


def test_gl2_table():
    table = hecke_table(1)
    assert table.columns == ("Id", "s0")
    assert _rows(table) == {"U1": ["1", "k"]}


def test_operators():
    names = [op.name for op in hecke_operators(3)]
    assert names == ["U3", "U2", "U1"]
    assert hecke_operators(2)[1].valuation == Weight.of(0, -1, -1)


class TestAffineForm:
    @pytest.mark.parametrize(
        "coefficients, constant, plain, latex",
        [
            ((1, 2), 0, "k1+2*k2", "k_{1}+2k_{2}"),
            ((0, 0), 3, "3", "3"),
            ((-1, 0), 0, "-k1", "-k_{1}"),
            ((Fraction(1, 2), 0), -1, "1/2*k1-1", "1/2k_{1}-1"),
            ((1,), 0, "k", "k"),
        ],
    )
    def test_rendering(self, coefficients, constant, plain, latex):
        form = AffineForm(tuple(Fraction(c) for c in coefficients), Fraction(constant))
        assert form.render() == plain
        assert form.render(latex=True) == latex

    def test_evaluate_and_interpolate(self):
        form = AffineForm.interpolate(2, lambda ks: ks[0] + 2 * ks[1] + 3)
        assert form == AffineForm((Fraction(1), Fraction(2)), Fraction(3))
        assert form.evaluate((5, 3)) == 14


def test_symplectic_kappa():
    assert symplectic_kappa((5, 3)) == Weight.of(5, 3, -8)


@pytest.mark.parametrize("preset, g", [("GSp4", 2), ("C2", 2), ("GL2", 1), ("GSp2g:g=3", 3)])
def test_genus(preset, g):
    assert symplectic_genus(preset) == g


def test_genus_of_non_symplectic_preset():
    with pytest.raises(PresetError):
        symplectic_genus("A2")
