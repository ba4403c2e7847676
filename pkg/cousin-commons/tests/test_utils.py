"""Tests for parsing and formatting helpers."""

from __future__ import annotations

from fractions import Fraction

import pytest
from cousin.core import models
from cousin.core.errors import ConfigError
from cousin.core.models import Weight
from cousin.core.utils import (
    format_fraction,
    format_vector,
    format_word,
    parse_fraction,
    parse_index_set,
    parse_vector,
    parse_word,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("5,3,-8", (5, 3, -8)),
        ("(1/2, 3)", (Fraction(1, 2), 3)),
        ([1, "2/3"], (1, Fraction(2, 3))),
        ("-1", (-1,)),
    ],
)
def test_parse_vector(text, expected):
    assert parse_vector(text) == tuple(Fraction(x) for x in expected)


def test_parse_vector_rejects_garbage():
    with pytest.raises(ConfigError):
        parse_vector("")
    with pytest.raises(ConfigError):
        parse_vector("1,x")


@pytest.mark.parametrize(
    "text, expected",
    [("s1s0s1", (1, 0, 1)), ("Id", ()), ("1,0", (1, 0)), ([2, 1], (2, 1)), ("1", (1,))],
)
def test_parse_word(text, expected):
    assert parse_word(text) == expected


def test_parse_word_rejects_malformed_words():
    with pytest.raises(ConfigError):
        parse_word("s1x0")


def test_parse_index_set():
    assert parse_index_set("0, 2") == frozenset({0, 2})
    assert parse_index_set(None) == frozenset()
    assert parse_index_set([1]) == frozenset({1})


def test_formatting():
    assert format_fraction(Fraction(-3, 6)) == "-1/2"
    assert format_fraction(Fraction(4)) == "4"
    assert format_word(()) == "Id"
    assert format_word((1, 0)) == "s1s0"
    assert format_vector((Fraction(1), Fraction(1, 2))) == "(1,1/2)"
    assert parse_fraction(" 7/2 ") == Fraction(7, 2)


def test_fraction_formatting_is_shared_with_weights():
    assert format_fraction is models.format_fraction
    assert str(Weight.of("-1/2", 4)) == f"({format_fraction(Fraction(-1, 2))},4)"
