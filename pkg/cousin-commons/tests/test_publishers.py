"""Tests for report rendering."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest
from cousin._internal.publishers import (
    JsonPublisher,
    LatexPublisher,
    MarkdownPublisher,
    PlainPublisher,
    Report,
    create_publisher,
    table_from_rows,
)
from cousin.core.errors import ConfigError
from cousin.core.hecke import AffineForm


@pytest.fixture
def table_report():
    form = AffineForm((Fraction(1), Fraction(2)), Fraction(0))
    table = table_from_rows(("op", "b_c"), [("U1", form), ("U22", 3)])
    return Report("bounds", {"rows": 2}, table)


class TestPublishers:
    def test_plain_aligns_columns(self, table_report):
        assert PlainPublisher().render(table_report) == "\n".join(
            ["op   b_c", "U1   k1+2*k2", "U22  3"]
        )

    def test_plain_without_table(self):
        report = Report("x", {"a": 1, "b": [1, 2]})
        assert PlainPublisher().render(report) == "a: 1\nb: [1,2]"

    def test_json_is_compact_and_sorted(self):
        report = Report("x", {"b": [1, 2], "a": None})
        text = JsonPublisher().render(report)
        assert text == '{"result":{"a":null,"b":[1,2]}}'
        assert json.loads(text)["result"]["b"] == [1, 2]

    def test_markdown_table(self, table_report):
        assert MarkdownPublisher().render(table_report) == "\n".join(
            [
                "### bounds",
                "",
                "| op | b_c |",
                "|---|---|",
                "| U1 | k1+2*k2 |",
                "| U22 | 3 |",
            ]
        )

    def test_markdown_bullets(self):
        report = Report("amplitude", {"min": 0, "max": 1})
        assert MarkdownPublisher().render(report) == "### amplitude\n\n- min: 0\n- max: 1"

    def test_latex_table(self, table_report):
        """Affine forms are rendered in math mode with subscripted variables."""
        assert LatexPublisher().render(table_report) == "\n".join(
            [
                "\\begin{tabular}{c|c}",
                "op & b\\_c \\\\",
                "\\hline",
                "$U1$ & $k_{1}+2k_{2}$ \\\\",
                "$U22$ & $3$ \\\\",
                "\\end{tabular}",
            ]
        )

    def test_latex_items(self):
        report = Report("x", None, lines=("first", "second"))
        assert LatexPublisher().render(report) == (
            "\\begin{itemize}\n  \\item first\n  \\item second\n\\end{itemize}"
        )


@pytest.mark.parametrize(
    "fmt, cls",
    [("plain", PlainPublisher), ("json", JsonPublisher), ("md", MarkdownPublisher), ("latex", LatexPublisher)],
)
def test_create_publisher(fmt, cls):
    assert isinstance(create_publisher(fmt), cls)


def test_unknown_format():
    with pytest.raises(ConfigError):
        create_publisher("xml")
