"""Report rendering strategies for the command line.

Each command produces a ``Report``: a JSON-ready payload plus an optional
table. Publishers turn a report into plain text, JSON, Markdown or LaTeX.
"""

from __future__ import annotations

import json
import logging
from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from ..core.errors import ConfigError
from .config import OUTPUT_FORMATS

logger = logging.getLogger("Cousin")


@dataclass(frozen=True)
class Table:
    headers: tuple[str, ...]
    rows: tuple[tuple[Any, ...], ...]


@dataclass(frozen=True)
class Report:
    """Output of one command invocation."""

    title: str
    payload: Any
    table: Table | None = None
    lines: tuple[str, ...] = field(default_factory=tuple)
    exit_code: int = 0


def _cell(value: Any, latex: bool = False) -> str:
    render = getattr(value, "render", None)
    if callable(render):
        return str(render(latex=latex))
    return str(value)


class BasePublisher(ABC):
    """Base class for output formats."""

    @abstractmethod
    def render(self, report: Report) -> str:
        """Render *report* as a string without a trailing newline."""
        raise NotImplementedError

    def _body_lines(self, report: Report) -> list[str]:
        if report.lines:
            return list(report.lines)
        if isinstance(report.payload, dict):
            return [f"{key}: {_scalar(value)}" for key, value in report.payload.items()]
        return [_scalar(report.payload)]


def _scalar(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


class PlainPublisher(BasePublisher):
    def render(self, report: Report) -> str:
        if report.table is None:
            return "\n".join(self._body_lines(report))
        table = report.table
        cells = [list(table.headers)] + [[_cell(v) for v in row] for row in table.rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(table.headers))]
        out = ["  ".join(text.ljust(width) for text, width in zip(row, widths)).rstrip() for row in cells]
        return "\n".join(out)


class JsonPublisher(BasePublisher):
    """Compact, key-sorted JSON under a single ``result`` key."""

    def render(self, report: Report) -> str:
        return json.dumps({"result": report.payload}, sort_keys=True, separators=(",", ":"))


class MarkdownPublisher(BasePublisher):
    def render(self, report: Report) -> str:
        out = [f"### {report.title}", ""]
        if report.table is None:
            out.extend(f"- {line}" for line in self._body_lines(report))
            return "\n".join(out)
        headers = report.table.headers
        out.append("| " + " | ".join(headers) + " |")
        out.append("|" + "|".join("---" for _ in headers) + "|")
        for row in report.table.rows:
            out.append("| " + " | ".join(_cell(v) for v in row) + " |")
        return "\n".join(out)


class LatexPublisher(BasePublisher):
    def render(self, report: Report) -> str:
        if report.table is None:
            items = [f"  \\item {_escape(line)}" for line in self._body_lines(report)]
            return "\n".join(["\\begin{itemize}", *items, "\\end{itemize}"])
        headers = report.table.headers
        out = [
            "\\begin{tabular}{" + "|".join("c" for _ in headers) + "}",
            " & ".join(_escape(h) for h in headers) + " \\\\",
            "\\hline",
        ]
        for row in report.table.rows:
            out.append(" & ".join(f"${_cell(v, latex=True)}$" for v in row) + " \\\\")
        out.append("\\end{tabular}")
        return "\n".join(out)


def _escape(text: str) -> str:
    return text.replace("_", "\\_").replace("^", "\\^{}").replace("#", "\\#")


_PUBLISHERS: dict[str, type[BasePublisher]] = {
    "plain": PlainPublisher,
    "json": JsonPublisher,
    "md": MarkdownPublisher,
    "latex": LatexPublisher,
}


def create_publisher(output_format: str) -> BasePublisher:
    if output_format not in OUTPUT_FORMATS:
        raise ConfigError(
            f"unknown output format {output_format!r}", module="publishers", operation="create_publisher"
        )
    logger.debug("Rendering output as %s", output_format)
    return _PUBLISHERS[output_format]()


def table_from_rows(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> Table:
    return Table(tuple(headers), tuple(tuple(row) for row in rows))


__all__ = [
    "BasePublisher",
    "JsonPublisher",
    "LatexPublisher",
    "MarkdownPublisher",
    "PlainPublisher",
    "Report",
    "Table",
    "create_publisher",
    "table_from_rows",
]
