"""Pytest plugin for Cousin root data and property suites."""

from .plugin import CousinPytestPlugin

__version__ = "0.1.0"

__all__ = [
    "CousinPytestPlugin",
]
