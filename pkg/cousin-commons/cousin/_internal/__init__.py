"""Private implementation facade for Cousin internals.

Everything under `cousin._internal` is considered unstable and may change
without notice.
"""

from __future__ import annotations

__all__ = [
    "checks",
    "hooks",
    "limits",
    "publishers",
]
