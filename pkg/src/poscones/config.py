"""Runtime configuration knobs."""

from __future__ import annotations

import os

DEFAULT_BUDGET = 64


def default_budget() -> int:
    """Search budget for bounded representation probes.

    Taken from the HC_BUDGET environment variable when set, else 64.
    """
    raw = os.environ.get("HC_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        val = int(raw)
    except ValueError as exc:
        raise ValueError(f"HC_BUDGET must be an integer, got {raw!r}") from exc
    if val < 1:
        raise ValueError("HC_BUDGET must be >= 1")
    return val
