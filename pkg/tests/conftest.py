"""Shared test helpers.

Keeps the frozen reference table importable regardless of how pytest was
invoked, and provides a couple of tolerance helpers used across modules.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def rel_gap(got: float, want: float) -> float:
    """Relative difference with a floor of 1 on the denominator."""
    return abs(got - want) / max(1.0, abs(want))
