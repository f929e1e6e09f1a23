"""Categorical levels for each feature metric.

Buckets are lower-inclusive / upper-exclusive; the final bucket also
includes its upper bound, and an upper bound of ``inf`` means unbounded.
"""

from __future__ import annotations

import math

LEVEL_TABLES: dict[str, list[tuple[float, float, str]]] = {
    "complexity": [
        (0.0, 10.0, "Elementary"),
        (10.0, 40.0, "Middle School"),
        (40.0, 50.0, "High School"),
        (50.0, 90.0, "College"),
        (90.0, 100.0, "Professional"),
    ],
    "formality": [
        (0.0, 60.0, "Informal"),
        (60.0, 100.0, "Standard"),
        (100.0, 200.0, "Formal"),
        (200.0, math.inf, "Very Formal"),
    ],
    "sentiment": [
        (-1.0, -0.3, "Negative"),
        (-0.3, 0.3, "Neutral"),
        (0.3, 1.0, "Positive"),
    ],
    "faithfulness": [
        (0.0, 0.25, "Bad"),
        (0.25, 0.4, "Low"),
        (0.4, 0.6, "Avg"),
        (0.6, 1.0, "Good"),
    ],
    "naturalness": [
        (0.0, 0.435, "Bad"),
        (0.435, 0.607, "Low"),
        (0.607, 0.715, "Avg"),
        (0.715, 1.0, "Good"),
    ],
    "length": [
        (0.0, 100.0, "Short"),
        (100.0, 300.0, "Mid"),
        (300.0, 500.0, "Long"),
        (500.0, math.inf, "Very Long"),
    ],
}

FEATURES = tuple(LEVEL_TABLES)


def categorize(feature: str, score: float) -> str:
    """Map a score to its unique level for the given feature."""
    table = LEVEL_TABLES[feature]
    lo0 = table[0][0]
    if score < lo0:
        raise ValueError(f"{feature} score {score} below domain start {lo0}")
    for i, (lo, hi, name) in enumerate(table):
        last = i == len(table) - 1
        if lo <= score < hi or (last and score <= hi):
            return name
    raise ValueError(f"{feature} score {score} above domain end")


def levels_for(feature: str) -> list[str]:
    return [name for _, _, name in LEVEL_TABLES[feature]]


def level_bounds(feature: str, level: str) -> tuple[float, float]:
    for lo, hi, name in LEVEL_TABLES[feature]:
        if name == level:
            return lo, hi
    raise ValueError(f"unknown level {level!r} for feature {feature!r}")
