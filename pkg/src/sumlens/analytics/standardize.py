"""Feature standardization against frozen baseline statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from sumlens.metrics import FEATURES


@dataclass(frozen=True)
class BaselineStats:
    """Per-feature mean and population std fitted once on the baseline run."""

    mean: tuple[float, ...]
    std: tuple[float, ...]

    @classmethod
    def fit(cls, vectors: Sequence[Sequence[float]]) -> "BaselineStats":
        arr = np.asarray(vectors, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != len(FEATURES):
            raise ValueError(f"expected Nx{len(FEATURES)} feature matrix")
        return cls(mean=tuple(arr.mean(axis=0)), std=tuple(arr.std(axis=0)))


def standardize(vectors: Sequence[Sequence[float]], stats: BaselineStats) -> np.ndarray:
    """z = (x - mean) / std per feature; features with std 0 map to z = 0."""
    arr = np.asarray(vectors, dtype=float)
    mean = np.asarray(stats.mean)
    std = np.asarray(stats.std)
    safe = np.where(std == 0.0, 1.0, std)
    z = (arr - mean) / safe
    z[:, std == 0.0] = 0.0
    return z
