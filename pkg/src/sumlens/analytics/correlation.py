"""Pairwise Pearson correlation of the feature matrix."""

from __future__ import annotations

from typing import Sequence

import numpy as np

DEFAULT_THRESHOLD = 0.3


def pearson_matrix(
    vectors: Sequence[Sequence[float]], threshold: float = DEFAULT_THRESHOLD
) -> tuple[np.ndarray, np.ndarray]:
    """Return (r matrix, significance mask with |r| >= threshold).

    Constant features correlate 0 with everything (and stay unmasked);
    the diagonal is always 1 and masked significant.
    """
    arr = np.asarray(vectors, dtype=float)
    if arr.shape[0] < 3:
        raise ValueError("insufficient data: need at least 3 summaries")

    n_features = arr.shape[1]
    centered = arr - arr.mean(axis=0)
    norms = np.sqrt((centered**2).sum(axis=0))

    r = np.zeros((n_features, n_features))
    for i in range(n_features):
        for j in range(n_features):
            if i == j:
                r[i, j] = 1.0
            elif norms[i] == 0.0 or norms[j] == 0.0:
                r[i, j] = 0.0
            else:
                r[i, j] = float(centered[:, i] @ centered[:, j] / (norms[i] * norms[j]))

    mask = np.abs(r) >= threshold
    return r, mask
