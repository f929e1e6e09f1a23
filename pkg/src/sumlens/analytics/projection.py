"""Reusable 2-D projection: kernel PCA on the cosine-similarity kernel.

The projection is parametric: fitting stores the training vectors, the
kernel centering statistics, and the top-2 eigenpairs, so any later
feature vector can be projected into the same 2-D space (the property
that lets one plot compare every prompt version).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

_EIG_TOL = 1e-12


def cosine_kernel(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pairwise cosine similarity; zero vectors are similar to nothing."""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    b = np.atleast_2d(np.asarray(b, dtype=float))
    na = np.linalg.norm(a, axis=1)
    nb = np.linalg.norm(b, axis=1)
    denom = np.outer(np.where(na == 0, 1.0, na), np.where(nb == 0, 1.0, nb))
    k = (a @ b.T) / denom
    k[na == 0, :] = 0.0
    k[:, nb == 0] = 0.0
    return k


@dataclass(frozen=True)
class ProjectionModel:
    training: np.ndarray  # (N, d) z-vectors the kernel was fitted on
    row_means: np.ndarray  # (N,) per-row mean of the uncentered kernel
    grand_mean: float
    eigenvalues: np.ndarray  # (2,)
    eigenvectors: np.ndarray  # (N, 2)
    coordinates: np.ndarray  # (N, 2) training points in projection space

    def project(self, vector: Sequence[float]) -> np.ndarray:
        """Out-of-sample projection of one feature z-vector."""
        v = np.asarray(vector, dtype=float)
        if v.shape != (self.training.shape[1],):
            raise ValueError(
                f"expected vector of dim {self.training.shape[1]}, got {v.shape}"
            )
        k = cosine_kernel(v[None, :], self.training)[0]
        centered = k - k.mean() - self.row_means + self.grand_mean
        return centered @ self.eigenvectors / np.sqrt(self.eigenvalues)

    def project_many(self, vectors: Sequence[Sequence[float]]) -> np.ndarray:
        return np.vstack([self.project(v) for v in vectors])


def fit_projection(vectors: Sequence[Sequence[float]]) -> ProjectionModel:
    x = np.asarray(vectors, dtype=float)
    if x.ndim != 2 or x.shape[0] < 3:
        raise ValueError("need at least 3 baseline vectors")

    k = cosine_kernel(x, x)
    n = k.shape[0]
    row_means = k.mean(axis=1)
    grand_mean = float(k.mean())
    centered = k - row_means[None, :] - row_means[:, None] + grand_mean

    eigvals, eigvecs = np.linalg.eigh(centered)
    order = np.argsort(eigvals)[::-1]
    eigvals, eigvecs = eigvals[order], eigvecs[:, order]
    if eigvals[1] <= _EIG_TOL:
        raise ValueError("degenerate corpus: fewer than 2 positive kernel components")
    top_vals = eigvals[:2].copy()
    top_vecs = eigvecs[:, :2].copy()

    # sign convention: each eigenvector's largest-magnitude entry is positive
    for c in range(2):
        pivot = int(np.argmax(np.abs(top_vecs[:, c])))
        if top_vecs[pivot, c] < 0:
            top_vecs[:, c] = -top_vecs[:, c]

    coords = top_vecs * np.sqrt(top_vals)[None, :]
    return ProjectionModel(
        training=x.copy(),
        row_means=row_means,
        grand_mean=grand_mean,
        eigenvalues=top_vals,
        eigenvectors=top_vecs,
        coordinates=coords,
    )
