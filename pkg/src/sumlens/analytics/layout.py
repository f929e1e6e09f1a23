"""Server-side decluttering of 2-D scatter coordinates.

Fixed-iteration relaxation: points currently involved in a collision are
pulled gently toward their cluster's centroid (cohesion, annealed to zero
over the run), then overlapping circles are pushed apart pairwise. Points
that never collide are never moved, so an already-clean layout passes
through unchanged. Purely positional; cluster membership is untouched.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from sumlens.analytics.optics import NOISE

ITERATIONS = 300
STIFFNESS = 0.05


def _overlaps(pos: np.ndarray, r: np.ndarray) -> np.ndarray:
    n = len(pos)
    colliding = np.zeros(n, dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            diff = pos[j] - pos[i]
            if float(np.hypot(diff[0], diff[1])) < r[i] + r[j]:
                colliding[i] = colliding[j] = True
    return colliding


def declutter_layout(
    points: Sequence[Sequence[float]],
    cluster_labels: Sequence[int],
    radii: Sequence[float],
) -> np.ndarray:
    pos = np.asarray(points, dtype=float).copy()
    labels = list(cluster_labels)
    r = np.asarray(radii, dtype=float)
    n = len(pos)
    if n == 0:
        return pos

    members_of: dict[int, list[int]] = {}
    for k, lab in enumerate(labels):
        if lab != NOISE:
            members_of.setdefault(lab, []).append(k)

    for t in range(ITERATIONS):
        colliding = _overlaps(pos, r)
        if not colliding.any():
            break

        # cohesion fades out so the final sweeps purely resolve collisions
        strength = STIFFNESS * (1.0 - t / ITERATIONS)
        for members in members_of.values():
            if len(members) < 2:
                continue
            centroid = pos[members].mean(axis=0)
            for k in members:
                if colliding[k]:
                    pos[k] += strength * (centroid - pos[k])

        # pairwise overlap resolution, deterministic order
        for i in range(n):
            for j in range(i + 1, n):
                min_dist = r[i] + r[j]
                diff = pos[j] - pos[i]
                dist = float(np.hypot(diff[0], diff[1]))
                if dist >= min_dist:
                    continue
                if dist == 0.0:
                    # coincident points: separate along a fixed axis
                    direction = np.array([1.0, 0.0])
                else:
                    direction = diff / dist
                push = (min_dist - dist) / 2.0
                pos[i] -= direction * push
                pos[j] += direction * push

    return pos


def max_overlap_fraction(pos: np.ndarray, radii: Sequence[float]) -> float:
    """Worst remaining overlap relative to the pair's radius sum."""
    r = np.asarray(radii, dtype=float)
    worst = 0.0
    for i in range(len(pos)):
        for j in range(i + 1, len(pos)):
            min_dist = r[i] + r[j]
            dist = float(np.hypot(*(pos[j] - pos[i])))
            if dist < min_dist and min_dist > 0:
                worst = max(worst, (min_dist - dist) / min_dist)
    return worst
