"""Density-based clustering: OPTICS ordering plus steep-jump extraction.

The ordering/reachability computation is the standard OPTICS walk
(Euclidean metric, unbounded eps, O(N^2); fine at workbench scale).

Cluster extraction segments the ordered reachability plot with a
hysteresis rule: a new segment opens at any position whose reachability
jumps above ``split_ratio`` times the smallest reachability in the
preceding ``min_samples``-wide window (and above the ``xi`` steepness
margin). Segments smaller than ``min_samples`` become noise. Off-the-shelf
xi steep-area extraction was evaluated and rejected: at usable xi values
it fragments even cleanly separated blobs and absorbs isolated outliers,
which violates this module's contract.
"""

from __future__ import annotations

import heapq
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

NOISE = -1
DEFAULT_XI = 0.05
DEFAULT_SPLIT_RATIO = 2.5


def default_min_samples(n_points: int) -> int:
    return max(5, int(np.ceil(0.01 * n_points)))


def optics_ordering(points: np.ndarray, min_samples: int) -> tuple[list[int], np.ndarray]:
    """Compute the OPTICS processing order and reachability distances."""
    n = len(points)
    dist = np.sqrt(((points[:, None, :] - points[None, :, :]) ** 2).sum(axis=2))
    # core distance: distance to the min_samples-th nearest point, self included
    core = np.partition(dist, min_samples - 1, axis=1)[:, min_samples - 1]

    processed = np.zeros(n, dtype=bool)
    reach = np.full(n, np.inf)
    order: list[int] = []

    def expand(p: int, heap: list[tuple[float, int]]) -> None:
        new_reach = np.maximum(core[p], dist[p])
        for o in range(n):
            if processed[o] or o == p:
                continue
            if new_reach[o] < reach[o]:
                reach[o] = new_reach[o]
                heapq.heappush(heap, (reach[o], o))

    for start in range(n):
        if processed[start]:
            continue
        processed[start] = True
        order.append(start)
        heap: list[tuple[float, int]] = []
        expand(start, heap)
        while heap:
            r, q = heapq.heappop(heap)
            if processed[q] or r != reach[q]:
                continue
            processed[q] = True
            order.append(q)
            expand(q, heap)

    return order, reach


def _segment(reach_in_order: np.ndarray, min_samples: int, xi: float, split_ratio: float) -> list[int]:
    """Split positions in the ordered reachability plot (hysteresis jumps)."""
    n = len(reach_in_order)
    splits: list[int] = []
    segment_start = 0
    for p in range(1, n):
        # Judge only against the current segment: reachability values from
        # before the last split (and the split jump itself) say nothing
        # about this segment's density. Position 0 is excluded too; the
        # walk's start point has no meaningful reachability.
        window_from = max(segment_start + 1, 1, p - min_samples)
        window = reach_in_order[window_from:p]
        ratio = split_ratio
        if len(window) == 0:
            # No left context inside the segment; judge against the forward
            # window with a squared margin so a mere edge point does not
            # split off, while a far-out isolate still does.
            window = reach_in_order[p + 1 : p + 1 + min_samples]
            ratio = split_ratio**2
            if len(window) == 0:
                continue
        low = float(np.min(window))
        r = float(reach_in_order[p])
        if r > ratio * low and r * (1.0 - xi) > low:
            splits.append(p)
            segment_start = p
    return splits


@dataclass(frozen=True)
class ClusterModel:
    labels: tuple[int, ...]
    min_samples: int
    xi: float
    centroids: tuple[int, ...]  # member index per cluster id
    sizes: tuple[int, ...]
    ordering: tuple[int, ...]
    reachability: tuple[float, ...]  # per point, input order

    @property
    def n_clusters(self) -> int:
        return len(self.sizes)

    def members(self, cluster_id: int) -> list[int]:
        return [i for i, lab in enumerate(self.labels) if lab == cluster_id]


def nearest_to_mean(points: np.ndarray, members: Sequence[int]) -> int:
    """Member index closest to the member mean (ties: lowest index)."""
    sub = points[list(members)]
    mean = sub.mean(axis=0)
    dists = np.sqrt(((sub - mean) ** 2).sum(axis=1))
    best = int(np.argmin(dists))  # argmin returns first minimum: lowest index
    return list(members)[best]


def cluster_optics(
    points: Sequence[Sequence[float]],
    min_samples: int | None = None,
    xi: float = DEFAULT_XI,
    split_ratio: float = DEFAULT_SPLIT_RATIO,
) -> ClusterModel:
    arr = np.asarray(points, dtype=float)
    n = len(arr)
    if min_samples is None:
        min_samples = default_min_samples(n)

    if n < min_samples:
        warnings.warn(
            f"only {n} points for min_samples={min_samples}; everything is noise",
            stacklevel=2,
        )
        return ClusterModel(
            labels=(NOISE,) * n,
            min_samples=min_samples,
            xi=xi,
            centroids=(),
            sizes=(),
            ordering=tuple(range(n)),
            reachability=(float("inf"),) * n,
        )

    order, reach = optics_ordering(arr, min_samples)
    reach_in_order = reach[order]
    splits = _segment(reach_in_order, min_samples, xi, split_ratio)

    labels = [NOISE] * n
    segment_bounds = [0] + splits + [n]
    next_id = 0
    for seg_start, seg_end in zip(segment_bounds, segment_bounds[1:]):
        if seg_end - seg_start >= min_samples:
            for pos in range(seg_start, seg_end):
                labels[order[pos]] = next_id
            next_id += 1

    centroids = []
    sizes = []
    for cid in range(next_id):
        members = [i for i, lab in enumerate(labels) if lab == cid]
        centroids.append(nearest_to_mean(arr, members))
        sizes.append(len(members))

    return ClusterModel(
        labels=tuple(labels),
        min_samples=min_samples,
        xi=xi,
        centroids=tuple(centroids),
        sizes=tuple(sizes),
        ordering=tuple(order),
        reachability=tuple(float(r) for r in reach),
    )


def select_validation_set(model: ClusterModel) -> list[tuple[int, int]]:
    """One (centroid member index, cluster size) pair per cluster."""
    if model.n_clusters == 0:
        raise ValueError("no clusters")
    return [(model.centroids[cid], model.sizes[cid]) for cid in range(model.n_clusters)]
