"""Cluster profile scaling and config-to-cluster matching."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from sumlens.analytics.config import FeatureConfig
from sumlens.analytics.optics import ClusterModel
from sumlens.metrics import FEATURES, FeatureScores


@dataclass(frozen=True)
class FeatureBar:
    """One cluster's range for one feature, raw and profile-scaled.

    The scaled interval maps the global mean to 0.5 and global mean +/- H
    to 1.0 / 0.0, where H = max(gmax - gmean, gmean - gmin); that makes
    differences between clusters visually comparable across features.
    """

    feature: str
    raw_min: float
    raw_max: float
    raw_mean: float
    scaled_min: float
    scaled_max: float


def _scale(value: float, gmean: float, half_width: float) -> float:
    if half_width == 0.0:
        return 0.5
    return min(max(0.5 + (value - gmean) / (2.0 * half_width), 0.0), 1.0)


def cluster_profiles(
    model: ClusterModel, scores: Sequence[FeatureScores]
) -> dict[int, list[FeatureBar]]:
    """Per-cluster scaled feature bars (clusters only; noise excluded)."""
    values = {name: [s.value_of(name) for s in scores] for name in FEATURES}
    profiles: dict[int, list[FeatureBar]] = {}
    for cid in range(model.n_clusters):
        members = model.members(cid)
        bars = []
        for name in FEATURES:
            col = values[name]
            gmean = sum(col) / len(col)
            half = max(max(col) - gmean, gmean - min(col))
            member_vals = [col[i] for i in members]
            lo, hi = min(member_vals), max(member_vals)
            bars.append(
                FeatureBar(
                    feature=name,
                    raw_min=lo,
                    raw_max=hi,
                    raw_mean=sum(member_vals) / len(member_vals),
                    scaled_min=_scale(lo, gmean, half),
                    scaled_max=_scale(hi, gmean, half),
                )
            )
        profiles[cid] = bars
    return profiles


def match_cluster(
    config: FeatureConfig, model: ClusterModel, scores: Sequence[FeatureScores]
) -> tuple[int, float]:
    """Cluster whose members best satisfy the config's included targets.

    fit(cluster) = mean over included features of the fraction of members
    inside the target; ties prefer the larger cluster, then the lower id.
    """
    if model.n_clusters == 0:
        raise ValueError("no clusters")
    included = config.included_features()

    best: tuple[float, int, int] | None = None  # (-fit, -size, cid)
    best_fit = 0.0
    for cid in range(model.n_clusters):
        members = model.members(cid)
        fractions = []
        for name in included:
            inside = sum(1 for i in members if config.contains(name, scores[i].value_of(name)))
            fractions.append(inside / len(members))
        fit = sum(fractions) / len(fractions) if fractions else 0.0
        key = (-fit, -model.sizes[cid], cid)
        if best is None or key < best:
            best = key
            best_fit = fit
    assert best is not None
    return best[2], best_fit
