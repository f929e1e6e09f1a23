"""Corpus-level analytics: standardization, correlation, clustering,
projection, profiles, trajectories, and layout decluttering."""

from sumlens.analytics.config import FeatureConfig, FeatureTarget
from sumlens.analytics.correlation import pearson_matrix
from sumlens.analytics.layout import declutter_layout, max_overlap_fraction
from sumlens.analytics.optics import (
    NOISE,
    ClusterModel,
    cluster_optics,
    default_min_samples,
    nearest_to_mean,
    optics_ordering,
    select_validation_set,
)
from sumlens.analytics.profiles import FeatureBar, cluster_profiles, match_cluster
from sumlens.analytics.projection import ProjectionModel, cosine_kernel, fit_projection
from sumlens.analytics.standardize import BaselineStats, standardize
from sumlens.analytics.trajectory import (
    BETTER,
    INSIGNIFICANT,
    WORSE,
    TrajectorySegment,
    sample_trajectory,
)

__all__ = [
    "FeatureConfig",
    "FeatureTarget",
    "pearson_matrix",
    "declutter_layout",
    "max_overlap_fraction",
    "NOISE",
    "ClusterModel",
    "cluster_optics",
    "default_min_samples",
    "nearest_to_mean",
    "optics_ordering",
    "select_validation_set",
    "FeatureBar",
    "cluster_profiles",
    "match_cluster",
    "ProjectionModel",
    "cosine_kernel",
    "fit_projection",
    "BaselineStats",
    "standardize",
    "BETTER",
    "WORSE",
    "INSIGNIFICANT",
    "TrajectorySegment",
    "sample_trajectory",
]
