"""Cluster profiles, config matching, trajectories, and layout."""

import math

import numpy as np
import pytest

from sumlens.analytics import (
    BETTER,
    INSIGNIFICANT,
    WORSE,
    FeatureConfig,
    FeatureTarget,
    cluster_optics,
    cluster_profiles,
    declutter_layout,
    fit_projection,
    match_cluster,
    max_overlap_fraction,
    sample_trajectory,
)
from sumlens.metrics import FeatureScores


def make_scores(complexity=50.0, formality=100.0, sentiment=0.0, faithfulness=0.5,
                naturalness=0.5, length=100):
    return FeatureScores(
        complexity=complexity,
        formality=formality,
        sentiment=sentiment,
        faithfulness=faithfulness,
        naturalness_raw=1.0,
        length=length,
        naturalness=naturalness,
    )


def two_planted_clusters():
    """Ten low-complexity and ten high-complexity synthetic score rows."""
    scores = []
    for i in range(10):
        scores.append(make_scores(complexity=5.0 + 0.1 * i, length=50 + i))
    for i in range(10):
        scores.append(make_scores(complexity=80.0 + 0.1 * i, length=400 + i))
    vectors = [s.as_vector() for s in scores]
    model = cluster_optics(np.asarray(vectors), min_samples=5)
    assert model.n_clusters == 2
    return model, scores


class TestClusterProfiles:
    def test_full_span_cluster_fills_bar(self):
        # one dense cluster spanning the whole global range symmetrically
        scores = [make_scores(complexity=c) for c in np.linspace(0.0, 100.0, 11)]
        vectors = [s.as_vector() for s in scores]
        model = cluster_optics(np.asarray(vectors), min_samples=5)
        assert model.n_clusters == 1
        bars = cluster_profiles(model, scores)
        bar = next(b for b in bars[0] if b.feature == "complexity")
        assert bar.scaled_min == 0.0
        assert bar.scaled_max == 1.0

    def test_zero_spread_at_global_mean(self):
        scores = [make_scores(formality=100.0) for _ in range(8)]
        model = cluster_optics(np.asarray([s.as_vector() for s in scores]), min_samples=5)
        bars = cluster_profiles(model, scores)
        bar = next(b for b in bars[0] if b.feature == "formality")
        assert bar.scaled_min == 0.5 and bar.scaled_max == 0.5

    def test_asymmetric_affine_map(self):
        # global: min 4, mean 6, max 12 -> half width H = 6
        # a value at the global min maps to 0.5 - 2/6 * 0.5 = 1/3
        from sumlens.analytics.profiles import _scale

        assert _scale(4.0, 6.0, 6.0) == pytest.approx(1.0 / 3.0)
        assert _scale(12.0, 6.0, 6.0) == pytest.approx(1.0)
        assert _scale(6.0, 6.0, 6.0) == 0.5


class TestMatchCluster:
    def test_planted_cluster_fit_one(self):
        model, scores = two_planted_clusters()
        config = FeatureConfig(
            targets={
                "complexity": FeatureTarget(included=True, level="Elementary"),
                "length": FeatureTarget(included=True, range=(0.0, 100.0)),
            }
        )
        low_cluster = model.labels[0]
        cid, fit = match_cluster(config, model, scores)
        assert cid == low_cluster
        assert fit == 1.0

    def test_no_match_fit_zero_deterministic(self):
        model, scores = two_planted_clusters()
        config = FeatureConfig(
            targets={"sentiment": FeatureTarget(included=True, level="Negative")}
        )
        cid, fit = match_cluster(config, model, scores)
        assert fit == 0.0
        assert cid == 0  # equal sizes -> lowest id

    def test_size_tiebreak(self):
        scores = [make_scores(complexity=5.0 + 0.01 * i) for i in range(8)]
        scores += [make_scores(complexity=80.0 + 0.01 * i) for i in range(5)]
        model = cluster_optics(np.asarray([s.as_vector() for s in scores]), min_samples=5)
        assert sorted(model.sizes) == [5, 8]
        # a config both clusters satisfy equally
        config = FeatureConfig(
            targets={"length": FeatureTarget(included=True, level="Mid")}
        )
        cid, fit = match_cluster(config, model, scores)
        assert fit == 1.0
        assert model.sizes[cid] == 8

    def test_config_validation(self):
        with pytest.raises(ValueError, match="at least one"):
            FeatureConfig(targets={})
        with pytest.raises(ValueError, match="unknown level"):
            FeatureConfig(
                targets={"complexity": FeatureTarget(included=True, level="Medium")}
            )
        with pytest.raises(ValueError, match="domain"):
            FeatureConfig(
                targets={"sentiment": FeatureTarget(included=True, range=(-2.0, 0.5))}
            )


@pytest.fixture(scope="module")
def model():
    rng = np.random.default_rng(0)
    return fit_projection(rng.normal(0, 1, (10, 6)))


class TestTrajectory:

    def test_hundred_samples_with_projected_endpoints(self, model):
        old = np.zeros(6)
        new = np.ones(6)
        seg = sample_trajectory(model, old, new, target_z=np.ones(6))
        assert len(seg.points) == 100
        assert np.allclose(seg.points[0], model.project(old), atol=1e-12)
        assert np.allclose(seg.points[-1], model.project(new), atol=1e-12)

    def test_identical_endpoints_insignificant(self, model):
        z = np.full(6, 0.3)
        seg = sample_trajectory(model, z, z, target_z=np.ones(6))
        assert seg.direction == INSIGNIFICANT
        assert all(np.allclose(p, seg.points[0]) for p in seg.points)

    @pytest.mark.parametrize(
        "old,new,target,expected_direction,expected_delta",
        [
            # hand Euclidean arithmetic in z-space over all 6 dims
            (np.zeros(6), np.ones(6) * 0.5, np.ones(6) * 0.5, BETTER,
             math.sqrt(6 * 0.25)),  # 1.2247... improvement
            (np.ones(6) * 0.5, np.zeros(6), np.ones(6) * 0.5, WORSE,
             -math.sqrt(6 * 0.25)),
            (np.zeros(6), np.full(6, 0.1), np.full(6, 0.1), INSIGNIFICANT,
             math.sqrt(6 * 0.01)),  # 0.2449 < 0.25
            (np.full(6, 1.0), np.full(6, 0.9), np.zeros(6), INSIGNIFICANT,
             math.sqrt(6) - math.sqrt(6 * 0.81)),
            (np.full(6, 2.0), np.full(6, 0.5), np.zeros(6), BETTER,
             math.sqrt(24) - math.sqrt(1.5)),
        ],
    )
    def test_direction_fixtures(self, model, old, new, target, expected_direction, expected_delta):
        seg = sample_trajectory(model, old, new, target)
        assert seg.delta == pytest.approx(expected_delta, abs=1e-12)
        assert seg.direction == expected_direction

    def test_included_dims_restrict_distance(self, model):
        old = np.array([0.0, 0.0, 0.0, 0.0, 0.0, 5.0])
        new = np.array([1.0, 0.0, 0.0, 0.0, 0.0, 0.0])
        target = np.array([1.0, 0.0, 0.0, 0.0, 0.0, 9.0])
        seg = sample_trajectory(model, old, new, target, included_dims=[0])
        assert seg.delta == pytest.approx(1.0)
        assert seg.direction == BETTER

    def test_class_invariant_under_screen_rescaling(self, model):
        # the direction is computed in z-space; rescaling projected points
        # (as any screen transform would) cannot change it
        old, new, target = np.zeros(6), np.full(6, 0.8), np.full(6, 0.8)
        seg = sample_trajectory(model, old, new, target)
        scaled_points = seg.points * 250.0 + 40.0
        assert scaled_points.shape == seg.points.shape
        assert seg.direction == BETTER


class TestLayout:
    def test_clean_layout_untouched(self):
        pts = np.array([[0.0, 0.0], [5.0, 0.0], [0.0, 5.0]])
        out = declutter_layout(pts, [0, 0, 1], [1.0, 1.0, 1.0])
        assert np.array_equal(out, pts)

    def test_coincident_points_separate(self):
        out = declutter_layout([[1.0, 1.0], [1.0, 1.0]], [0, 0], [0.5, 0.5])
        assert np.hypot(*(out[1] - out[0])) >= 1.0 - 1e-9

    def test_deterministic_across_runs(self):
        rng = np.random.default_rng(5)
        pts = rng.normal(0, 0.4, (20, 2))
        labels = [0] * 10 + [1] * 10
        radii = [0.2] * 20
        a = declutter_layout(pts, labels, radii)
        b = declutter_layout(pts, labels, radii)
        assert np.array_equal(a, b)

    def test_overlap_bounded_after_relaxation(self):
        rng = np.random.default_rng(9)
        pts = rng.normal(0, 0.05, (30, 2))
        radii = [0.15] * 30
        out = declutter_layout(pts, [0] * 30, radii)
        assert max_overlap_fraction(out, radii) <= 0.01

    def test_membership_unchanged(self):
        # the function only returns coordinates; labels aren't part of output
        pts = np.zeros((4, 2))
        labels = [0, 0, 1, -1]
        out = declutter_layout(pts, labels, [0.1] * 4)
        assert out.shape == (4, 2)
