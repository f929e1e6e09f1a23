"""Structural naturalness features, weighting, and corpus normalization."""

import pytest

from sumlens.annotate import SentenceParse
from sumlens.metrics import (
    NaturalnessScale,
    NaturalnessWeights,
    categorize,
    naturalness_features,
    naturalness_scores,
    raw_score,
)


def chain_parse() -> SentenceParse:
    # the -> cat -> sat: root "sat" at index 2
    return SentenceParse(heads=(1, 2, 2), root_index=2)


class TestStructuralFeatures:
    def test_single_token_sentence(self):
        parse = SentenceParse(heads=(0,), root_index=0)
        assert naturalness_features([parse], [1]) == (0.0, 0.0, 1.0, 1.0)

    def test_left_chain(self):
        assert naturalness_features([chain_parse()], [3]) == (2.0, 0.0, 3.0, 3.0)

    def test_heights_average_across_sentences(self):
        # heights 3 and 5 -> average 4
        deep = SentenceParse(heads=(1, 2, 3, 4, 4), root_index=4)  # chain of 5
        assert deep.tree_height == 5
        left, right, height, length = naturalness_features([chain_parse(), deep], [3, 5])
        assert height == 4.0
        assert length == 4.0

    def test_right_subtree(self):
        # root at 0 with right chain 0 <- 1 <- 2
        parse = SentenceParse(heads=(0, 0, 1), root_index=0)
        assert parse.right_subtree_height == 2
        assert parse.left_subtree_height == 0

    def test_no_parses_errors(self):
        with pytest.raises(ValueError, match="no parses"):
            naturalness_features([], [])


class TestWeights:
    def test_default_uniform(self):
        w = NaturalnessWeights.default()
        assert w.normalized() == (0.25, 0.25, 0.25, 0.25)

    def test_raw_score_weighted_mean(self):
        w = NaturalnessWeights(0.5, 0.25, 0.125, 0.125)
        assert raw_score((1.0, 2.0, 4.0, 8.0), w) == pytest.approx(
            0.5 * 1 + 0.25 * 2 + 0.125 * 4 + 0.125 * 8
        )

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            NaturalnessWeights(-0.1, 0.5, 0.3, 0.3)


class TestNormalization:
    def test_endpoints(self):
        scores, scale = naturalness_scores([2.0, 5.0, 11.0])
        assert scores[0] == 1.0  # corpus minimum
        assert scores[-1] == 0.0  # corpus maximum
        assert scale.minimum == 2.0 and scale.maximum == 11.0

    def test_monotone_decreasing_in_raw(self):
        scores, _ = naturalness_scores([1.0, 2.0, 3.0, 4.0])
        assert scores == sorted(scores, reverse=True)

    def test_degenerate_corpus_all_half(self):
        scores, _ = naturalness_scores([3.0, 3.0, 3.0])
        assert scores == [0.5, 0.5, 0.5]

    def test_frozen_scale_reused_and_clamped(self):
        _, scale = naturalness_scores([2.0, 6.0])
        later, same_scale = naturalness_scores([0.0, 4.0, 10.0], scale=scale)
        assert same_scale is scale
        assert later[0] == 1.0  # below baseline min clamps
        assert later[1] == pytest.approx(0.5)
        assert later[2] == 0.0  # above baseline max clamps

    def test_empty_corpus_errors(self):
        with pytest.raises(ValueError):
            NaturalnessScale.fit([])

    def test_level(self):
        assert categorize("naturalness", 0.65) == "Avg"
