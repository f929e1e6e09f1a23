"""Naturalness: dependency-shape statistics normalized over a corpus.

Each summary yields four raw structural features (average left/right
subtree heights, average tree height, average sentence length). A weighted
mean collapses them to one raw value; min-max normalization over the
baseline corpus, inverted so that flatter/shorter structure scores higher,
gives the final [0, 1] score. The baseline min/max are frozen and reused
for every later run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

from sumlens.annotate import SentenceParse

FEATURE_ORDER = ("left_subtree", "right_subtree", "tree_height", "sentence_length")


@dataclass(frozen=True)
class NaturalnessWeights:
    left_subtree: float
    right_subtree: float
    tree_height: float
    sentence_length: float

    def __post_init__(self):
        values = self.as_tuple()
        if any(w < 0 for w in values):
            raise ValueError("weights must be nonnegative")
        if sum(values) <= 0:
            raise ValueError("weights must not all be zero")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.left_subtree, self.right_subtree, self.tree_height, self.sentence_length)

    def normalized(self) -> tuple[float, float, float, float]:
        total = sum(self.as_tuple())
        return tuple(w / total for w in self.as_tuple())

    @classmethod
    def from_file(cls, path: str | Path) -> "NaturalnessWeights":
        return cls(**json.loads(Path(path).read_text("utf-8")))

    @classmethod
    def default(cls) -> "NaturalnessWeights":
        data = resources.files("sumlens.metrics").joinpath("data", "naturalness_weights.json").read_text("utf-8")
        return cls(**json.loads(data))


def naturalness_features(
    parses: Sequence[SentenceParse], sentence_word_counts: Sequence[int]
) -> tuple[float, float, float, float]:
    """Average (left subtree, right subtree, tree height, sentence length)."""
    if not parses:
        raise ValueError("no parses")
    if len(parses) != len(sentence_word_counts):
        raise ValueError("parses and sentence lengths misaligned")
    n = len(parses)
    left = sum(p.left_subtree_height for p in parses) / n
    right = sum(p.right_subtree_height for p in parses) / n
    height = sum(p.tree_height for p in parses) / n
    length = sum(sentence_word_counts) / n
    return (left, right, height, length)


def raw_score(
    features: tuple[float, float, float, float], weights: NaturalnessWeights | None = None
) -> float:
    """Weighted mean of the four structural features (unnormalized)."""
    weights = weights or NaturalnessWeights.default()
    return sum(w * x for w, x in zip(weights.normalized(), features))


@dataclass(frozen=True)
class NaturalnessScale:
    """Frozen min/max of raw scores on the baseline corpus."""

    minimum: float
    maximum: float

    @classmethod
    def fit(cls, raw_scores: Sequence[float]) -> "NaturalnessScale":
        if not raw_scores:
            raise ValueError("empty corpus")
        return cls(minimum=min(raw_scores), maximum=max(raw_scores))

    def score(self, raw: float) -> float:
        """Normalize and invert: corpus minimum -> 1.0, maximum -> 0.0."""
        if self.maximum == self.minimum:
            return 0.5
        value = 1.0 - (raw - self.minimum) / (self.maximum - self.minimum)
        return min(max(value, 0.0), 1.0)


def naturalness_scores(
    raw_scores: Sequence[float], scale: NaturalnessScale | None = None
) -> tuple[list[float], NaturalnessScale]:
    """Score a corpus; fits a new scale when none is supplied."""
    if scale is None:
        scale = NaturalnessScale.fit(raw_scores)
    return [scale.score(x) for x in raw_scores], scale
