"""The six feature metrics, their level tables, and vector assembly."""

from sumlens.metrics.complexity import complexity, reading_ease
from sumlens.metrics.faithfulness import faithfulness, top_article_entities
from sumlens.metrics.formality import formality_mtld, mtld
from sumlens.metrics.levels import FEATURES, LEVEL_TABLES, categorize, level_bounds, levels_for
from sumlens.metrics.naturalness import (
    NaturalnessScale,
    NaturalnessWeights,
    naturalness_features,
    naturalness_scores,
    raw_score,
)
from sumlens.metrics.sentiment import SentimentRules, load_lexicon, sentiment
from sumlens.metrics.vector import (
    FeatureComputationError,
    FeatureLevels,
    FeatureScores,
    build_feature_vector,
)

__all__ = [
    "complexity",
    "reading_ease",
    "formality_mtld",
    "mtld",
    "sentiment",
    "SentimentRules",
    "load_lexicon",
    "faithfulness",
    "top_article_entities",
    "naturalness_features",
    "naturalness_scores",
    "raw_score",
    "NaturalnessScale",
    "NaturalnessWeights",
    "FEATURES",
    "LEVEL_TABLES",
    "categorize",
    "levels_for",
    "level_bounds",
    "FeatureScores",
    "FeatureLevels",
    "FeatureComputationError",
    "build_feature_vector",
]
