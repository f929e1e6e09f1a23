"""Per-summary feature vector assembly."""

from __future__ import annotations

from dataclasses import dataclass, replace

from sumlens.annotate import AnnotationBundle
from sumlens.metrics import naturalness as nat
from sumlens.metrics.complexity import complexity
from sumlens.metrics.faithfulness import faithfulness
from sumlens.metrics.formality import formality_mtld
from sumlens.metrics.levels import FEATURES, categorize
from sumlens.metrics.sentiment import sentiment
from sumlens.textstats import tokenize


class FeatureComputationError(Exception):
    """Raised when one or more metrics fail; names each failed feature."""

    def __init__(self, failures: dict[str, str]):
        self.failures = failures
        detail = "; ".join(f"{k}: {v}" for k, v in sorted(failures.items()))
        super().__init__(f"feature computation failed ({detail})")


@dataclass(frozen=True)
class FeatureScores:
    complexity: float
    formality: float
    sentiment: float
    faithfulness: float
    naturalness_raw: float
    length: int
    naturalness: float | None = None  # None until corpus normalization

    def with_naturalness(self, value: float) -> "FeatureScores":
        return replace(self, naturalness=value)

    def as_vector(self) -> tuple[float, ...]:
        """Fixed-order numeric vector (complexity, formality, sentiment,
        faithfulness, naturalness, length)."""
        if self.naturalness is None:
            raise ValueError("naturalness still pending corpus normalization")
        return (
            self.complexity,
            self.formality,
            self.sentiment,
            self.faithfulness,
            self.naturalness,
            float(self.length),
        )

    def value_of(self, feature: str) -> float:
        value = getattr(self, feature)
        if value is None:
            raise ValueError(f"{feature} still pending")
        return float(value)


@dataclass(frozen=True)
class FeatureLevels:
    complexity: str
    formality: str
    sentiment: str
    faithfulness: str
    naturalness: str
    length: str

    @classmethod
    def from_scores(cls, scores: FeatureScores) -> "FeatureLevels":
        return cls(**{name: categorize(name, scores.value_of(name)) for name in FEATURES})


def build_feature_vector(
    summary_text: str,
    article_text: str,
    annotator,
    lexicon: dict[str, float],
    weights: nat.NaturalnessWeights | None = None,
    epsilon: float = 0.7,
    article_bundle: AnnotationBundle | None = None,
) -> FeatureScores:
    """Compute all six metrics for one summary against its article.

    Naturalness stays raw (pending) until the corpus pass. Metric failures
    are collected and raised together as FeatureComputationError.
    """
    summary_tok = tokenize(summary_text)
    article_tok = tokenize(article_text)

    failures: dict[str, str] = {}
    values: dict[str, float] = {}

    def attempt(name, fn):
        try:
            values[name] = fn()
        except (ValueError, ZeroDivisionError) as exc:
            failures[name] = str(exc)

    summary_bundle = annotator.bundle(summary_tok)
    if article_bundle is None:
        article_bundle = annotator.bundle(article_tok)

    attempt("complexity", lambda: complexity(summary_tok))
    attempt("formality", lambda: formality_mtld(summary_tok))
    attempt("sentiment", lambda: sentiment(summary_tok, lexicon))
    attempt(
        "faithfulness",
        lambda: faithfulness(article_bundle.entities, summary_bundle.entities, epsilon),
    )
    attempt(
        "naturalness",
        lambda: nat.raw_score(
            nat.naturalness_features(summary_bundle.parses, summary_bundle.sentence_word_counts),
            weights,
        ),
    )

    if failures:
        raise FeatureComputationError(failures)

    return FeatureScores(
        complexity=values["complexity"],
        formality=values["formality"],
        sentiment=values["sentiment"],
        faithfulness=values["faithfulness"],
        naturalness_raw=values["naturalness"],
        length=summary_tok.word_count,
    )
