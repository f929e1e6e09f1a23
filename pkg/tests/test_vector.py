"""Feature-vector assembly: error bundling, composition, determinism."""

import pytest

from sumlens.annotate import HeuristicAnnotator
from sumlens.metrics import (
    FeatureComputationError,
    FeatureLevels,
    FeatureScores,
    complexity,
    faithfulness,
    formality_mtld,
    load_lexicon,
    sentiment,
)
from sumlens.metrics.vector import build_feature_vector
from sumlens.textstats import tokenize

ARTICLE = "Alice met Bob in Paris. They walked to the old bridge. The day was great fun."
SUMMARY = "Alice met Bob in Paris. The day was great fun."


@pytest.fixture(scope="module")
def annotator():
    return HeuristicAnnotator()


@pytest.fixture(scope="module")
def lexicon():
    return load_lexicon()


def test_empty_summary_error_bundle_names_failing_features(annotator, lexicon):
    with pytest.raises(FeatureComputationError) as excinfo:
        build_feature_vector("", ARTICLE, annotator, lexicon)
    failures = excinfo.value.failures
    assert "complexity" in failures
    assert "formality" in failures


def test_vector_matches_componentwise_metrics(annotator, lexicon):
    scores = build_feature_vector(SUMMARY, ARTICLE, annotator, lexicon)
    tok = tokenize(SUMMARY)
    assert scores.complexity == complexity(tok)
    assert scores.formality == formality_mtld(tok)
    assert scores.sentiment == sentiment(tok, lexicon)
    article_entities = annotator.entities(tokenize(ARTICLE))
    summary_entities = annotator.entities(tok)
    assert scores.faithfulness == faithfulness(article_entities, summary_entities)
    assert scores.length == tok.word_count


def test_recomputation_is_identical(annotator, lexicon):
    a = build_feature_vector(SUMMARY, ARTICLE, annotator, lexicon)
    b = build_feature_vector(SUMMARY, ARTICLE, annotator, lexicon)
    assert a == b


def test_naturalness_pending_until_normalized(annotator, lexicon):
    scores = build_feature_vector(SUMMARY, ARTICLE, annotator, lexicon)
    assert scores.naturalness is None
    with pytest.raises(ValueError, match="pending"):
        scores.as_vector()
    finalized = scores.with_naturalness(0.5)
    assert len(finalized.as_vector()) == 6


def test_levels_from_scores():
    scores = FeatureScores(
        complexity=95.0,
        formality=150.0,
        sentiment=0.45,
        faithfulness=0.7,
        naturalness_raw=3.0,
        length=512,
        naturalness=0.65,
    )
    levels = FeatureLevels.from_scores(scores)
    assert levels.complexity == "Professional"
    assert levels.formality == "Formal"
    assert levels.sentiment == "Positive"
    assert levels.faithfulness == "Good"
    assert levels.naturalness == "Avg"
    assert levels.length == "Very Long"
