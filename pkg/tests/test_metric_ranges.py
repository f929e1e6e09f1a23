"""Range invariants for every metric over arbitrary fuzzed text."""

import math

from hypothesis import given, settings
from hypothesis import strategies as st

from sumlens.annotate import HeuristicAnnotator
from sumlens.metrics import complexity, formality_mtld, load_lexicon, sentiment
from sumlens.metrics.faithfulness import faithfulness
from sumlens.textstats import tokenize

LEX = load_lexicon()
ANNOTATOR = HeuristicAnnotator()

# words + punctuation + numbers + caps, to exercise every heuristic branch
_WORDS = st.sampled_from(
    "the cat sat not good GREAT very bad Alice Paris 2020 ran ! . ? , and joy a".split()
)
texts = st.lists(_WORDS, min_size=0, max_size=60).map(" ".join)


@given(texts)
@settings(max_examples=200, deadline=None)
def test_scores_stay_in_declared_ranges(text):
    tokenized = tokenize(text)

    value = sentiment(tokenized, LEX)
    assert -1.0 <= value <= 1.0

    if tokenized.word_count > 0:
        assert 0.0 <= complexity(tokenized) <= 100.0
        mtld_value = formality_mtld(tokenized)
        assert mtld_value >= 0.0 and math.isfinite(mtld_value)

    article_entities = ANNOTATOR.entities(tokenize("Alice met Bob in Paris in 2020."))
    summary_entities = ANNOTATOR.entities(tokenized)
    assert 0.0 <= faithfulness(article_entities, summary_entities) <= 1.0


@given(texts)
@settings(max_examples=150, deadline=None)
def test_parses_validate_on_fuzzed_text(text):
    bundle = ANNOTATOR.bundle(tokenize(text))
    for parse in bundle.parses:
        parse.validate()
        assert parse.tree_height >= 1
