"""Complexity metric against hand-evaluated reading-ease formulas.

Each fixture's word, sentence, and syllable counts were tallied by hand
under the stated rules (words = alphabetic-bearing tokens; syllables =
vowel groups with the silent-e adjustment); r = 206.835 - 1.015*(W/S) -
84.6*(Y/W) was then evaluated by hand and complexity = clamp(100 - r).
"""

import pytest

from sumlens.metrics import categorize, complexity, reading_ease
from sumlens.textstats import tokenize


def hand_r(words: int, sentences: int, syllables: int) -> float:
    return 206.835 - 1.015 * (words / sentences) - 84.6 * (syllables / words)


def clamp_complexity(r: float) -> float:
    return 100.0 - min(max(r, 0.0), 100.0)


# (text, words, sentences, syllables)
CASES = [
    ("The cat sat.", 3, 1, 3),
    ("The cat sat on the mat.", 6, 1, 6),
    ("The cat sat. The dog ran.", 6, 2, 6),
    ("Dogs bark. Cats nap. Birds sing.", 6, 3, 6),
    ("The happy dog ran to the park.", 7, 1, 8),
    ("A big red fox hid in the tall dry grass.", 10, 1, 10),
    ("Walking slowly, the old man crossed the street.", 8, 1, 11),
    ("Remarkable developments demand careful analysis.", 5, 1, 17),
    ("Extraordinary communication necessitates sophisticated vocabulary.", 5, 1, 25),
    ("Institutional responsibilities require considerable documentation. Administrative personnel evaluate operational procedures.", 10, 2, 43),
]


@pytest.mark.parametrize("text,words,sentences,syllables", CASES)
def test_against_hand_formula(text, words, sentences, syllables):
    t = tokenize(text)
    assert t.word_count == words
    assert t.sentence_count == sentences
    expected_r = hand_r(words, sentences, syllables)
    assert reading_ease(t) == pytest.approx(expected_r, abs=1e-9)
    assert complexity(t) == pytest.approx(clamp_complexity(expected_r), abs=1e-9)


def test_trivial_text_clamps_to_zero():
    # r = 206.835 - 1.015*3 - 84.6*1 = 119.19 -> clamped, complexity 0
    t = tokenize("The cat sat.")
    assert reading_ease(t) == pytest.approx(119.19, abs=1e-9)
    assert complexity(t) == 0.0


def test_empty_errors():
    with pytest.raises(ValueError, match="no words"):
        complexity(tokenize(""))


def test_levels():
    assert categorize("complexity", 95) == "Professional"
    assert categorize("complexity", 25) == "Middle School"


def test_range_on_varied_inputs():
    texts = [c[0] for c in CASES]
    for text in texts:
        value = complexity(tokenize(text))
        assert 0.0 <= value <= 100.0
