"""Complexity: inverse reading-ease score from sentence and syllable counts."""

from __future__ import annotations

from typing import Callable

from sumlens.textstats import TokenizedText, count_syllables


def reading_ease(text: TokenizedText, syllable_counter: Callable[[str], int] = count_syllables) -> float:
    """Raw reading-ease value r (higher = easier to read)."""
    if text.word_count == 0 or text.sentence_count == 0:
        raise ValueError("no words")
    syllables = sum(syllable_counter(t.lower) for t in text.tokens if t.is_word)
    return (
        206.835
        - 1.015 * (text.word_count / text.sentence_count)
        - 84.6 * (syllables / text.word_count)
    )


def complexity(text: TokenizedText, syllable_counter: Callable[[str], int] = count_syllables) -> float:
    """Complexity score in [0, 100]: 100 minus the clamped reading ease."""
    r = min(max(reading_ease(text, syllable_counter), 0.0), 100.0)
    return 100.0 - r
