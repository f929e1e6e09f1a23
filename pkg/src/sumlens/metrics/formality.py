"""Formality via lexical diversity (bidirectional MTLD over word stems)."""

from __future__ import annotations

from typing import Callable

from sumlens.textstats import TokenizedText, stem

TTR_THRESHOLD = 0.72


def _factor_count(tokens: list[str], threshold: float) -> float:
    """One directional pass: full factors plus the trailing partial factor."""
    factors = 0.0
    types: set[str] = set()
    count = 0
    ttr = 1.0
    for tok in tokens:
        count += 1
        types.add(tok)
        ttr = len(types) / count
        if ttr <= threshold:
            factors += 1.0
            types.clear()
            count = 0
            ttr = 1.0
    factors += (1.0 - ttr) / (1.0 - threshold)
    return factors


def mtld(stems: list[str], threshold: float = TTR_THRESHOLD) -> float:
    """Bidirectional measure of textual lexical diversity.

    Word count divided by the mean of the forward and backward factor
    counts; a zero factor count (all stems distinct) degrades to the
    word count itself.
    """
    if not stems:
        raise ValueError("no words")
    forward = _factor_count(stems, threshold)
    backward = _factor_count(list(reversed(stems)), threshold)
    mean_factors = (forward + backward) / 2.0
    if mean_factors == 0.0:
        return float(len(stems))
    return len(stems) / mean_factors


def formality_mtld(text: TokenizedText, stemmer: Callable[[str], str] = stem) -> float:
    if text.word_count == 0:
        raise ValueError("no words")
    stems = [stemmer(t.lower) for t in text.tokens if t.is_word]
    return mtld(stems)
