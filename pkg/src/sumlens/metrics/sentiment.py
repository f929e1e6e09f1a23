"""Lexicon-based sentiment scoring with rule adjustments.

Per-word valences come from a shipped term/valence lexicon (range [-4, 4],
normalized by 4). Four heuristics adjust a hit before averaging: negation
within a window of preceding words flips the sign, booster words scale the
next hit, ALL-CAPS emphasis scales the hit, and a sentence-final "!" scales
every hit in that sentence. The score is the adjusted sum divided by the
total word count, clamped to [-1, 1].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from sumlens.textstats import TokenizedText


@dataclass(frozen=True)
class SentimentRules:
    valence_scale: float = 4.0
    negation_scalar: float = -0.74
    negation_window: int = 3
    booster_scale: float = 1.29
    allcaps_scale: float = 1.15
    exclaim_scale: float = 1.09

    @classmethod
    def from_file(cls, path: str | Path) -> "SentimentRules":
        return cls(**json.loads(Path(path).read_text("utf-8")))


def _data(name: str) -> str:
    return resources.files("sumlens.metrics").joinpath("data", name).read_text("utf-8")


def load_lexicon(path: str | Path | None = None) -> dict[str, float]:
    """Load a term<TAB>valence lexicon; defaults to the shipped one."""
    try:
        text = _data("sentiment_lexicon.tsv") if path is None else Path(path).read_text("utf-8")
    except OSError as exc:
        raise ValueError(f"lexicon unavailable: {path}") from exc
    lexicon: dict[str, float] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        term, valence = line.split("\t")
        lexicon[term.lower()] = float(valence)
    return lexicon


def _wordlist(name: str) -> frozenset[str]:
    return frozenset(
        line.strip().lower() for line in _data(name).splitlines() if line.strip() and not line.startswith("#")
    )


_DEFAULT_RULES = SentimentRules(**json.loads(_data("sentiment_constants.json")))
_BOOSTERS = _wordlist("sentiment_boosters.txt")
_NEGATIONS = _wordlist("sentiment_negations.txt")


def sentiment(
    text: TokenizedText,
    lexicon: dict[str, float],
    rules: SentimentRules | None = None,
    boosters: frozenset[str] | None = None,
    negations: frozenset[str] | None = None,
) -> float:
    rules = rules or _DEFAULT_RULES
    boosters = _BOOSTERS if boosters is None else boosters
    negations = _NEGATIONS if negations is None else negations

    if text.word_count == 0:
        return 0.0

    total = 0.0
    for idx in range(text.sentence_count):
        words = [t for t in text.sentence_tokens(idx) if t.is_word]
        sent_toks = text.sentence_tokens(idx)
        exclaim = bool(sent_toks) and sent_toks[-1].surface == "!"

        boost_pending = False
        for pos, tok in enumerate(words):
            if tok.lower in boosters:
                boost_pending = True
                continue
            valence = lexicon.get(tok.lower)
            if valence is None:
                continue
            value = valence / rules.valence_scale
            if boost_pending:
                value *= rules.booster_scale
                boost_pending = False
            window = words[max(0, pos - rules.negation_window) : pos]
            if any(w.lower in negations for w in window):
                value *= rules.negation_scalar
            if tok.surface.isupper() and len(tok.surface) > 1:
                value *= rules.allcaps_scale
            if exclaim:
                value *= rules.exclaim_scale
            total += value

    score = total / text.word_count
    return min(max(score, -1.0), 1.0)
