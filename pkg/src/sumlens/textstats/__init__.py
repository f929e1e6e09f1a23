"""Deterministic low-level text statistics used by every feature metric."""

from sumlens.textstats.porter import stem
from sumlens.textstats.syllables import count_syllables
from sumlens.textstats.tokenizer import Token, TokenizedText, tokenize

__all__ = ["Token", "TokenizedText", "tokenize", "count_syllables", "stem"]
