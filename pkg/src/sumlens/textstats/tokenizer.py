"""Deterministic tokenization and sentence splitting for English text."""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

# Word-ish token: alphanumeric runs glued by internal hyphens/apostrophes
# ("state-of-the-art", "don't"), otherwise any single non-space character.
_TOKEN_RE = re.compile(r"[A-Za-z0-9]+(?:['’-][A-Za-z0-9]+)*|[^\sA-Za-z0-9]")

_TERMINALS = {".", "!", "?"}


def _load_wordlist(name: str) -> frozenset[str]:
    text = resources.files("sumlens.textstats").joinpath("data", name).read_text("utf-8")
    return frozenset(
        line.strip().lower() for line in text.splitlines() if line.strip() and not line.startswith("#")
    )


_DEFAULT_ABBREVIATIONS = _load_wordlist("abbreviations.txt")


@dataclass(frozen=True)
class Token:
    surface: str
    lower: str
    start: int
    end: int
    is_word: bool


@dataclass(frozen=True)
class TokenizedText:
    """Tokens plus sentence segmentation over a source string.

    ``sentences`` holds half-open ``(start, end)`` token-index ranges that
    partition the token list in order.
    """

    text: str
    tokens: tuple[Token, ...]
    sentences: tuple[tuple[int, int], ...]
    word_count: int
    sentence_count: int

    def words(self) -> list[Token]:
        return [t for t in self.tokens if t.is_word]

    def sentence_tokens(self, index: int) -> list[Token]:
        start, end = self.sentences[index]
        return list(self.tokens[start:end])

    def sentence_text(self, index: int) -> str:
        toks = self.sentence_tokens(index)
        if not toks:
            return ""
        return self.text[toks[0].start : toks[-1].end]


def _is_word(surface: str) -> bool:
    return any(ch.isalpha() for ch in surface)


def tokenize(text: str, abbreviations: frozenset[str] | None = None) -> TokenizedText:
    """Tokenize ``text`` and split it into sentences.

    Sentence boundaries sit after ``.``, ``!`` or ``?`` followed by
    whitespace or end of input; a ``.`` directly after an abbreviation
    (``Dr.``, ``etc.``) does not split. Text without terminal punctuation
    degrades to a single sentence.
    """
    abbrevs = _DEFAULT_ABBREVIATIONS if abbreviations is None else abbreviations
    tokens: list[Token] = []
    for m in _TOKEN_RE.finditer(text):
        surface = m.group(0)
        tokens.append(
            Token(
                surface=surface,
                lower=surface.lower(),
                start=m.start(),
                end=m.end(),
                is_word=_is_word(surface),
            )
        )

    boundaries: list[int] = []  # index one past the sentence-final token
    for i, tok in enumerate(tokens):
        if tok.surface not in _TERMINALS:
            continue
        at_eof = i == len(tokens) - 1
        followed_by_space = at_eof or tokens[i + 1].start > tok.end
        if not followed_by_space:
            continue
        if tok.surface == "." and i > 0 and tokens[i - 1].lower in abbrevs:
            continue
        boundaries.append(i + 1)

    sentences: list[tuple[int, int]] = []
    prev = 0
    for b in boundaries:
        sentences.append((prev, b))
        prev = b
    if prev < len(tokens):
        sentences.append((prev, len(tokens)))

    return TokenizedText(
        text=text,
        tokens=tuple(tokens),
        sentences=tuple(sentences),
        word_count=sum(1 for t in tokens if t.is_word),
        sentence_count=len(sentences),
    )
