"""Entity and dependency annotation providers.

Two providers ship with the system: a self-contained heuristic provider
(capitalization/number rules for entities, a rule-based head assigner for
dependencies) and a pass-through provider that replays annotations
precomputed offline with any external tagger or parser.
"""

from __future__ import annotations

import json
import re
from importlib import resources
from pathlib import Path

from sumlens.annotate.types import (
    AnnotationBundle,
    AnnotationError,
    EntityMention,
    SentenceParse,
)
from sumlens.textstats import Token, TokenizedText

_YEAR_RE = re.compile(r"^\d{4}$")
_NUMBER_RE = re.compile(r"^\d+(?:\.\d+)?$")
_SCALE_WORDS = {"million", "billion", "thousand", "trillion"}
_DETERMINERS = {
    "the", "a", "an", "this", "that", "these", "those",
    "my", "your", "his", "her", "its", "our", "their",
}
_ADJ_SUFFIXES = ("ous", "ful", "ive", "able", "ible", "ish", "less")
# Capitalized function words that should never become entities on their own.
_ENTITY_STOPWORDS = {"i", "a", "the"}


def _load_wordlist(name: str) -> frozenset[str]:
    text = resources.files("sumlens.annotate").joinpath("data", name).read_text("utf-8")
    return frozenset(
        line.strip().lower() for line in text.splitlines() if line.strip() and not line.startswith("#")
    )


class HeuristicAnnotator:
    """Built-in annotation provider; deterministic and dependency-free."""

    provider_id = "heuristic"

    def __init__(self, verbs: frozenset[str] | None = None, gazetteer: frozenset[str] | None = None):
        self.verbs = verbs if verbs is not None else _load_wordlist("verbs.txt")
        self.gazetteer = gazetteer if gazetteer is not None else _load_wordlist("gazetteer.txt")

    # -- entities ------------------------------------------------------

    def entities(self, text: TokenizedText) -> list[EntityMention]:
        mentions: list[EntityMention] = []
        for s_start, s_end in text.sentences:
            toks = text.tokens[s_start:s_end]
            word_positions = [i for i, t in enumerate(toks) if t.is_word]
            first_word = word_positions[0] if word_positions else -1

            i = 0
            while i < len(toks):
                tok = toks[i]
                if tok.is_word and tok.surface[:1].isupper() and tok.lower not in _ENTITY_STOPWORDS:
                    j = i
                    while (
                        j + 1 < len(toks)
                        and toks[j + 1].is_word
                        and toks[j + 1].surface[:1].isupper()
                        and toks[j + 1].lower not in _ENTITY_STOPWORDS
                    ):
                        j += 1
                    run = toks[i : j + 1]
                    at_sentence_start = i == first_word
                    keep = not at_sentence_start or len(run) > 1 or run[0].lower in self.gazetteer
                    if keep:
                        mentions.append(self._mention(text.text, run, "MISC"))
                    i = j + 1
                    continue

                if not tok.is_word and _YEAR_RE.match(tok.surface):
                    mentions.append(self._mention(text.text, [tok], "DATE"))
                elif tok.surface in {"$", "€", "£"} and i + 1 < len(toks) and _NUMBER_RE.match(toks[i + 1].surface):
                    run = [tok, toks[i + 1]]
                    if i + 2 < len(toks) and toks[i + 2].lower in _SCALE_WORDS:
                        run.append(toks[i + 2])
                    mentions.append(self._mention(text.text, run, "NUM"))
                    i += len(run)
                    continue
                elif (
                    not tok.is_word
                    and _NUMBER_RE.match(tok.surface)
                    and not _YEAR_RE.match(tok.surface)
                    and i + 1 < len(toks)
                    and toks[i + 1].surface == "%"
                ):
                    mentions.append(self._mention(text.text, [tok, toks[i + 1]], "NUM"))
                    i += 2
                    continue
                i += 1

        seen: set[tuple[int, int]] = set()
        unique = []
        for m in mentions:
            key = (m.start, m.end)
            if key not in seen:
                seen.add(key)
                unique.append(m)
        return unique

    @staticmethod
    def _mention(source: str, run: list[Token], label: str) -> EntityMention:
        start, end = run[0].start, run[-1].end
        return EntityMention(text=source[start:end], start=start, end=end, label=label)

    # -- dependency parses ---------------------------------------------

    def parse_sentence(self, words: list[Token]) -> SentenceParse:
        """Assign heads to one sentence's word tokens.

        Root is the first verb-lexicon token, else the token nearest the
        midpoint. Determiners and suffix-guessed adjectives attach to the
        nearest following noun-like token; everything else attaches to
        the root.
        """
        n = len(words)
        if n == 0:
            raise AnnotationError("cannot parse an empty sentence")

        root = next((i for i, w in enumerate(words) if w.lower in self.verbs), None)
        if root is None:
            mid = (n - 1) / 2
            root = min(range(n), key=lambda i: (abs(i - mid), i))

        def is_det_or_adj(tok: Token) -> bool:
            return tok.lower in _DETERMINERS or tok.lower.endswith(_ADJ_SUFFIXES)

        def is_noun_like(i: int) -> bool:
            tok = words[i]
            return not is_det_or_adj(tok) and tok.lower not in self.verbs

        heads = [root] * n
        for i, tok in enumerate(words):
            if i == root:
                heads[i] = i
            elif is_det_or_adj(tok):
                target = next((j for j in range(i + 1, n) if is_noun_like(j)), root)
                heads[i] = target

        parse = SentenceParse(heads=tuple(heads), root_index=root)
        parse.validate()
        return parse

    def parses(self, text: TokenizedText) -> tuple[list[SentenceParse], list[int]]:
        """Parse every word-bearing sentence; returns (parses, word counts)."""
        parses: list[SentenceParse] = []
        counts: list[int] = []
        for idx in range(text.sentence_count):
            words = [t for t in text.sentence_tokens(idx) if t.is_word]
            if not words:
                continue
            parses.append(self.parse_sentence(words))
            counts.append(len(words))
        return parses, counts

    def bundle(self, text: TokenizedText, ref: str | None = None) -> AnnotationBundle:
        parses, counts = self.parses(text)
        return AnnotationBundle(
            entities=tuple(self.entities(text)),
            parses=tuple(parses),
            sentence_word_counts=tuple(counts),
            provider_id=self.provider_id,
        )


def extract_entities(text: TokenizedText, provider, ref: str | None = None) -> list[EntityMention]:
    """Entity mentions for a text from the given provider."""
    return list(provider.bundle(text, ref=ref).entities)


def parse_dependencies(sentence_words: list[Token], provider) -> SentenceParse:
    """Dependency parse of one sentence's word tokens."""
    if hasattr(provider, "parse_sentence"):
        return provider.parse_sentence(sentence_words)
    raise AnnotationError(
        "provider cannot parse ad-hoc sentences; use bundle() with a ref"
    )


class PrecomputedAnnotator:
    """Replays annotations from a JSON-lines file.

    Each line: {"ref": {"doc_id": ...} | {"summary_id": ...},
                "entities": [{"text", "span": [s, e], "label"}],
                "parses": [{"heads": [...], "root": r}]}
    """

    provider_id = "precomputed"

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._records: dict[str, dict] = {}
        try:
            lines = self.path.read_text("utf-8").splitlines()
        except OSError as exc:
            raise AnnotationError(f"annotations unavailable: {path}") from exc
        for lineno, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise AnnotationError(f"bad annotation record at line {lineno}") from exc
            ref = record.get("ref", {})
            key = ref.get("doc_id") or ref.get("summary_id")
            if key is None:
                raise AnnotationError(f"annotation record at line {lineno} has no ref")
            self._records[str(key)] = record

    def bundle(self, text: TokenizedText, ref: str | None = None) -> AnnotationBundle:
        if ref is None or ref not in self._records:
            raise AnnotationError(f"annotations unavailable for ref {ref!r}")
        record = self._records[ref]

        entities = []
        for ent in record.get("entities", []):
            mention = EntityMention(
                text=ent["text"],
                start=int(ent["span"][0]),
                end=int(ent["span"][1]),
                label=ent.get("label", "MISC"),
            )
            mention.validate_against(text.text)
            entities.append(mention)

        parses = []
        counts = []
        for p in record.get("parses", []):
            parse = SentenceParse(heads=tuple(int(h) for h in p["heads"]), root_index=int(p["root"]))
            parse.validate()
            parses.append(parse)
            counts.append(parse.token_count)

        return AnnotationBundle(
            entities=tuple(entities),
            parses=tuple(parses),
            sentence_word_counts=tuple(counts),
            provider_id=self.provider_id,
        )
