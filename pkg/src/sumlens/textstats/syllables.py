"""Heuristic syllable counting (vowel-group rule plus exception list)."""

from __future__ import annotations

from importlib import resources

_VOWELS = set("aeiouy")


def _load_exceptions() -> dict[str, int]:
    text = resources.files("sumlens.textstats").joinpath("data", "syllable_exceptions.txt").read_text("utf-8")
    table: dict[str, int] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, count = line.split()
        table[word.lower()] = int(count)
    return table


_EXCEPTIONS = _load_exceptions()


def count_syllables(word: str, exceptions: dict[str, int] | None = None) -> int:
    """Count syllables in a single word.

    Contiguous vowel groups (aeiouy) count one syllable each; a trailing
    silent "e" is subtracted unless the word ends in consonant+"le".
    The result never drops below 1. Raises ValueError for input with no
    alphabetic characters.
    """
    letters = "".join(ch for ch in word.lower() if ch.isalpha())
    if not letters:
        raise ValueError(f"not a word: {word!r}")

    table = _EXCEPTIONS if exceptions is None else exceptions
    if letters in table:
        return table[letters]

    groups = 0
    in_group = False
    for ch in letters:
        if ch in _VOWELS:
            if not in_group:
                groups += 1
            in_group = True
        else:
            in_group = False

    if letters.endswith("e"):
        ends_cons_le = len(letters) >= 3 and letters.endswith("le") and letters[-3] not in _VOWELS
        if not ends_cons_le:
            groups -= 1

    return max(groups, 1)
