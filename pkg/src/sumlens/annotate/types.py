"""Annotation data types shared by entity and dependency providers."""

from __future__ import annotations

from dataclasses import dataclass


class AnnotationError(Exception):
    pass


ENTITY_LABELS = ("PERSON", "ORG", "LOC", "DATE", "NUM", "MISC")


@dataclass(frozen=True)
class EntityMention:
    text: str
    start: int
    end: int
    label: str = "MISC"

    def validate_against(self, source: str) -> None:
        if not (0 <= self.start <= self.end <= len(source)) or source[self.start : self.end] != self.text:
            raise AnnotationError(
                f"annotation misaligned: {self.text!r} at [{self.start},{self.end})"
            )


@dataclass(frozen=True)
class SentenceParse:
    """Dependency tree over one sentence's word tokens.

    ``heads[i]`` is the head index of token i; the root's head is itself.
    """

    heads: tuple[int, ...]
    root_index: int

    @property
    def token_count(self) -> int:
        return len(self.heads)

    def validate(self) -> None:
        n = len(self.heads)
        if n == 0:
            raise AnnotationError("empty parse")
        if not (0 <= self.root_index < n) or self.heads[self.root_index] != self.root_index:
            raise AnnotationError("parse has no valid root")
        roots = [i for i, h in enumerate(self.heads) if h == i]
        if roots != [self.root_index]:
            raise AnnotationError("parse must have exactly one root")
        for i, h in enumerate(self.heads):
            if not 0 <= h < n:
                raise AnnotationError(f"head index out of range at token {i}")
        # every token must reach the root (no cycles off the root)
        for i in range(n):
            seen = set()
            node = i
            while node != self.root_index:
                if node in seen:
                    raise AnnotationError(f"cycle detected at token {i}")
                seen.add(node)
                node = self.heads[node]

    def children(self, index: int) -> list[int]:
        return [i for i, h in enumerate(self.heads) if h == index and i != index]

    def _height(self, index: int) -> int:
        kids = self.children(index)
        if not kids:
            return 1
        return 1 + max(self._height(k) for k in kids)

    @property
    def tree_height(self) -> int:
        return self._height(self.root_index)

    @property
    def left_subtree_height(self) -> int:
        left = [k for k in self.children(self.root_index) if k < self.root_index]
        return max((self._height(k) for k in left), default=0)

    @property
    def right_subtree_height(self) -> int:
        right = [k for k in self.children(self.root_index) if k > self.root_index]
        return max((self._height(k) for k in right), default=0)


@dataclass(frozen=True)
class AnnotationBundle:
    entities: tuple[EntityMention, ...]
    parses: tuple[SentenceParse, ...]
    sentence_word_counts: tuple[int, ...]
    provider_id: str
