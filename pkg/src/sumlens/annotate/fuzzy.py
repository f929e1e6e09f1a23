"""Fuzzy string matching and entity-group disambiguation."""

from __future__ import annotations

from typing import Sequence


def _normalize(s: str) -> str:
    return " ".join(s.casefold().split())


def _edit_distance(a: str, b: str) -> int:
    if len(a) > len(b):
        a, b = b, a
    current = list(range(len(a) + 1))
    for i in range(1, len(b) + 1):
        previous, current = current, [i] + [0] * len(a)
        for j in range(1, len(a) + 1):
            cost = 0 if a[j - 1] == b[i - 1] else 1
            current[j] = min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost)
    return current[len(a)]


def fuzzy_ratio(a: str, b: str) -> float:
    """Normalized edit-distance similarity in [0, 1].

    Strings are case-folded and whitespace-normalized first;
    ratio = 1 - distance / max(len). Two empty strings match exactly.
    """
    a, b = _normalize(a), _normalize(b)
    if not a and not b:
        return 1.0
    longest = max(len(a), len(b))
    return 1.0 - _edit_distance(a, b) / longest


def similar_entities(texts: Sequence[str], epsilon: float) -> list[list[int]]:
    """Binary pairwise similarity matrix: 1 iff fuzzy_ratio >= epsilon."""
    if not 0 < epsilon <= 1:
        raise ValueError("epsilon must be in (0, 1]")
    n = len(texts)
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        matrix[i][i] = 1
        for j in range(i + 1, n):
            hit = 1 if fuzzy_ratio(texts[i], texts[j]) >= epsilon else 0
            matrix[i][j] = matrix[j][i] = hit
    return matrix


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def disjoint_entity_sets(
    matrix: Sequence[Sequence[int]], texts: Sequence[str]
) -> tuple[list[list[int]], list[str]]:
    """Group entities into connected components of the similarity matrix.

    Returns (groups, representatives): groups are lists of indices ordered
    by first appearance; each representative is the longest mention string
    in its group (ties broken lexicographically).
    """
    n = len(texts)
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError("similarity matrix does not match entity list")

    uf = _UnionFind(n)
    for i in range(n):
        for j in range(i + 1, n):
            if matrix[i][j]:
                uf.union(i, j)

    by_root: dict[int, list[int]] = {}
    for i in range(n):
        by_root.setdefault(uf.find(i), []).append(i)

    groups = [members for _, members in sorted(by_root.items())]
    representatives = [
        min((texts[i] for i in members), key=lambda s: (-len(s), s))
        for members in groups
    ]
    return groups, representatives
