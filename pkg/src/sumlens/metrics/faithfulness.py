"""Faithfulness: overlap of top article entities with summary entities.

Entities from both texts are disambiguated into fuzzy-match groups; the
article groups are ranked by fuzzy occurrence count, a comparison set T is
chosen (with a penalty rule when the summary mentions very few entities
while the article has many), and the score is the fraction of T matched by
some summary entity.
"""

from __future__ import annotations

from typing import Sequence

from sumlens.annotate import EntityMention, disjoint_entity_sets, fuzzy_ratio, similar_entities

DEFAULT_EPSILON = 0.7


def _unique_ranked(mentions: Sequence[EntityMention], epsilon: float) -> list[str]:
    """Disambiguate mentions; representatives ranked by fuzzy occurrence.

    Rank is descending by the number of raw mentions fuzzily matching the
    representative; ties keep first-appearance order.
    """
    texts = [m.text for m in mentions]
    matrix = similar_entities(texts, epsilon)
    groups, reps = disjoint_entity_sets(matrix, texts)

    ranked = []
    for group, rep in zip(groups, reps):
        count = sum(1 for t in texts if fuzzy_ratio(rep, t) >= epsilon)
        first = min(group)
        ranked.append((-count, first, rep))
    ranked.sort()
    return [rep for _, _, rep in ranked]


def _unique_summary(mentions: Sequence[EntityMention], epsilon: float) -> list[str]:
    texts = [m.text for m in mentions]
    _, reps = disjoint_entity_sets(similar_entities(texts, epsilon), texts)
    return reps


def top_article_entities(unique_article: list[str], unique_summary: list[str]) -> list[str]:
    """Pick the article entities the summary is expected to preserve."""
    n_summary = len(unique_summary)
    n_article = len(unique_article)
    if n_summary < 3 and n_article > 4:
        return unique_article[:5]
    if n_article < n_summary or n_summary == 0:
        return list(unique_article)
    return unique_article[:n_summary]


def faithfulness(
    article_entities: Sequence[EntityMention],
    summary_entities: Sequence[EntityMention],
    epsilon: float = DEFAULT_EPSILON,
) -> float:
    if not 0 < epsilon <= 1:
        raise ValueError("epsilon must be in (0, 1]")

    unique_article = _unique_ranked(article_entities, epsilon)
    if not unique_article:
        return 1.0
    unique_summary = _unique_summary(summary_entities, epsilon)

    top = top_article_entities(unique_article, unique_summary)
    matches = sum(
        1
        for summary_ent in unique_summary
        for top_ent in top
        if fuzzy_ratio(summary_ent, top_ent) >= epsilon
    )
    return min(max(matches / len(top), 0.0), 1.0)
