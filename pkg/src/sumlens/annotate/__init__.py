"""Entity/dependency annotation, fuzzy matching, and entity grouping."""

from sumlens.annotate.fuzzy import disjoint_entity_sets, fuzzy_ratio, similar_entities
from sumlens.annotate.providers import (
    HeuristicAnnotator,
    PrecomputedAnnotator,
    extract_entities,
    parse_dependencies,
)
from sumlens.annotate.types import (
    AnnotationBundle,
    AnnotationError,
    EntityMention,
    SentenceParse,
)

__all__ = [
    "fuzzy_ratio",
    "similar_entities",
    "disjoint_entity_sets",
    "HeuristicAnnotator",
    "PrecomputedAnnotator",
    "extract_entities",
    "parse_dependencies",
    "AnnotationBundle",
    "AnnotationError",
    "EntityMention",
    "SentenceParse",
]
