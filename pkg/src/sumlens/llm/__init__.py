"""Prompt assembly, completion transport, and the two agent templates."""

from sumlens.llm.agents import (
    DEFAULT_RECOMMENDATION,
    FEATURE_DESCRIPTIONS,
    MOCK_KEYWORD_TABLE,
    feature_description_text,
    recommend_features,
    suggest_block,
)
from sumlens.llm.backends import (
    CompletionRequest,
    CompletionResult,
    GatewayError,
    LiveBackend,
    MockBackend,
    ScriptedBackend,
    complete,
    split_sections,
    stable_hash,
)
from sumlens.llm.blocks import (
    ARTICLE_PLACEHOLDER,
    BLOCK_DEFINITIONS,
    BLOCK_NAMES,
    PromptBlocks,
    assemble_prompt,
)
from sumlens.llm.consistency import (
    DEFINITION_LEVELS,
    EVAL_METRICS,
    ConsistencyReport,
    build_eval_request,
    parse_digit,
    population_variance,
    run_consistency,
)

__all__ = [
    "PromptBlocks",
    "assemble_prompt",
    "ARTICLE_PLACEHOLDER",
    "BLOCK_NAMES",
    "BLOCK_DEFINITIONS",
    "CompletionRequest",
    "CompletionResult",
    "GatewayError",
    "MockBackend",
    "ScriptedBackend",
    "LiveBackend",
    "complete",
    "split_sections",
    "stable_hash",
    "recommend_features",
    "suggest_block",
    "FEATURE_DESCRIPTIONS",
    "MOCK_KEYWORD_TABLE",
    "DEFAULT_RECOMMENDATION",
    "feature_description_text",
    "run_consistency",
    "ConsistencyReport",
    "build_eval_request",
    "parse_digit",
    "population_variance",
    "EVAL_METRICS",
    "DEFINITION_LEVELS",
]
