"""Agent templates: feature recommendation and block suggestions."""

from __future__ import annotations

import json
import math

from sumlens.analytics.config import FeatureConfig, FeatureTarget
from sumlens.llm.backends import CompletionRequest, CompletionResult, GatewayError
from sumlens.llm.blocks import BLOCK_DEFINITIONS, BLOCK_NAMES
from sumlens.metrics import FEATURES, LEVEL_TABLES, levels_for

# Plain-language descriptions shown in the UI on hover and injected into
# the recommendation agent's system prompt.
FEATURE_DESCRIPTIONS: dict[str, dict] = {
    "complexity": {
        "description": "How much education a reader needs to follow the text, "
        "estimated from sentence length and syllable density.",
        "notes": {
            "Elementary": "Very easy; readable by an 11-year-old.",
            "Middle School": "Plain English; readable by ages 13-15.",
            "High School": "Fairly hard; suits high-school readers.",
            "College": "Hard to read; suits college readers.",
            "Professional": "Extremely hard; suits graduate readers.",
        },
    },
    "formality": {
        "description": "How formal the vocabulary is, estimated from the "
        "diversity of word stems used.",
        "notes": {
            "Informal": "Casual, conversational wording.",
            "Standard": "Neutral, everyday wording.",
            "Formal": "Professional or academic wording.",
            "Very Formal": "Highly technical or legal wording.",
        },
    },
    "sentiment": {
        "description": "The emotional tone of the text, from a valence "
        "lexicon with intensity rules.",
        "notes": {
            "Negative": "Critical or pessimistic tone.",
            "Neutral": "Objective tone without strong emotion.",
            "Positive": "Favorable or enthusiastic tone.",
        },
    },
    "faithfulness": {
        "description": "How many of the article's important named entities "
        "(people, organizations, places, dates) reappear in the summary.",
        "notes": {
            "Bad": "Nearly all important entities are missing.",
            "Low": "Only a few important entities appear.",
            "Avg": "Most important entities appear, some missing.",
            "Good": "Nearly all important entities appear.",
        },
    },
    "naturalness": {
        "description": "How human-written the text reads, from the shape of "
        "its dependency structure and sentence lengths.",
        "notes": {
            "Bad": "Reads machine-generated.",
            "Low": "Somewhat natural.",
            "Avg": "Mostly natural.",
            "Good": "Reads like a person wrote it.",
        },
    },
    "length": {
        "description": "The number of words in the summary.",
        "notes": {
            "Short": "Under 100 words.",
            "Mid": "100 to 300 words.",
            "Long": "300 to 500 words.",
            "Very Long": "Over 500 words.",
        },
    },
}

# Keyword table backing the mock recommendation path.
MOCK_KEYWORD_TABLE: dict[str, tuple[str, str]] = {
    "kids": ("complexity", "Elementary"),
    "children": ("complexity", "Elementary"),
    "child": ("complexity", "Elementary"),
    "academic": ("formality", "Very Formal"),
    "scholarly": ("formality", "Very Formal"),
    "casual": ("formality", "Informal"),
    "positive": ("sentiment", "Positive"),
    "upbeat": ("sentiment", "Positive"),
    "cheerful": ("sentiment", "Positive"),
    "negative": ("sentiment", "Negative"),
    "short": ("length", "Short"),
    "brief": ("length", "Short"),
    "detailed": ("length", "Long"),
    "accurate": ("faithfulness", "Good"),
    "faithful": ("faithfulness", "Good"),
    "natural": ("naturalness", "Good"),
    "human": ("naturalness", "Good"),
}

DEFAULT_RECOMMENDATION: dict[str, str] = {
    "complexity": "Middle School",
    "formality": "Standard",
    "sentiment": "Neutral",
    "faithfulness": "Good",
    "naturalness": "Good",
    "length": "Mid",
}


def feature_description_text() -> str:
    lines = []
    for name in FEATURES:
        spec = FEATURE_DESCRIPTIONS[name]
        lines.append(f"{name}: {spec['description']}")
        for lo, hi, level in LEVEL_TABLES[name]:
            upper = "unbounded" if math.isinf(hi) else hi
            note = spec["notes"][level]
            lines.append(f"  - {level} [{lo}, {upper}): {note}")
    return "\n".join(lines)


def _recommendation_request(goal: str) -> CompletionRequest:
    system = (
        "You are a feature recommendation assistant for a summarization "
        "prompt workbench. The user states a summarization goal; map it to "
        "target levels of the feature metrics below. Respond with a JSON "
        'object {"recommendation": {<feature>: <level>, ...}, '
        '"explanation": <string>} using only the listed feature names and '
        "levels, and include only the features that matter for the goal.\n\n"
        + feature_description_text()
    )
    return CompletionRequest(
        messages=(("system", system), ("user", goal)),
        temperature=0.0,
        structured=True,
    )


def _parse_recommendation(result: CompletionResult) -> tuple[FeatureConfig, str]:
    data = json.loads(result.text)
    if not isinstance(data, dict) or "recommendation" not in data:
        raise ValueError("missing recommendation object")
    mapping = data["recommendation"]
    if not isinstance(mapping, dict) or not mapping:
        raise ValueError("empty recommendation")

    targets: dict[str, FeatureTarget] = {}
    for feature, level in mapping.items():
        if feature not in FEATURES:
            raise ValueError(f"unknown feature {feature!r}")
        if level not in levels_for(feature):
            raise ValueError(f"unknown level {level!r} for {feature}")
        targets[feature] = FeatureTarget(included=True, level=level)
    config = FeatureConfig(targets=targets)
    return config, str(data.get("explanation", ""))


def recommend_features(goal: str, backend) -> tuple[FeatureConfig, str]:
    """Ask the backend for a feature configuration matching a goal.

    One re-ask is allowed on unparseable structured output; after that the
    call fails rather than returning a partially applied config.
    """
    if not goal or not goal.strip():
        raise ValueError("goal required")

    request = _recommendation_request(goal)
    last_error: Exception | None = None
    for _ in range(2):
        result = backend.complete(request)
        try:
            return _parse_recommendation(result)
        except (ValueError, json.JSONDecodeError) as exc:
            last_error = exc
    raise GatewayError(f"malformed recommendation: {last_error}")


def suggest_block(block_name: str, question: str, backend) -> str:
    """Fetch free-text advice for one prompt block."""
    if block_name not in BLOCK_NAMES:
        raise ValueError(f"unknown block {block_name!r}; expected one of {BLOCK_NAMES}")
    system = (
        "You are a prompt-writing assistant. The user is editing the "
        f'"{block_name}" block of a five-block summarization prompt. '
        f"Purpose of this block: {BLOCK_DEFINITIONS[block_name]} "
        "Answer the user's question with concrete suggestions for this block."
    )
    request = CompletionRequest(
        messages=(("system", system), ("user", question)),
        temperature=0.0,
    )
    return backend.complete(request).text
