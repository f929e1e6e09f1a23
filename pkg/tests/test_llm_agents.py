"""Recommendation and suggestion agents over mock and scripted backends."""

import json

import pytest

from sumlens.llm import (
    BLOCK_NAMES,
    GatewayError,
    MockBackend,
    ScriptedBackend,
    recommend_features,
    suggest_block,
)
from sumlens.llm.agents import DEFAULT_RECOMMENDATION, _recommendation_request


class BrokenJsonBackend:
    """Always answers with unparseable structured output."""

    backend_id = "broken"

    def __init__(self):
        self.call_count = 0

    def complete(self, request):
        self.call_count += 1
        from sumlens.llm import CompletionResult

        return CompletionResult(
            text="not json at all", prompt_tokens=0, completion_tokens=0,
            latency_s=0.0, backend_id=self.backend_id,
        )


class TestRecommendFeatures:
    def test_academic_keyword(self):
        config, explanation = recommend_features("make it academic in tone", MockBackend())
        target = config.targets["formality"]
        assert target.included and target.level == "Very Formal"
        assert explanation

    def test_kids_keyword(self):
        config, _ = recommend_features("summaries kids would enjoy", MockBackend())
        assert config.targets["complexity"].level == "Elementary"

    def test_multiple_keywords(self):
        config, _ = recommend_features("short positive pieces for kids", MockBackend())
        included = set(config.included_features())
        assert {"complexity", "sentiment", "length"} <= included

    def test_no_keywords_gets_defaults(self):
        config, _ = recommend_features("zzz qqq unrelated goal", MockBackend())
        for feature, level in DEFAULT_RECOMMENDATION.items():
            assert config.targets[feature].level == level

    def test_empty_goal_rejected(self):
        with pytest.raises(ValueError, match="goal required"):
            recommend_features("   ", MockBackend())

    def test_unknown_level_in_response_rejected(self):
        request = _recommendation_request("some goal")
        backend = ScriptedBackend()
        backend.record(
            request,
            json.dumps({"recommendation": {"complexity": "Medium"}, "explanation": ""}),
        )
        with pytest.raises(GatewayError, match="malformed recommendation"):
            recommend_features("some goal", backend)

    def test_unknown_feature_rejected(self):
        request = _recommendation_request("some goal")
        backend = ScriptedBackend()
        backend.record(
            request,
            json.dumps({"recommendation": {"vibes": "Good"}, "explanation": ""}),
        )
        with pytest.raises(GatewayError, match="malformed recommendation"):
            recommend_features("some goal", backend)

    def test_single_reask_then_hard_error(self):
        backend = BrokenJsonBackend()
        with pytest.raises(GatewayError, match="malformed recommendation"):
            recommend_features("a goal", backend)
        assert backend.call_count == 2  # one try + one re-ask, no more


class TestSuggestBlock:
    def test_mock_canned_suggestion_per_block(self):
        backend = MockBackend()
        seen = set()
        for name in BLOCK_NAMES:
            text = suggest_block(name, "how do I improve this?", backend)
            assert name in text
            seen.add(text)
        assert len(seen) == len(BLOCK_NAMES)

    def test_unknown_block_rejected(self):
        with pytest.raises(ValueError, match="unknown block"):
            suggest_block("footer", "?", MockBackend())

    def test_scripted_replay(self):
        from sumlens.llm.agents import suggest_block as fn

        backend = MockBackend()
        text1 = fn("persona", "who should write this?", backend)
        # record the same request into a scripted backend and replay
        from sumlens.llm import CompletionRequest
        from sumlens.llm.agents import BLOCK_DEFINITIONS

        scripted = ScriptedBackend()
        system = (
            "You are a prompt-writing assistant. The user is editing the "
            '"persona" block of a five-block summarization prompt. '
            f"Purpose of this block: {BLOCK_DEFINITIONS['persona']} "
            "Answer the user's question with concrete suggestions for this block."
        )
        request = CompletionRequest(
            messages=(("system", system), ("user", "who should write this?")),
            temperature=0.0,
        )
        scripted.record(request, text1)
        assert fn("persona", "who should write this?", scripted) == text1
