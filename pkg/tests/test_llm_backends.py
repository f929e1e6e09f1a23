"""Completion backends: mock determinism, scripted replay, live retries."""

import json

import pytest

from sumlens.llm import (
    CompletionRequest,
    GatewayError,
    MockBackend,
    PromptBlocks,
    ScriptedBackend,
    assemble_prompt,
    split_sections,
    stable_hash,
)
from sumlens.llm.backends import LiveBackend


def summarize_request(persona="P", constraints="C", article="One. Two. Three. Four. Five."):
    blocks = PromptBlocks(persona=persona, constraints=constraints, data="{{ARTICLE}}")
    return CompletionRequest.from_messages(assemble_prompt(blocks, article))


class TestMockBackend:
    def test_deterministic(self):
        mock = MockBackend()
        request = summarize_request()
        assert mock.complete(request).text == mock.complete(request).text

    def test_extractive_rule_matches_sentence_budget(self):
        mock = MockBackend()
        persona, constraints = "Editor.", "Short."
        k = MockBackend.sentence_budget(persona, constraints)
        assert k == 1 + stable_hash(persona + constraints) % 3
        article = "S one. S two. S three. S four. S five."
        result = mock.complete(summarize_request(persona, constraints, article))
        expected = " ".join(f"S {w}." for w in ["one", "two", "three", "four", "five"][:k])
        assert result.text == expected

    def test_budget_covers_all_three_values(self):
        budgets = {MockBackend.sentence_budget("p", f"c{i}") for i in range(40)}
        assert budgets == {1, 2, 3}

    def test_positive_constraint_exclaim_style(self):
        mock = MockBackend()
        constraints = "Be positive please."
        k = MockBackend.sentence_budget("", constraints)
        blocks = PromptBlocks(constraints=constraints, data="{{ARTICLE}}")
        request = CompletionRequest.from_messages(
            assemble_prompt(blocks, "Alpha beta. Gamma delta. Epsilon zeta.")
        )
        text = mock.complete(request).text
        assert text.count("!") == min(k, 3)
        assert "." not in text

    def test_short_article_fewer_sentences(self):
        mock = MockBackend()
        result = mock.complete(summarize_request("a", "b", article="Only one."))
        assert result.text == "Only one."

    def test_digit_mode(self):
        mock = MockBackend()
        request = CompletionRequest(
            messages=(
                ("system", "Reply strictly with a single digit score."),
                ("user", "Some summary."),
            )
        )
        text = mock.complete(request).text
        assert text in {"1", "2", "3", "4", "5"}
        assert mock.complete(request).text == text

    def test_call_count_tracks(self):
        mock = MockBackend()
        request = summarize_request()
        mock.complete(request)
        mock.complete(request)
        assert mock.call_count == 2


class TestSplitSections:
    def test_roundtrip_sections(self):
        blocks = PromptBlocks(
            persona="The persona.", context="Ctx.", constraints="Rules.", data="{{ARTICLE}}"
        )
        content = assemble_prompt(blocks, "Body text.")[0]["content"]
        sections = split_sections(content)
        assert sections["persona"] == "The persona."
        assert sections["constraints"] == "Rules."
        assert sections["data"] == "Body text."


class TestScriptedBackend:
    def test_record_and_replay(self, tmp_path):
        request = summarize_request()
        backend = ScriptedBackend()
        backend.record(request, "canned response")
        path = tmp_path / "transcript.json"
        backend.save(path)

        replay = ScriptedBackend(path=path)
        assert replay.complete(request).text == "canned response"

    def test_miss_raises_no_fixture(self):
        backend = ScriptedBackend(transcript={})
        with pytest.raises(GatewayError, match="no fixture"):
            backend.complete(summarize_request())


class FakeResponse:
    def __init__(self, status_code, body=None):
        self.status_code = status_code
        self._body = body or {}

    def json(self):
        return self._body


class TestLiveBackend:
    def _patch_post(self, monkeypatch, responses):
        import httpx

        calls = []

        def fake_post(url, json=None, headers=None, timeout=None):
            calls.append({"url": url, "json": json, "headers": headers})
            result = responses[min(len(calls) - 1, len(responses) - 1)]
            if isinstance(result, Exception):
                raise result
            return result

        monkeypatch.setattr(httpx, "post", fake_post)
        return calls

    def test_success_payload_shape(self, monkeypatch):
        body = {
            "choices": [{"message": {"content": "hi"}}],
            "usage": {"prompt_tokens": 7, "completion_tokens": 2},
        }
        calls = self._patch_post(monkeypatch, [FakeResponse(200, body)])
        backend = LiveBackend(base_url="http://llm.test/v1", api_key="k", model="m")
        result = backend.complete(summarize_request())
        assert result.text == "hi"
        assert result.prompt_tokens == 7
        sent = calls[0]["json"]
        assert sent["model"] == "m"
        assert sent["temperature"] == 0.0
        assert sent["messages"][0]["role"] == "user"
        assert calls[0]["headers"]["Authorization"] == "Bearer k"
        assert calls[0]["url"] == "http://llm.test/v1/chat/completions"

    def test_retries_then_succeeds(self, monkeypatch):
        body = {"choices": [{"message": {"content": "ok"}}], "usage": {}}
        monkeypatch.setattr("time.sleep", lambda s: None)
        calls = self._patch_post(
            monkeypatch, [FakeResponse(500), FakeResponse(200, body)]
        )
        backend = LiveBackend(base_url="http://llm.test", model="m")
        assert backend.complete(summarize_request()).text == "ok"
        assert len(calls) == 2

    def test_exhausted_retries_error_carries_status(self, monkeypatch):
        monkeypatch.setattr("time.sleep", lambda s: None)
        calls = self._patch_post(monkeypatch, [FakeResponse(503)])
        backend = LiveBackend(base_url="http://llm.test", model="m")
        with pytest.raises(GatewayError) as excinfo:
            backend.complete(summarize_request())
        assert excinfo.value.status == 503
        assert len(calls) == 3

    def test_client_error_fails_fast(self, monkeypatch):
        calls = self._patch_post(monkeypatch, [FakeResponse(401)])
        backend = LiveBackend(base_url="http://llm.test", model="m")
        with pytest.raises(GatewayError, match="rejected"):
            backend.complete(summarize_request())
        assert len(calls) == 1

    def test_structured_flag_requests_json_mode(self, monkeypatch):
        body = {"choices": [{"message": {"content": "{}"}}], "usage": {}}
        calls = self._patch_post(monkeypatch, [FakeResponse(200, body)])
        backend = LiveBackend(base_url="http://llm.test", model="m")
        request = CompletionRequest(messages=(("user", "hi"),), structured=True)
        backend.complete(request)
        assert calls[0]["json"]["response_format"] == {"type": "json_object"}

    def test_missing_base_url_rejected(self, monkeypatch):
        monkeypatch.delenv("SUMLENS_API_BASE", raising=False)
        with pytest.raises(GatewayError, match="SUMLENS_API_BASE"):
            LiveBackend()


class TestRequestValidation:
    def test_empty_messages_rejected(self):
        with pytest.raises(ValueError):
            CompletionRequest(messages=())

    def test_temperature_range(self):
        with pytest.raises(ValueError):
            CompletionRequest(messages=(("user", "x"),), temperature=3.0)

    def test_cache_key_stable_and_distinct(self):
        a = CompletionRequest(messages=(("user", "x"),))
        b = CompletionRequest(messages=(("user", "x"),))
        c = CompletionRequest(messages=(("user", "y"),))
        assert a.cache_key() == b.cache_key()
        assert a.cache_key() != c.cache_key()
