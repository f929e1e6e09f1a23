"""Completion transport: live chat-completions endpoint, deterministic
mock, and scripted replay."""

from __future__ import annotations

import hashlib
import json
import os
import re
import threading
import time
from dataclasses import dataclass
from pathlib import Path

from sumlens.textstats import tokenize

DIGIT_MARKER = "Reply strictly with a single digit score"


class GatewayError(Exception):
    def __init__(self, message: str, status: int | None = None):
        super().__init__(message)
        self.status = status


@dataclass(frozen=True)
class CompletionRequest:
    messages: tuple[tuple[str, str], ...]  # (role, content) pairs
    model: str = "default"
    temperature: float = 0.0
    structured: bool = False

    def __post_init__(self):
        if not self.messages:
            raise ValueError("messages must not be empty")
        if not 0.0 <= self.temperature <= 2.0:
            raise ValueError("temperature must be in [0, 2]")

    @classmethod
    def from_messages(cls, messages: list[dict[str, str]], **kwargs) -> "CompletionRequest":
        return cls(messages=tuple((m["role"], m["content"]) for m in messages), **kwargs)

    def content_by_role(self, role: str) -> str:
        return "\n".join(content for r, content in self.messages if r == role)

    def cache_key(self) -> str:
        payload = json.dumps(
            {
                "messages": list(self.messages),
                "model": self.model,
                "temperature": self.temperature,
                "structured": self.structured,
            },
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CompletionResult:
    text: str
    prompt_tokens: int
    completion_tokens: int
    latency_s: float
    backend_id: str


def stable_hash(text: str) -> int:
    return int(hashlib.md5(text.encode("utf-8")).hexdigest(), 16)


_SECTION_RE = re.compile(r"^(Persona|Context|Constraints|Examples|Data):$", re.MULTILINE)


def split_sections(content: str) -> dict[str, str]:
    """Recover labeled sections from an assembled prompt message."""
    sections: dict[str, str] = {}
    matches = list(_SECTION_RE.finditer(content))
    for i, m in enumerate(matches):
        start = m.end() + 1  # skip the newline after "Label:"
        end = matches[i + 1].start() if i + 1 < len(matches) else len(content)
        sections[m.group(1).lower()] = content[start:end].strip("\n").rstrip()
    return sections


class MockBackend:
    """Pure function of the request; no network, bitwise repeatable.

    Summarization requests get an extractive summary: the first k
    sentences of the Data section, where k = 1 + (hash(persona +
    constraints) mod 3). Constraints containing "positive" switch on an
    exclamatory style. Recommendation, suggestion, and digit-score
    requests are answered from fixed tables.
    """

    backend_id = "mock"

    def __init__(self):
        self.call_count = 0
        self._lock = threading.Lock()

    @staticmethod
    def sentence_budget(persona: str, constraints: str) -> int:
        return 1 + stable_hash(persona + constraints) % 3

    def complete(self, request: CompletionRequest) -> CompletionResult:
        with self._lock:
            self.call_count += 1
        system = request.content_by_role("system")
        user = request.content_by_role("user")

        if "feature recommendation assistant" in system:
            text = self._recommend(user)
        elif "prompt-writing assistant" in system:
            text = self._suggest(system)
        elif DIGIT_MARKER in system:
            text = str(1 + stable_hash(user) % 5)
        else:
            text = self._summarize(user)

        return CompletionResult(
            text=text,
            prompt_tokens=len(system.split()) + len(user.split()),
            completion_tokens=len(text.split()),
            latency_s=0.0,
            backend_id=self.backend_id,
        )

    def _summarize(self, user_content: str) -> str:
        sections = split_sections(user_content)
        article = sections.get("data", user_content)
        persona = sections.get("persona", "")
        constraints = sections.get("constraints", "")
        k = self.sentence_budget(persona, constraints)

        tokenized = tokenize(article)
        chosen = [tokenized.sentence_text(i) for i in range(min(k, tokenized.sentence_count))]
        if "positive" in constraints.lower():
            chosen = [s[:-1] + "!" if s.endswith(".") else s for s in chosen]
        return " ".join(chosen)

    @staticmethod
    def _recommend(goal: str) -> str:
        from sumlens.llm.agents import DEFAULT_RECOMMENDATION, MOCK_KEYWORD_TABLE

        lowered = goal.lower()
        features: dict[str, str] = {}
        for keyword, (feature, level) in MOCK_KEYWORD_TABLE.items():
            if keyword in lowered:
                features[feature] = level
        if not features:
            features = dict(DEFAULT_RECOMMENDATION)
        return json.dumps(
            {
                "recommendation": features,
                "explanation": "Suggested from goal keywords: " + ", ".join(sorted(features)),
            },
            sort_keys=True,
        )

    @staticmethod
    def _suggest(system: str) -> str:
        from sumlens.llm.blocks import BLOCK_NAMES

        for name in BLOCK_NAMES:
            if f'"{name}"' in system:
                return (
                    f"Consider making the {name} block more specific to your "
                    f"feature targets, and state expectations explicitly."
                )
        return "Consider stating your expectations explicitly."


class ScriptedBackend:
    """Replays recorded completions keyed by request hash."""

    backend_id = "scripted"

    def __init__(self, transcript: dict[str, str] | None = None, path: str | Path | None = None):
        if transcript is None and path is not None:
            transcript = json.loads(Path(path).read_text("utf-8"))
        self.transcript = dict(transcript or {})
        self.call_count = 0

    def record(self, request: CompletionRequest, text: str) -> None:
        self.transcript[request.cache_key()] = text

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.transcript, indent=2, sort_keys=True), "utf-8")

    def complete(self, request: CompletionRequest) -> CompletionResult:
        self.call_count += 1
        key = request.cache_key()
        if key not in self.transcript:
            raise GatewayError(f"no fixture for request {key[:12]}")
        text = self.transcript[key]
        return CompletionResult(
            text=text,
            prompt_tokens=sum(len(c.split()) for _, c in request.messages),
            completion_tokens=len(text.split()),
            latency_s=0.0,
            backend_id=self.backend_id,
        )


class TokenBucket:
    """Simple thread-safe rate limiter: `rate` tokens/s, burst `capacity`."""

    def __init__(self, rate: float, capacity: int):
        self.rate = rate
        self.capacity = capacity
        self._tokens = float(capacity)
        self._stamp = time.monotonic()
        self._lock = threading.Lock()

    def acquire(self) -> None:
        while True:
            with self._lock:
                now = time.monotonic()
                self._tokens = min(self.capacity, self._tokens + (now - self._stamp) * self.rate)
                self._stamp = now
                if self._tokens >= 1.0:
                    self._tokens -= 1.0
                    return
                wait = (1.0 - self._tokens) / self.rate
            time.sleep(wait)


class LiveBackend:
    """HTTP chat-completions client with retries, a concurrency bound,
    and a token-bucket rate limit."""

    backend_id = "live"
    max_retries = 3

    def __init__(
        self,
        base_url: str | None = None,
        api_key: str | None = None,
        model: str | None = None,
        max_concurrency: int = 4,
        requests_per_second: float = 8.0,
        timeout_s: float = 60.0,
    ):
        self.base_url = (base_url or os.environ.get("SUMLENS_API_BASE", "")).rstrip("/")
        self.api_key = api_key or os.environ.get("SUMLENS_API_KEY", "")
        self.model = model or os.environ.get("SUMLENS_MODEL", "gpt-3.5-turbo")
        if not self.base_url:
            raise GatewayError("live backend needs SUMLENS_API_BASE")
        self._semaphore = threading.Semaphore(max_concurrency)
        self._bucket = TokenBucket(rate=requests_per_second, capacity=max_concurrency)
        self._timeout = timeout_s

    def complete(self, request: CompletionRequest) -> CompletionResult:
        import httpx

        payload: dict = {
            "model": self.model if request.model == "default" else request.model,
            "temperature": request.temperature,
            "messages": [{"role": r, "content": c} for r, c in request.messages],
        }
        if request.structured:
            payload["response_format"] = {"type": "json_object"}
        headers = {"Authorization": f"Bearer {self.api_key}"} if self.api_key else {}

        last_error: Exception | None = None
        for attempt in range(self.max_retries):
            try:
                with self._semaphore:
                    self._bucket.acquire()
                    started = time.monotonic()
                    response = httpx.post(
                        f"{self.base_url}/chat/completions",
                        json=payload,
                        headers=headers,
                        timeout=self._timeout,
                    )
                if response.status_code in (429,) or response.status_code >= 500:
                    last_error = GatewayError(
                        f"backend returned {response.status_code}", status=response.status_code
                    )
                elif response.status_code >= 400:
                    raise GatewayError(
                        f"backend rejected request: {response.status_code}",
                        status=response.status_code,
                    )
                else:
                    body = response.json()
                    text = body["choices"][0]["message"]["content"]
                    usage = body.get("usage", {})
                    return CompletionResult(
                        text=text,
                        prompt_tokens=int(usage.get("prompt_tokens", 0)),
                        completion_tokens=int(usage.get("completion_tokens", 0)),
                        latency_s=time.monotonic() - started,
                        backend_id=self.backend_id,
                    )
            except httpx.HTTPError as exc:
                last_error = exc
            if attempt < self.max_retries - 1:
                time.sleep(0.5 * 2**attempt)

        status = last_error.status if isinstance(last_error, GatewayError) else None
        raise GatewayError(f"backend unavailable after retries: {last_error}", status=status)


def complete(request: CompletionRequest, backend) -> CompletionResult:
    return backend.complete(request)
