"""Consistency harness: how stable are LLM-assigned metric scores.

Two modes over a dataset of summaries (plus articles for truthfulness):
with several definition levels, each item is scored once per level and the
variance across levels is reported; with a single level, the same prompt
is issued ``repeats`` times and the variance across repetitions is
reported. Both sweeps run per temperature.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from sumlens.llm.backends import CompletionRequest, GatewayError

EVAL_METRICS = ("sentiment", "readability", "truthfulness")
DEFINITION_LEVELS = ("none", "beginner", "expert")

_DEFINITIONS = {
    "sentiment": {
        "none": "",
        "beginner": "Sentiment is the emotional tone or attitude the text expresses. ",
        "expert": (
            "Sentiment is the emotional tone or attitude the text expresses. "
            "Score breakdown: 1 strongly unfavorable or critical; 2 mildly "
            "negative; 3 objective with no emotional lean; 4 mildly favorable; "
            "5 strongly favorable or enthusiastic. "
        ),
    },
    "readability": {
        "none": "",
        "beginner": "Readability is how easily a person can understand the text. ",
        "expert": (
            "Readability is how easily a person can understand the text. "
            "Score breakdown: 1 readable only by specialists; 2 hard, for "
            "well-read adults; 3 moderately hard, for secondary students; "
            "4 easy for most readers; 5 very easy for anyone. "
        ),
    },
    "truthfulness": {
        "none": "",
        "beginner": (
            "Truthfulness is how accurately the summary reflects the facts "
            "and content of the original article. "
        ),
        "expert": (
            "Truthfulness is how accurately the summary reflects the facts "
            "and content of the original article. Score breakdown: 1 false or "
            "misleading throughout; 2 largely inaccurate with major omissions; "
            "3 a mix of accurate and inaccurate claims; 4 mostly accurate with "
            "minor slips; 5 entirely accurate with nothing misleading. "
        ),
    },
}


def build_eval_request(
    metric: str, level: str, summary: str, article: str | None = None, temperature: float = 0.0
) -> CompletionRequest:
    if metric not in EVAL_METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    if level not in DEFINITION_LEVELS:
        raise ValueError(f"unknown definition level {level!r}")

    if metric == "truthfulness":
        if article is None:
            raise ValueError("truthfulness needs the article")
        intro = "The user will provide an article and a summary of it. "
        task = "Rate the truthfulness of the summary against the article on a scale of 1 to 5. "
        user = f"Article:\n{article}\n\nSummary:\n{summary}"
    else:
        intro = "The user will provide a summary to evaluate. "
        task = f"Rate the {metric} of the summary on a scale of 1 to 5. "
        user = summary

    system = intro + _DEFINITIONS[metric][level] + task + "Reply strictly with a single digit score."
    return CompletionRequest(messages=(("system", system), ("user", user)), temperature=temperature)


def parse_digit(text: str) -> int | None:
    """First character of the trimmed response, if it is a digit 1-5."""
    stripped = text.strip()
    if stripped and stripped[0] in "12345":
        return int(stripped[0])
    return None


def population_variance(values: Sequence[float]) -> float:
    n = len(values)
    if n == 0:
        raise ValueError("variance of empty sequence")
    mean = sum(values) / n
    return sum((v - mean) ** 2 for v in values) / n


@dataclass(frozen=True)
class ConsistencyReport:
    metric: str
    levels: tuple[str, ...]
    repeats: int
    # temperature -> {item_id: variance}; unparseable items are excluded
    variances: dict[float, dict[str, float]]
    excluded: dict[float, int]

    def mean_variance(self, temperature: float) -> float:
        items = self.variances[temperature]
        return sum(items.values()) / len(items) if items else float("nan")

    def csv_rows(self) -> list[list]:
        rows: list[list] = [["temperature", "item_id", "variance"]]
        for temp in sorted(self.variances):
            for item_id, var in self.variances[temp].items():
                rows.append([temp, item_id, var])
        return rows

    def summary_rows(self) -> list[list]:
        rows: list[list] = [["temperature", "mean_variance", "items", "excluded"]]
        for temp in sorted(self.variances):
            rows.append(
                [temp, self.mean_variance(temp), len(self.variances[temp]), self.excluded[temp]]
            )
        return rows


def run_consistency(
    items: Sequence[dict],
    metric: str,
    backend,
    levels: Sequence[str] = DEFINITION_LEVELS,
    temperatures: Sequence[float] = (0.0,),
    repeats: int = 1,
) -> ConsistencyReport:
    """Score every item and compute per-item score variance.

    Items are {"id", "summary"} dicts ("article" too for truthfulness).
    With several levels the variance runs across definition levels; with a
    single level it runs across ``repeats`` identical calls.
    """
    levels = tuple(levels)
    for level in levels:
        if level not in DEFINITION_LEVELS:
            raise ValueError(f"unknown definition level {level!r}")
    if not levels:
        raise ValueError("need at least one definition level")
    across_levels = len(levels) > 1

    variances: dict[float, dict[str, float]] = {}
    excluded: dict[float, int] = {}
    for temp in temperatures:
        per_item: dict[str, float] = {}
        dropped = 0
        for item in items:
            requests = (
                [
                    build_eval_request(metric, lvl, item["summary"], item.get("article"), temp)
                    for lvl in levels
                ]
                if across_levels
                else [
                    build_eval_request(metric, levels[0], item["summary"], item.get("article"), temp)
                ]
                * repeats
            )
            scores = []
            parse_failed = False
            for request in requests:
                digit = parse_digit(backend.complete(request).text)
                if digit is None:
                    parse_failed = True
                    break
                scores.append(digit)
            if parse_failed:
                dropped += 1
                continue
            per_item[str(item["id"])] = population_variance(scores)
        variances[temp] = per_item
        excluded[temp] = dropped
        if not per_item:
            raise GatewayError("no scores: every item failed digit parsing")

    return ConsistencyReport(
        metric=metric,
        levels=levels,
        repeats=repeats,
        variances=variances,
        excluded=excluded,
    )
