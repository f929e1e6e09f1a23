"""Prompt execution over a document scope, with caching and baseline fitting."""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

import numpy as np

from sumlens.analytics import (
    BaselineStats,
    cluster_optics,
    declutter_layout,
    fit_projection,
    sample_trajectory,
    standardize,
)
from sumlens.analytics.trajectory import TrajectorySegment
from sumlens.annotate import HeuristicAnnotator
from sumlens.llm import CompletionRequest, GatewayError, assemble_prompt
from sumlens.metrics import (
    FEATURES,
    FeatureComputationError,
    FeatureLevels,
    NaturalnessScale,
    load_lexicon,
)
from sumlens.metrics.vector import build_feature_vector
from sumlens.workspace.project import (
    CompletionCache,
    FrozenStats,
    Project,
    ProjectError,
    RunRecord,
    SummaryResult,
    now_iso,
)

SCOPES = ("baseline", "validation", "full")
_GATEWAY_WORKERS = 4


class RunEngine:
    """Executes prompt versions and maintains the project's fitted models."""

    def __init__(
        self,
        project: Project,
        backend,
        cache: CompletionCache | None = None,
        annotator=None,
        lexicon: dict[str, float] | None = None,
        temperature: float = 0.0,
        min_samples: int | None = None,
        xi: float = 0.05,
    ):
        self.project = project
        self.backend = backend
        self.cache = cache
        self.annotator = annotator or HeuristicAnnotator()
        self.lexicon = lexicon or load_lexicon()
        self.temperature = temperature
        self.min_samples = min_samples
        self.xi = xi
        self._article_bundles: dict[str, object] = {}

    # -- completion with cache -------------------------------------------

    def _cache_key(self, request: CompletionRequest) -> str:
        raw = f"{self.backend.backend_id}:{request.cache_key()}"
        return hashlib.sha256(raw.encode("utf-8")).hexdigest()

    def _complete(self, request: CompletionRequest) -> str:
        if self.cache is not None:
            cached = self.cache.get(self._cache_key(request))
            if cached is not None:
                return cached
        text = self.backend.complete(request).text
        if self.cache is not None:
            self.cache.put(self._cache_key(request), text)
        return text

    # -- runs ------------------------------------------------------------

    def run_prompt(
        self,
        version_id: int,
        scope: str,
        progress: Callable[[int, int], None] | None = None,
        run_id: int | None = None,
    ) -> RunRecord:
        project = self.project
        if scope not in SCOPES:
            raise ValueError(f"scope must be one of {SCOPES}")
        version = project.version(version_id)

        if scope == "baseline":
            if project.stats is not None:
                raise ProjectError("baseline already exists")
            docs = list(project.documents)
        elif scope == "validation":
            docs = [project.document(doc_id) for doc_id, _ in project.validation_set()]
        else:
            if project.stats is None:
                raise ProjectError("no baseline run yet")
            docs = list(project.documents)

        examples = self._starred_texts(version.starred)

        requests = []
        for doc in docs:
            messages = assemble_prompt(version.blocks, doc.text, examples)
            requests.append(
                CompletionRequest.from_messages(messages, temperature=self.temperature)
            )

        texts: list[str | None] = [None] * len(docs)
        errors: list[str | None] = [None] * len(docs)
        done = 0

        def fetch(i: int) -> None:
            try:
                texts[i] = self._complete(requests[i])
            except GatewayError as exc:
                errors[i] = str(exc)

        with ThreadPoolExecutor(max_workers=_GATEWAY_WORKERS) as pool:
            for i, _ in enumerate(pool.map(fetch, range(len(docs)))):
                done += 1
                if progress:
                    progress(done, len(docs))

        summaries: dict[str, SummaryResult] = {}
        raw_naturalness: dict[str, float] = {}
        for i, doc in enumerate(docs):
            if errors[i] is not None:
                summaries[doc.id] = SummaryResult(text="", scores=None, levels=None, error=errors[i])
                continue
            try:
                scores = build_feature_vector(
                    texts[i],
                    doc.text,
                    self.annotator,
                    self.lexicon,
                    article_bundle=self._bundle_for(doc),
                )
            except FeatureComputationError as exc:
                summaries[doc.id] = SummaryResult(
                    text=texts[i], scores=None, levels=None, error=str(exc)
                )
                continue
            summaries[doc.id] = SummaryResult(text=texts[i], scores=scores, levels=None)
            raw_naturalness[doc.id] = scores.naturalness_raw

        completed = [doc.id for doc in docs if summaries[doc.id].scores is not None]
        if scope == "baseline":
            scale = NaturalnessScale.fit([raw_naturalness[d] for d in completed])
        else:
            scale = project.stats.naturalness_scale

        for doc_id in completed:
            result = summaries[doc_id]
            result.scores = result.scores.with_naturalness(scale.score(result.scores.naturalness_raw))
            result.levels = FeatureLevels.from_scores(result.scores)

        if not completed:
            status = "failed"
        elif len(completed) < len(docs):
            status = "partial"
        else:
            status = "complete"

        if run_id is None:
            run_id = project.next_run_id
            project.next_run_id += 1
        run = RunRecord(
            run_id=run_id,
            version_id=version_id,
            scope=scope,
            backend_id=self.backend.backend_id,
            status=status,
            created=now_iso(),
            doc_ids=[doc.id for doc in docs],
            summaries=summaries,
        )
        project.runs[run.run_id] = run

        if scope == "baseline":
            self._fit_baseline(run, scale)
        return run

    def _bundle_for(self, doc):
        if doc.id not in self._article_bundles:
            from sumlens.textstats import tokenize

            self._article_bundles[doc.id] = self.annotator.bundle(tokenize(doc.text))
        return self._article_bundles[doc.id]

    def _starred_texts(self, starred: Sequence[str]) -> list[str]:
        if not starred:
            return []
        baseline = self.project.baseline_run
        texts = []
        for doc_id in starred:
            if doc_id not in baseline.summaries:
                raise ProjectError(f"starred example {doc_id!r} not in baseline run")
            texts.append(baseline.summaries[doc_id].text)
        return texts

    def _fit_baseline(self, run: RunRecord, scale: NaturalnessScale) -> None:
        project = self.project
        completed = [d for d in run.doc_ids if run.summaries[d].scores is not None]
        if len(completed) < 3:
            raise ProjectError("baseline needs at least 3 scored summaries")

        vectors = [run.summaries[d].scores.as_vector() for d in completed]
        feature_stats = BaselineStats.fit(vectors)
        project.freeze_stats(FrozenStats(feature_stats=feature_stats, naturalness_scale=scale))

        z = standardize(vectors, feature_stats)
        project.clusters = cluster_optics(z, min_samples=self.min_samples, xi=self.xi)
        project.projection = fit_projection(z)

        coords = project.projection.coordinates
        span = float(coords.max() - coords.min()) or 1.0
        radii = [0.02 * span] * len(coords)
        project.layout = declutter_layout(coords, project.clusters.labels, radii).tolist()
        project.baseline_run_id = run.run_id

    # -- derived views -----------------------------------------------------

    def z_vectors(self, run: RunRecord) -> dict[str, np.ndarray]:
        stats = self._require_stats().feature_stats
        out: dict[str, np.ndarray] = {}
        scored = [(d, run.summaries[d].scores) for d in run.doc_ids if run.summaries[d].scores]
        if not scored:
            return out
        z = standardize([s.as_vector() for _, s in scored], stats)
        for (doc_id, _), row in zip(scored, z):
            out[doc_id] = row
        return out

    def ideal_target_z(self, starred: Sequence[str]) -> np.ndarray:
        """Mean z-vector of the starred baseline examples."""
        if not starred:
            raise ProjectError("no starred examples to anchor the comparison")
        baseline = self.project.baseline_run
        z = self.z_vectors(baseline)
        rows = [z[doc_id] for doc_id in starred if doc_id in z]
        if not rows:
            raise ProjectError("starred examples have no scores in the baseline run")
        return np.mean(rows, axis=0)

    def compare_runs(
        self, old_run: RunRecord, new_run: RunRecord, delta: float = 0.25
    ) -> list[TrajectorySegment]:
        """One trajectory per validation case present in both runs."""
        project = self.project
        if project.projection is None:
            raise ProjectError("no baseline projection")
        starred = self.comparison_starred(new_run)
        target = self.ideal_target_z(starred)

        config = project.config
        included_dims = None
        if config is not None:
            names = config.included_features()
            included_dims = [FEATURES.index(n) for n in names]

        old_z = self.z_vectors(old_run)
        new_z = self.z_vectors(new_run)
        segments = []
        for doc_id, weight in project.validation_set():
            if doc_id not in old_z or doc_id not in new_z:
                continue
            segments.append(
                sample_trajectory(
                    project.projection,
                    old_z[doc_id],
                    new_z[doc_id],
                    target,
                    included_dims=included_dims,
                    delta=delta,
                    case_id=doc_id,
                    weight=weight,
                )
            )
        return segments

    def comparison_starred(self, new_run: RunRecord) -> Sequence[str]:
        version = self.project.version(new_run.version_id)
        if version.starred:
            return version.starred
        return self.project.starred

    def _require_stats(self) -> FrozenStats:
        if self.project.stats is None:
            raise ProjectError("no baseline run yet")
        return self.project.stats
