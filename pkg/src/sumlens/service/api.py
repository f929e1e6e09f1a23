"""HTTP API exposing the refinement workflow to the browser UI and scripts.

Every endpoint answers with one envelope: {"status": "ok", "payload": ...}
or {"status": "error", "error": {"code", "message", "detail"}}. Long runs
are asynchronous: submitting returns a run id immediately and a status
endpoint reports progress. Mutations are serialized per project.
"""

from __future__ import annotations

import threading
from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from sumlens.analytics import (
    NOISE,
    FeatureConfig,
    cluster_profiles,
    match_cluster,
    pearson_matrix,
)
from sumlens.llm import (
    BLOCK_DEFINITIONS,
    FEATURE_DESCRIPTIONS,
    GatewayError,
    PromptBlocks,
    recommend_features,
    suggest_block,
)
from sumlens.metrics import FEATURES, levels_for
from sumlens.workspace import CompletionCache, Project, ProjectError, RunEngine
from sumlens.workspace.project import RunRecord

API_PREFIX = "/api/v1"


class ApiError(Exception):
    def __init__(self, code: str, message: str, detail: Any = None, http_status: int = 400):
        super().__init__(message)
        self.code = code
        self.message = message
        self.detail = detail
        self.http_status = http_status


def _ok(payload: Any) -> dict:
    return {"status": "ok", "payload": payload}


class BlocksBody(BaseModel):
    persona: str = ""
    context: str = ""
    constraints: str = ""
    examples: str = ""
    data: str = "{{ARTICLE}}"

    def to_blocks(self) -> PromptBlocks:
        return PromptBlocks(
            persona=self.persona,
            context=self.context,
            constraints=self.constraints,
            examples=self.examples,
            data=self.data,
        )


class VersionBody(BaseModel):
    blocks: BlocksBody
    parent: int | None = None


class RunBody(BaseModel):
    version_id: int
    scope: str


class RecommendBody(BaseModel):
    goal: str


class SuggestBody(BaseModel):
    block: str
    question: str


class AppState:
    def __init__(self, project: Project, backend, project_dir=None, temperature: float = 0.0):
        self.project = project
        self.backend = backend
        self.project_dir = project_dir
        cache = CompletionCache(project_dir / "cache") if project_dir else None
        self.engine = RunEngine(project, backend, cache=cache, temperature=temperature)
        self.mutate_lock = threading.RLock()
        self.run_status: dict[int, dict] = {}

    def save(self) -> None:
        if self.project_dir is not None:
            self.project.save(self.project_dir)

    # -- guards ----------------------------------------------------------

    def require_baseline(self) -> RunRecord:
        if self.project.stats is None or self.project.baseline_run_id is None:
            raise ApiError("NO_BASELINE", "run the baseline first", http_status=409)
        return self.project.baseline_run

    def require_config(self) -> FeatureConfig:
        if self.project.config is None:
            raise ApiError("NO_CONFIG", "no feature configuration set", http_status=409)
        return self.project.config

    def get_run(self, run_id: int) -> RunRecord:
        if run_id not in self.project.runs:
            raise ApiError("UNKNOWN_ID", f"unknown run {run_id}", http_status=404)
        return self.project.runs[run_id]

    # -- async runs --------------------------------------------------------

    def submit_run(self, version_id: int, scope: str) -> int:
        with self.mutate_lock:
            self.project.version(version_id)  # validate now, in-request
            if scope == "baseline" and self.project.stats is not None:
                raise ApiError("BASELINE_EXISTS", "baseline already computed", http_status=409)
            if scope == "validation":
                self.require_baseline()
            run_id = self.project.next_run_id
            self.project.next_run_id += 1
            self.run_status[run_id] = {"state": "queued", "done": 0, "total": 0}

        def work() -> None:
            status = self.run_status[run_id]
            status["state"] = "running"

            def progress(done: int, total: int) -> None:
                status["done"], status["total"] = done, total

            try:
                with self.mutate_lock:
                    record = self.engine.run_prompt(
                        version_id, scope, progress=progress, run_id=run_id
                    )
                    self.save()
                status["state"] = record.status
            except (ProjectError, GatewayError, ValueError) as exc:
                status["state"] = "error"
                status["error"] = str(exc)

        threading.Thread(target=work, daemon=True).start()
        return run_id


def _scores_dict(scores) -> dict:
    return {name: scores.value_of(name) for name in FEATURES}


def _levels_dict(levels) -> dict:
    return {name: getattr(levels, name) for name in FEATURES}


def _global_ranges(run: RunRecord) -> dict[str, tuple[float, float]]:
    ranges = {}
    scored = [s.scores for s in run.summaries.values() if s.scores is not None]
    for name in FEATURES:
        values = [s.value_of(name) for s in scored]
        ranges[name] = (min(values), max(values))
    return ranges


def create_app(project: Project, backend, project_dir=None, temperature: float = 0.0) -> FastAPI:
    app = FastAPI(title="sumlens", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    state = AppState(project, backend, project_dir=project_dir, temperature=temperature)
    app.state.ctx = state

    @app.exception_handler(ApiError)
    async def handle_api_error(_: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.http_status,
            content={
                "status": "error",
                "error": {"code": exc.code, "message": exc.message, "detail": exc.detail},
            },
        )

    @app.exception_handler(RequestValidationError)
    async def handle_request_validation(_: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={
                "status": "error",
                "error": {
                    "code": "VALIDATION",
                    "message": "malformed request body",
                    "detail": exc.errors(),
                },
            },
        )

    @app.exception_handler(ProjectError)
    async def handle_project_error(_: Request, exc: ProjectError):
        return JSONResponse(
            status_code=400,
            content={
                "status": "error",
                "error": {"code": "PROJECT", "message": str(exc), "detail": None},
            },
        )

    @app.exception_handler(GatewayError)
    async def handle_gateway_error(_: Request, exc: GatewayError):
        return JSONResponse(
            status_code=502,
            content={
                "status": "error",
                "error": {"code": "BACKEND", "message": str(exc), "detail": exc.status},
            },
        )

    # -- dataset & baseline ------------------------------------------------

    @app.get(f"{API_PREFIX}/dataset")
    def dataset():
        docs = state.project.documents
        return _ok(
            {
                "count": len(docs),
                "documents": [
                    {"id": d.id, "title": d.title, "words": len(d.text.split())} for d in docs
                ],
            }
        )

    @app.post(f"{API_PREFIX}/baseline")
    def baseline(body: BlocksBody):
        with state.mutate_lock:
            if state.project.stats is not None:
                raise ApiError("BASELINE_EXISTS", "baseline already computed", http_status=409)
            try:
                version = state.project.create_version(body.to_blocks(), parent=None)
            except ValueError as exc:
                raise ApiError("VALIDATION", str(exc))
            state.save()
        run_id = state.submit_run(version.id, "baseline")
        return _ok({"version_id": version.id, "run_id": run_id})

    # -- correlation ---------------------------------------------------

    @app.get(f"{API_PREFIX}/correlation")
    def correlation(tau: float = 0.3):
        run = state.require_baseline()
        scored = [s.scores.as_vector() for s in run.summaries.values() if s.scores]
        r, mask = pearson_matrix(scored, threshold=tau)
        excluded = []
        if state.project.config is not None:
            excluded = [
                n for n in FEATURES if not state.project.config.targets[n].included
            ]
        return _ok(
            {
                "features": list(FEATURES),
                "r": r.tolist(),
                "mask": mask.tolist(),
                "tau": tau,
                "excluded": excluded,
                "descriptions": {n: FEATURE_DESCRIPTIONS[n]["description"] for n in FEATURES},
            }
        )

    # -- clusters ----------------------------------------------------------

    @app.get(f"{API_PREFIX}/clusters")
    def clusters():
        run = state.require_baseline()
        model = state.project.clusters
        layout = state.project.layout
        points = []
        scored_ids = [d for d in run.doc_ids if run.summaries[d].scores is not None]
        for i, doc_id in enumerate(scored_ids):
            label = model.labels[i]
            points.append(
                {
                    "doc_id": doc_id,
                    "cluster": int(label),
                    "noise": label == NOISE,
                    "x": layout[i][0],
                    "y": layout[i][1],
                }
            )
        return _ok(
            {
                "points": points,
                "sizes": list(model.sizes),
                "noise_count": sum(1 for p in points if p["noise"]),
                "centroids": [scored_ids[m] for m in model.centroids],
            }
        )

    @app.get(f"{API_PREFIX}/clusters/profiles")
    def profiles():
        run = state.require_baseline()
        model = state.project.clusters
        scored = [run.summaries[d].scores for d in run.doc_ids if run.summaries[d].scores]
        bars = cluster_profiles(model, scored)
        return _ok(
            {
                str(cid): [
                    {
                        "feature": b.feature,
                        "raw_min": b.raw_min,
                        "raw_max": b.raw_max,
                        "raw_mean": b.raw_mean,
                        "scaled_min": b.scaled_min,
                        "scaled_max": b.scaled_max,
                    }
                    for b in bars[cid]
                ]
                for cid in bars
            }
        )

    @app.get(f"{API_PREFIX}/features/distributions")
    def distributions():
        run = state.require_baseline()
        model = state.project.clusters
        scored_ids = [d for d in run.doc_ids if run.summaries[d].scores is not None]
        payload = {}
        for name in FEATURES:
            values = [run.summaries[d].scores.value_of(name) for d in scored_ids]
            per_cluster = []
            for cid in range(model.n_clusters):
                members = model.members(cid)
                vals = [values[i] for i in members]
                per_cluster.append(
                    {
                        "cluster": cid,
                        "min": min(vals),
                        "max": max(vals),
                        "mean": sum(vals) / len(vals),
                    }
                )
            per_cluster.sort(key=lambda c: c["mean"])
            payload[name] = {
                "clusters": per_cluster,
                "global_min": min(values),
                "global_max": max(values),
            }
        return _ok(payload)

    # -- config ------------------------------------------------------------

    @app.get(f"{API_PREFIX}/config")
    def get_config():
        config = state.project.config
        return _ok({"config": config.to_dict() if config else None})

    @app.put(f"{API_PREFIX}/config")
    def put_config(body: dict):
        try:
            config = FeatureConfig.from_dict(body.get("config", body))
        except (ValueError, KeyError, TypeError) as exc:
            raise ApiError(
                "VALIDATION",
                str(exc),
                detail={"legal_levels": {n: levels_for(n) for n in FEATURES}},
            )
        with state.mutate_lock:
            state.project.config = config
            state.save()
        return _ok({"config": config.to_dict()})

    @app.post(f"{API_PREFIX}/config/match")
    def config_match():
        run = state.require_baseline()
        config = state.require_config()
        scored = [run.summaries[d].scores for d in run.doc_ids if run.summaries[d].scores]
        cid, fit = match_cluster(config, state.project.clusters, scored)
        return _ok({"cluster": cid, "fit": fit})

    # -- recommendations & starring ---------------------------------------

    @app.get(f"{API_PREFIX}/recommendations")
    def recommendations(min_fit: float = 0.5):
        run = state.require_baseline()
        config = state.require_config()
        included = config.included_features()
        ranges = _global_ranges(run)
        cards = []
        for doc_id in run.doc_ids:
            result = run.summaries[doc_id]
            if result.scores is None:
                continue
            inside = [config.contains(n, result.scores.value_of(n)) for n in included]
            fit = sum(inside) / len(inside) if inside else 0.0
            if fit < min_fit:
                continue
            bars = []
            for name in FEATURES:
                value = result.scores.value_of(name)
                lo, hi = ranges[name]
                frac = 0.0 if hi == lo else (value - lo) / (hi - lo)
                bars.append(
                    {
                        "feature": name,
                        "value": value,
                        "global_min": lo,
                        "global_max": hi,
                        "frac": frac,
                        "in_target": config.contains(name, value),
                    }
                )
            cards.append(
                {
                    "doc_id": doc_id,
                    "text": result.text,
                    "fit": fit,
                    "levels": _levels_dict(result.levels),
                    "bars": bars,
                    "starred": doc_id in state.project.starred,
                }
            )
        cards.sort(key=lambda c: (-c["fit"], c["doc_id"]))
        return _ok({"examples": cards})

    @app.post(f"{API_PREFIX}/examples/{{doc_id}}/star")
    def star(doc_id: str):
        run = state.require_baseline()
        if doc_id not in run.summaries:
            raise ApiError("UNKNOWN_ID", f"unknown example {doc_id!r}", http_status=404)
        with state.mutate_lock:
            if doc_id not in state.project.starred:
                state.project.starred.append(doc_id)
            state.save()
        return _ok({"starred": state.project.starred})

    @app.delete(f"{API_PREFIX}/examples/{{doc_id}}/star")
    def unstar(doc_id: str):
        with state.mutate_lock:
            if doc_id in state.project.starred:
                state.project.starred.remove(doc_id)
            state.save()
        return _ok({"starred": state.project.starred})

    # -- prompt versions -----------------------------------------------

    @app.get(f"{API_PREFIX}/versions")
    def versions():
        return _ok({"versions": [v.to_dict() for v in state.project.versions]})

    @app.get(f"{API_PREFIX}/versions/{{version_id}}")
    def get_version(version_id: int):
        try:
            return _ok({"version": state.project.version(version_id).to_dict()})
        except ProjectError as exc:
            raise ApiError("UNKNOWN_ID", str(exc), http_status=404)

    @app.post(f"{API_PREFIX}/versions")
    def post_version(body: VersionBody):
        with state.mutate_lock:
            try:
                version = state.project.create_version(body.blocks.to_blocks(), body.parent)
            except (ValueError, ProjectError) as exc:
                raise ApiError("VALIDATION", str(exc))
            state.save()
        return _ok({"version": version.to_dict()})

    @app.get(f"{API_PREFIX}/blocks/definitions")
    def block_definitions():
        return _ok({"definitions": BLOCK_DEFINITIONS})

    # -- agents ------------------------------------------------------------

    @app.post(f"{API_PREFIX}/suggest")
    def suggest(body: SuggestBody):
        try:
            text = suggest_block(body.block, body.question, state.backend)
        except ValueError as exc:
            raise ApiError("VALIDATION", str(exc))
        return _ok({"suggestion": text})

    @app.post(f"{API_PREFIX}/recommend")
    def recommend(body: RecommendBody):
        try:
            config, explanation = recommend_features(body.goal, state.backend)
        except ValueError as exc:
            raise ApiError("VALIDATION", str(exc))
        return _ok({"config": config.to_dict(), "explanation": explanation})

    # -- runs ----------------------------------------------------------

    @app.post(f"{API_PREFIX}/runs")
    def post_run(body: RunBody):
        if body.scope not in ("baseline", "validation", "full"):
            raise ApiError("VALIDATION", f"bad scope {body.scope!r}")
        try:
            state.project.version(body.version_id)
        except ProjectError as exc:
            raise ApiError("UNKNOWN_ID", str(exc), http_status=404)
        run_id = state.submit_run(body.version_id, body.scope)
        return _ok({"run_id": run_id})

    @app.get(f"{API_PREFIX}/runs")
    def list_runs():
        payload = []
        for run_id in sorted(state.project.runs):
            run = state.project.runs[run_id]
            payload.append(
                {
                    "run_id": run.run_id,
                    "version_id": run.version_id,
                    "scope": run.scope,
                    "status": run.status,
                    "created": run.created,
                    "documents": len(run.doc_ids),
                }
            )
        return _ok({"runs": payload})

    @app.get(f"{API_PREFIX}/runs/{{run_id}}")
    def run_detail(run_id: int):
        status = state.run_status.get(run_id)
        # The registry stays authoritative while the worker is still going:
        # the record may exist before baseline fitting has finished.
        if status is not None and status.get("state") in ("queued", "running"):
            return _ok({"run_id": run_id, **status})
        if run_id not in state.project.runs:
            if status is None:
                raise ApiError("UNKNOWN_ID", f"unknown run {run_id}", http_status=404)
            return _ok({"run_id": run_id, **status})
        run = state.project.runs[run_id]
        summaries = {
            doc_id: {
                "text": result.text,
                "error": result.error,
                "scores": _scores_dict(result.scores) if result.scores else None,
                "levels": _levels_dict(result.levels) if result.levels else None,
            }
            for doc_id, result in run.summaries.items()
        }
        return _ok(
            {
                "run_id": run.run_id,
                "state": run.status,
                "version_id": run.version_id,
                "scope": run.scope,
                "doc_ids": run.doc_ids,
                "summaries": summaries,
            }
        )

    # -- dot plot & comparison ----------------------------------------------

    @app.get(f"{API_PREFIX}/runs/{{run_id}}/dotplot")
    def dotplot(run_id: int):
        run = state.get_run(run_id)
        state.require_baseline()
        config = state.project.config
        validation = dict(state.project.validation_set())
        rows = []
        for name in FEATURES:
            band = None
            if config is not None and config.targets[name].included:
                lo, hi = config.interval(name) or (None, None)
                if lo is not None:
                    band = [lo, None if hi == float("inf") else hi]
            dots = []
            for doc_id, weight in validation.items():
                result = run.summaries.get(doc_id)
                if result is None or result.scores is None:
                    continue
                value = result.scores.value_of(name)
                dots.append(
                    {
                        "doc_id": doc_id,
                        "value": value,
                        "weight": weight,
                        "in_band": config.contains(name, value) if config else None,
                    }
                )
            rows.append({"feature": name, "band": band, "dots": dots})
        return _ok({"run_id": run_id, "rows": rows})

    @app.get(f"{API_PREFIX}/comparison")
    def comparison(old_run: int, new_run: int, delta: float = 0.25):
        state.require_baseline()
        old = state.get_run(old_run)
        new = state.get_run(new_run)
        try:
            segments = state.engine.compare_runs(old, new, delta=delta)
        except ProjectError as exc:
            raise ApiError("NO_STARRED", str(exc), http_status=409)

        starred = state.engine.comparison_starred(new)
        baseline_z = state.engine.z_vectors(state.project.baseline_run)
        target_points = [
            state.project.projection.project(baseline_z[d]).tolist()
            for d in starred
            if d in baseline_z
        ]
        return _ok(
            {
                "old_run": old_run,
                "new_run": new_run,
                "delta": delta,
                "target_points": target_points,
                "old_points": [s.old_point.tolist() for s in segments],
                "new_points": [s.new_point.tolist() for s in segments],
                "trajectories": [s.to_dict() for s in segments],
            }
        )

    return app
