"""Project state and crash-safe directory persistence.

A project is a directory of JSON files (documents, frozen statistics,
models, prompt versions, one file per run, completion cache). Every file
is written via temp-file + atomic rename, so a crash mid-save leaves the
last durable state plus an ignorable temp file.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from sumlens.analytics import BaselineStats, ClusterModel, FeatureConfig, ProjectionModel
from sumlens.llm import PromptBlocks
from sumlens.metrics import FEATURES, FeatureLevels, FeatureScores, NaturalnessScale
from sumlens.workspace.dataset import Document

FORMAT_VERSION = 1


class ProjectError(Exception):
    pass


def _atomic_write(path: Path, payload: str) -> None:
    tmp = path.with_name(path.name + f".tmp-{os.getpid()}")
    tmp.write_text(payload, "utf-8")
    os.replace(tmp, path)


def _write_json(path: Path, data) -> None:
    _atomic_write(path, json.dumps(data, indent=1, sort_keys=True))


@dataclass(frozen=True)
class PromptVersion:
    id: int
    blocks: PromptBlocks
    parent: int | None
    created: str
    starred: tuple[str, ...]  # baseline doc ids snapshotted at creation

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "blocks": self.blocks.to_dict(),
            "parent": self.parent,
            "created": self.created,
            "starred": list(self.starred),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PromptVersion":
        return cls(
            id=int(data["id"]),
            blocks=PromptBlocks.from_dict(data["blocks"]),
            parent=data["parent"],
            created=data["created"],
            starred=tuple(data["starred"]),
        )


@dataclass
class SummaryResult:
    text: str
    scores: FeatureScores | None
    levels: FeatureLevels | None
    error: str | None = None

    def to_dict(self) -> dict:
        data: dict = {"text": self.text, "error": self.error}
        if self.scores is not None:
            data["scores"] = {
                "complexity": self.scores.complexity,
                "formality": self.scores.formality,
                "sentiment": self.scores.sentiment,
                "faithfulness": self.scores.faithfulness,
                "naturalness_raw": self.scores.naturalness_raw,
                "naturalness": self.scores.naturalness,
                "length": self.scores.length,
            }
        if self.levels is not None:
            data["levels"] = {name: getattr(self.levels, name) for name in FEATURES}
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "SummaryResult":
        scores = None
        if "scores" in data:
            s = data["scores"]
            scores = FeatureScores(
                complexity=s["complexity"],
                formality=s["formality"],
                sentiment=s["sentiment"],
                faithfulness=s["faithfulness"],
                naturalness_raw=s["naturalness_raw"],
                length=int(s["length"]),
                naturalness=s["naturalness"],
            )
        levels = FeatureLevels(**data["levels"]) if "levels" in data else None
        return cls(text=data["text"], scores=scores, levels=levels, error=data.get("error"))


@dataclass
class RunRecord:
    run_id: int
    version_id: int
    scope: str  # baseline | validation | full
    backend_id: str
    status: str  # complete | partial | failed
    created: str
    doc_ids: list[str]
    summaries: dict[str, SummaryResult]

    def to_dict(self) -> dict:
        return {
            "run_id": self.run_id,
            "version_id": self.version_id,
            "scope": self.scope,
            "backend_id": self.backend_id,
            "status": self.status,
            "created": self.created,
            "doc_ids": self.doc_ids,
            "summaries": {k: v.to_dict() for k, v in self.summaries.items()},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunRecord":
        return cls(
            run_id=int(data["run_id"]),
            version_id=int(data["version_id"]),
            scope=data["scope"],
            backend_id=data["backend_id"],
            status=data["status"],
            created=data["created"],
            doc_ids=list(data["doc_ids"]),
            summaries={k: SummaryResult.from_dict(v) for k, v in data["summaries"].items()},
        )


@dataclass(frozen=True)
class FrozenStats:
    """Baseline feature statistics reused verbatim for all later runs."""

    feature_stats: BaselineStats
    naturalness_scale: NaturalnessScale

    def to_dict(self) -> dict:
        return {
            "mean": list(self.feature_stats.mean),
            "std": list(self.feature_stats.std),
            "naturalness_min": self.naturalness_scale.minimum,
            "naturalness_max": self.naturalness_scale.maximum,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FrozenStats":
        return cls(
            feature_stats=BaselineStats(mean=tuple(data["mean"]), std=tuple(data["std"])),
            naturalness_scale=NaturalnessScale(
                minimum=data["naturalness_min"], maximum=data["naturalness_max"]
            ),
        )


def _cluster_to_dict(model: ClusterModel) -> dict:
    return {
        "labels": list(model.labels),
        "min_samples": model.min_samples,
        "xi": model.xi,
        "centroids": list(model.centroids),
        "sizes": list(model.sizes),
        "ordering": list(model.ordering),
        "reachability": list(model.reachability),
    }


def _cluster_from_dict(data: dict) -> ClusterModel:
    return ClusterModel(
        labels=tuple(data["labels"]),
        min_samples=int(data["min_samples"]),
        xi=float(data["xi"]),
        centroids=tuple(data["centroids"]),
        sizes=tuple(data["sizes"]),
        ordering=tuple(data["ordering"]),
        reachability=tuple(data["reachability"]),
    )


def _projection_to_dict(model: ProjectionModel) -> dict:
    return {
        "training": model.training.tolist(),
        "row_means": model.row_means.tolist(),
        "grand_mean": model.grand_mean,
        "eigenvalues": model.eigenvalues.tolist(),
        "eigenvectors": model.eigenvectors.tolist(),
        "coordinates": model.coordinates.tolist(),
    }


def _projection_from_dict(data: dict) -> ProjectionModel:
    return ProjectionModel(
        training=np.array(data["training"], dtype=float),
        row_means=np.array(data["row_means"], dtype=float),
        grand_mean=float(data["grand_mean"]),
        eigenvalues=np.array(data["eigenvalues"], dtype=float),
        eigenvectors=np.array(data["eigenvectors"], dtype=float),
        coordinates=np.array(data["coordinates"], dtype=float),
    )


def now_iso() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class Project:
    dataset_path: str
    documents: list[Document]
    config: FeatureConfig | None = None
    stats: FrozenStats | None = None
    clusters: ClusterModel | None = None
    projection: ProjectionModel | None = None
    layout: list[list[float]] | None = None  # decluttered 2-D baseline coords
    versions: list[PromptVersion] = field(default_factory=list)
    runs: dict[int, RunRecord] = field(default_factory=dict)
    starred: list[str] = field(default_factory=list)
    baseline_run_id: int | None = None
    next_run_id: int = 0

    # -- document helpers ------------------------------------------------

    def document(self, doc_id: str) -> Document:
        for doc in self.documents:
            if doc.id == doc_id:
                return doc
        raise ProjectError(f"unknown document id {doc_id!r}")

    def doc_index(self, doc_id: str) -> int:
        for i, doc in enumerate(self.documents):
            if doc.id == doc_id:
                return i
        raise ProjectError(f"unknown document id {doc_id!r}")

    # -- versions ----------------------------------------------------------

    def version(self, version_id: int) -> PromptVersion:
        for v in self.versions:
            if v.id == version_id:
                return v
        raise ProjectError(f"unknown prompt version {version_id}")

    def create_version(self, blocks: PromptBlocks, parent: int | None) -> PromptVersion:
        blocks.validate()
        if parent is not None:
            self.version(parent)  # must exist
        new_id = max((v.id for v in self.versions), default=-1) + 1
        version = PromptVersion(
            id=new_id,
            blocks=blocks,
            parent=parent,
            created=now_iso(),
            starred=tuple(self.starred),
        )
        self.versions.append(version)
        return version

    # -- frozen statistics -------------------------------------------------

    def freeze_stats(self, stats: FrozenStats) -> None:
        if self.stats is not None:
            raise ProjectError("baseline statistics are frozen and cannot be restated")
        self.stats = stats

    @property
    def baseline_run(self) -> RunRecord:
        if self.baseline_run_id is None or self.baseline_run_id not in self.runs:
            raise ProjectError("no baseline run")
        return self.runs[self.baseline_run_id]

    def validation_set(self) -> list[tuple[str, int]]:
        """(doc id, cluster size) per cluster centroid, in cluster order."""
        if self.clusters is None:
            raise ProjectError("no baseline clustering")
        baseline = self.baseline_run
        return [
            (baseline.doc_ids[member], self.clusters.sizes[cid])
            for cid, member in enumerate(self.clusters.centroids)
        ]

    # -- persistence ---------------------------------------------------

    def save(self, directory: str | Path) -> None:
        root = Path(directory)
        root.mkdir(parents=True, exist_ok=True)
        (root / "runs").mkdir(exist_ok=True)
        (root / "cache").mkdir(exist_ok=True)

        manifest = {
            "format_version": FORMAT_VERSION,
            "dataset_path": self.dataset_path,
            "baseline_run_id": self.baseline_run_id,
            "next_run_id": self.next_run_id,
            "run_ids": sorted(self.runs),
            "starred": self.starred,
            "config": self.config.to_dict() if self.config else None,
        }
        _write_json(root / "project.json", manifest)
        _atomic_write(
            root / "documents.jsonl",
            "\n".join(json.dumps(d.to_dict(), sort_keys=True) for d in self.documents),
        )
        if self.stats is not None:
            _write_json(root / "stats.json", self.stats.to_dict())
        if self.clusters is not None:
            _write_json(root / "clusters.json", _cluster_to_dict(self.clusters))
        if self.projection is not None:
            _write_json(root / "projection.json", _projection_to_dict(self.projection))
        if self.layout is not None:
            _write_json(root / "layout.json", self.layout)
        _write_json(root / "versions.json", [v.to_dict() for v in self.versions])
        for run_id, run in self.runs.items():
            _write_json(root / "runs" / f"run-{run_id}.json", run.to_dict())

    @classmethod
    def load(cls, directory: str | Path) -> "Project":
        root = Path(directory)
        manifest_path = root / "project.json"
        if not manifest_path.exists():
            raise ProjectError(f"no project at {root}")
        manifest = json.loads(manifest_path.read_text("utf-8"))
        if manifest.get("format_version") != FORMAT_VERSION:
            raise ProjectError(
                f"incompatible project: format {manifest.get('format_version')} "
                f"!= {FORMAT_VERSION}"
            )

        documents = [
            Document(**json.loads(line))
            for line in (root / "documents.jsonl").read_text("utf-8").splitlines()
            if line.strip()
        ]

        project = cls(
            dataset_path=manifest["dataset_path"],
            documents=documents,
            baseline_run_id=manifest["baseline_run_id"],
            next_run_id=manifest["next_run_id"],
            starred=list(manifest["starred"]),
            config=FeatureConfig.from_dict(manifest["config"]) if manifest["config"] else None,
        )
        if (root / "stats.json").exists():
            project.stats = FrozenStats.from_dict(json.loads((root / "stats.json").read_text("utf-8")))
        if (root / "clusters.json").exists():
            project.clusters = _cluster_from_dict(json.loads((root / "clusters.json").read_text("utf-8")))
        if (root / "projection.json").exists():
            project.projection = _projection_from_dict(
                json.loads((root / "projection.json").read_text("utf-8"))
            )
        if (root / "layout.json").exists():
            project.layout = json.loads((root / "layout.json").read_text("utf-8"))
        for v in json.loads((root / "versions.json").read_text("utf-8")):
            project.versions.append(PromptVersion.from_dict(v))
        for run_id in manifest["run_ids"]:
            run_path = root / "runs" / f"run-{run_id}.json"
            if not run_path.exists():
                raise ProjectError(f"missing run file: {run_path}")
            project.runs[run_id] = RunRecord.from_dict(json.loads(run_path.read_text("utf-8")))
        return project

    def state_dict(self) -> dict:
        """Canonical nested dict of the whole state (for equality checks)."""
        return {
            "dataset_path": self.dataset_path,
            "documents": [d.to_dict() for d in self.documents],
            "config": self.config.to_dict() if self.config else None,
            "stats": self.stats.to_dict() if self.stats else None,
            "clusters": _cluster_to_dict(self.clusters) if self.clusters else None,
            "projection": _projection_to_dict(self.projection) if self.projection else None,
            "layout": self.layout,
            "versions": [v.to_dict() for v in self.versions],
            "runs": {str(k): v.to_dict() for k, v in self.runs.items()},
            "starred": self.starred,
            "baseline_run_id": self.baseline_run_id,
            "next_run_id": self.next_run_id,
        }


class CompletionCache:
    """Content-addressed completion store inside the project directory."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def get(self, key: str) -> str | None:
        path = self.directory / f"{key}.json"
        if not path.exists():
            return None
        return json.loads(path.read_text("utf-8"))["text"]

    def put(self, key: str, text: str) -> None:
        existing = self.get(key)
        if existing is not None:
            if existing != text:
                raise ProjectError(f"cache key {key[:12]} would change value")
            return
        _write_json(self.directory / f"{key}.json", {"text": text})


class ProjectLock:
    """Advisory single-writer lock (pid file in the project directory).

    A leftover lock whose pid is no longer alive (unclean shutdown) is
    reclaimed automatically.
    """

    def __init__(self, directory: str | Path):
        self.path = Path(directory) / "lock"

    def _try_acquire(self) -> bool:
        try:
            fd = os.open(self.path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
        except FileExistsError:
            return False
        with os.fdopen(fd, "w") as fh:
            fh.write(str(os.getpid()))
        return True

    def _holder_alive(self) -> bool:
        try:
            pid = int(self.path.read_text("utf-8").strip())
            os.kill(pid, 0)
            return True
        except (OSError, ValueError):
            return False

    def __enter__(self) -> "ProjectLock":
        self.path.parent.mkdir(parents=True, exist_ok=True)
        if self._try_acquire():
            return self
        if not self._holder_alive():
            try:
                self.path.unlink()
            except FileNotFoundError:
                pass
            if self._try_acquire():
                return self
        raise ProjectError(f"project is locked by another writer ({self.path})")

    def __exit__(self, *exc) -> None:
        try:
            self.path.unlink()
        except FileNotFoundError:
            pass
