"""Project state: datasets, prompt versions, runs, caching, persistence."""

from sumlens.workspace.dataset import DatasetError, Document, ingest_dataset, parse_dataset_lines
from sumlens.workspace.project import (
    CompletionCache,
    FrozenStats,
    Project,
    ProjectError,
    ProjectLock,
    PromptVersion,
    RunRecord,
    SummaryResult,
)
from sumlens.workspace.runs import RunEngine

__all__ = [
    "Document",
    "DatasetError",
    "ingest_dataset",
    "parse_dataset_lines",
    "Project",
    "ProjectError",
    "ProjectLock",
    "PromptVersion",
    "RunRecord",
    "SummaryResult",
    "FrozenStats",
    "CompletionCache",
    "RunEngine",
]
