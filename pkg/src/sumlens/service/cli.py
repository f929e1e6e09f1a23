"""Command-line interface: project setup, runs, export, experiments, server."""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import click

from sumlens.llm import LiveBackend, MockBackend, PromptBlocks, ScriptedBackend
from sumlens.llm.consistency import DEFINITION_LEVELS, EVAL_METRICS, run_consistency
from sumlens.metrics import FEATURES
from sumlens.workspace import (
    CompletionCache,
    DatasetError,
    Project,
    ProjectError,
    ProjectLock,
    RunEngine,
    ingest_dataset,
)
from sumlens.workspace.demo import write_demo_dataset


def _make_backend(name: str, transcript: str | None):
    if name == "mock":
        return MockBackend()
    if name == "scripted":
        if not transcript:
            raise click.UsageError("--transcript is required for the scripted backend")
        return ScriptedBackend(path=transcript)
    if name == "live":
        return LiveBackend()
    raise click.UsageError(f"unknown backend {name!r}")


def _load_project(project_dir: str) -> Project:
    try:
        return Project.load(project_dir)
    except ProjectError as exc:
        raise click.ClickException(str(exc))


backend_option = click.option(
    "--backend", default="mock", show_default=True, type=click.Choice(["mock", "scripted", "live"])
)
transcript_option = click.option("--transcript", default=None, help="Scripted-backend transcript file.")


@click.group()
def main():
    """Feature-metric workbench for summarization prompt refinement."""


@main.command()
@click.option("--dataset", required=True, help="JSON-lines dataset (one document per line).")
@click.option("--project", "project_dir", required=True, help="Project directory to create.")
def init(dataset: str, project_dir: str):
    """Create a project directory from a dataset file."""
    try:
        documents = ingest_dataset(dataset)
    except DatasetError as exc:
        raise click.ClickException(str(exc))
    project = Project(dataset_path=str(dataset), documents=documents)
    project.save(project_dir)
    click.echo(f"initialized project with {len(documents)} documents at {project_dir}")


@main.command("demo-dataset")
@click.option("--out", required=True, help="Where to write the demo dataset.")
@click.option("--count", default=20, show_default=True)
def demo_dataset(out: str, count: int):
    """Write the built-in synthetic demo dataset."""
    docs = write_demo_dataset(out, count)
    click.echo(f"wrote {len(docs)} documents to {out}")


@main.command()
@click.option("--project", "project_dir", required=True)
@click.option("--prompt-file", required=True, help="JSON file with the five prompt blocks.")
@backend_option
@transcript_option
def baseline(project_dir: str, prompt_file: str, backend: str, transcript: str | None):
    """Create the baseline version and run it over the whole dataset."""
    project = _load_project(project_dir)
    try:
        blocks = PromptBlocks.from_dict(json.loads(Path(prompt_file).read_text("utf-8")))
    except (OSError, json.JSONDecodeError) as exc:
        raise click.ClickException(f"cannot read prompt file: {exc}")
    engine = RunEngine(
        project, _make_backend(backend, transcript), cache=CompletionCache(Path(project_dir) / "cache")
    )
    try:
        with ProjectLock(project_dir):
            version = project.create_version(blocks, parent=None)
            run = engine.run_prompt(version.id, "baseline")
            project.save(project_dir)
    except (ProjectError, ValueError) as exc:
        raise click.ClickException(str(exc))
    click.echo(f"baseline run {run.run_id} ({run.status}): {len(run.doc_ids)} documents")


@main.command()
@click.option("--project", "project_dir", required=True)
@click.option("--version", "version_id", required=True, type=int)
@click.option("--scope", required=True, type=click.Choice(["validation", "full"]))
@backend_option
@transcript_option
def run(project_dir: str, version_id: int, scope: str, backend: str, transcript: str | None):
    """Execute a prompt version on the validation set or the whole dataset."""
    project = _load_project(project_dir)
    engine = RunEngine(
        project, _make_backend(backend, transcript), cache=CompletionCache(Path(project_dir) / "cache")
    )
    try:
        with ProjectLock(project_dir):
            record = engine.run_prompt(version_id, scope)
            project.save(project_dir)
    except (ProjectError, ValueError) as exc:
        raise click.ClickException(str(exc))
    click.echo(f"run {record.run_id} ({record.status}): {len(record.doc_ids)} documents")


@main.command()
@click.option("--project", "project_dir", required=True)
@click.option("--what", required=True, type=click.Choice(["csv", "json"]))
@click.option("--out", required=True)
def export(project_dir: str, what: str, out: str):
    """Export per-document feature scores for every run."""
    project = _load_project(project_dir)
    rows = []
    for run_id in sorted(project.runs):
        record = project.runs[run_id]
        for doc_id in record.doc_ids:
            result = record.summaries[doc_id]
            row: dict = {
                "run_id": run_id,
                "version_id": record.version_id,
                "scope": record.scope,
                "doc_id": doc_id,
                "status": "error" if result.error else "ok",
            }
            for name in FEATURES:
                row[name] = result.scores.value_of(name) if result.scores else None
            rows.append(row)

    out_path = Path(out)
    if what == "json":
        out_path.write_text(json.dumps(rows, indent=1), "utf-8")
    else:
        with out_path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(
                fh, fieldnames=["run_id", "version_id", "scope", "doc_id", "status", *FEATURES]
            )
            writer.writeheader()
            writer.writerows(rows)
    click.echo(f"wrote {len(rows)} rows to {out}")


@main.group()
def experiment():
    """Evaluation consistency experiments."""


@experiment.command()
@click.option("--dataset", required=True, help="JSON-lines dataset of summaries (id/text).")
@click.option("--metric", required=True, type=click.Choice(list(EVAL_METRICS)))
@click.option("--levels", default="none,beginner,expert", show_default=True)
@click.option("--temps", default="0.0", show_default=True)
@click.option("--repeats", default=1, show_default=True, type=int)
@click.option("--out", required=True, help="Output directory for CSV files.")
@backend_option
@transcript_option
def consistency(
    dataset: str,
    metric: str,
    levels: str,
    temps: str,
    repeats: int,
    out: str,
    backend: str,
    transcript: str | None,
):
    """Score the dataset repeatedly and report per-item score variance."""
    try:
        documents = ingest_dataset(dataset)
    except DatasetError as exc:
        raise click.ClickException(str(exc))
    items = [{"id": d.id, "summary": d.text, "article": d.title or d.text} for d in documents]

    level_list = tuple(level.strip() for level in levels.split(",") if level.strip())
    bad = [level for level in level_list if level not in DEFINITION_LEVELS]
    if bad:
        raise click.UsageError(f"unknown levels: {bad}; expected from {DEFINITION_LEVELS}")
    try:
        temp_list = tuple(float(t) for t in temps.split(",") if t.strip())
    except ValueError:
        raise click.UsageError(f"bad --temps value: {temps!r}")

    report = run_consistency(
        items,
        metric,
        _make_backend(backend, transcript),
        levels=level_list,
        temperatures=temp_list,
        repeats=repeats,
    )

    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    with (out_dir / "per_item.csv").open("w", newline="", encoding="utf-8") as fh:
        csv.writer(fh).writerows(report.csv_rows())
    with (out_dir / "summary.csv").open("w", newline="", encoding="utf-8") as fh:
        csv.writer(fh).writerows(report.summary_rows())
    for temp in temp_list:
        click.echo(f"temperature {temp}: mean variance {report.mean_variance(temp):.6f}")
    click.echo(f"wrote {out_dir / 'per_item.csv'} and {out_dir / 'summary.csv'}")


@main.command()
@click.option("--project", "project_dir", required=True)
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@backend_option
@transcript_option
@click.option("--temperature", default=0.0, show_default=True, type=float)
def serve(project_dir: str, port: int, host: str, backend: str, transcript: str | None, temperature: float):
    """Serve the HTTP API for the browser workbench."""
    import uvicorn

    from sumlens.service.api import create_app

    project = _load_project(project_dir)
    app = create_app(
        project,
        _make_backend(backend, transcript),
        project_dir=Path(project_dir),
        temperature=temperature,
    )
    try:
        with ProjectLock(project_dir):  # single writer while serving
            uvicorn.run(app, host=host, port=port)
    except ProjectError as exc:
        raise click.ClickException(str(exc))


if __name__ == "__main__":
    sys.exit(main())
