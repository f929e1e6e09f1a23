"""CLI subcommands: exit codes, artifacts, and the experiment harness."""

import csv
import json

import pytest
from click.testing import CliRunner

from sumlens.service.cli import main
from tests.conftest import BASE_CONSTRAINTS, PERSONA


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def project_dir(tmp_path, runner):
    dataset = tmp_path / "docs.jsonl"
    result = runner.invoke(main, ["demo-dataset", "--out", str(dataset)])
    assert result.exit_code == 0
    project = tmp_path / "proj"
    result = runner.invoke(main, ["init", "--dataset", str(dataset), "--project", str(project)])
    assert result.exit_code == 0
    return tmp_path, project


def write_prompt_file(tmp_path, constraints=BASE_CONSTRAINTS):
    path = tmp_path / "prompt.json"
    path.write_text(
        json.dumps({"persona": PERSONA, "constraints": constraints, "data": "{{ARTICLE}}"}),
        "utf-8",
    )
    return path


class TestInit:
    def test_missing_dataset_exits_nonzero_naming_path(self, runner, tmp_path):
        result = runner.invoke(
            main, ["init", "--dataset", str(tmp_path / "nope.jsonl"), "--project", str(tmp_path / "p")]
        )
        assert result.exit_code != 0
        assert "nope.jsonl" in result.output

    def test_unknown_flag_usage_exit_2(self, runner):
        result = runner.invoke(main, ["init", "--bogus", "x"])
        assert result.exit_code == 2
        assert "Usage" in result.output or "usage" in result.output


class TestBaselineRunExport:
    def test_baseline_run_and_export(self, runner, project_dir, tmp_path):
        base, project = project_dir
        prompt = write_prompt_file(base)
        result = runner.invoke(
            main,
            ["baseline", "--project", str(project), "--prompt-file", str(prompt), "--backend", "mock"],
        )
        assert result.exit_code == 0, result.output
        assert "complete" in result.output

        result = runner.invoke(
            main,
            ["run", "--project", str(project), "--version", "0", "--scope", "full", "--backend", "mock"],
        )
        assert result.exit_code == 0, result.output

        out = base / "export.csv"
        result = runner.invoke(
            main, ["export", "--project", str(project), "--what", "csv", "--out", str(out)]
        )
        assert result.exit_code == 0, result.output
        with out.open() as fh:
            rows = list(csv.DictReader(fh))
        # two full-corpus runs over 20 documents -> documents x runs rows
        assert len(rows) == 20 * 2
        assert {"run_id", "doc_id", "complexity", "length"} <= set(rows[0])

        out_json = base / "export.json"
        result = runner.invoke(
            main, ["export", "--project", str(project), "--what", "json", "--out", str(out_json)]
        )
        assert result.exit_code == 0
        assert len(json.loads(out_json.read_text("utf-8"))) == 40

    def test_run_against_missing_version(self, runner, project_dir):
        base, project = project_dir
        prompt = write_prompt_file(base)
        runner.invoke(main, ["baseline", "--project", str(project), "--prompt-file", str(prompt)])
        result = runner.invoke(
            main, ["run", "--project", str(project), "--version", "9", "--scope", "full"]
        )
        assert result.exit_code != 0
        assert "unknown prompt version" in result.output

    def test_validation_requires_baseline(self, runner, project_dir):
        base, project = project_dir
        result = runner.invoke(
            main, ["run", "--project", str(project), "--version", "0", "--scope", "validation"]
        )
        assert result.exit_code != 0


class TestConsistencyCommand:
    def test_mock_summary_variance_zero(self, runner, tmp_path):
        dataset = tmp_path / "sums.jsonl"
        dataset.write_text(
            "\n".join(
                json.dumps({"id": f"s{i}", "text": f"Summary number {i}."}) for i in range(4)
            ),
            "utf-8",
        )
        out = tmp_path / "exp"
        result = runner.invoke(
            main,
            [
                "experiment", "consistency",
                "--dataset", str(dataset),
                "--metric", "sentiment",
                "--levels", "none,beginner,expert",
                "--temps", "0",
                "--repeats", "1",
                "--out", str(out),
                "--backend", "mock",
            ],
        )
        assert result.exit_code == 0, result.output
        assert "mean variance 0.000000" in result.output

        with (out / "per_item.csv").open() as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["temperature", "item_id", "variance"]
        assert len(rows) == 1 + 4
        assert all(float(row[2]) == 0.0 for row in rows[1:])

        with (out / "summary.csv").open() as fh:
            summary = list(csv.reader(fh))
        assert summary[0] == ["temperature", "mean_variance", "items", "excluded"]

    def test_bad_level_rejected(self, runner, tmp_path):
        dataset = tmp_path / "sums.jsonl"
        dataset.write_text(json.dumps({"id": "a", "text": "t."}), "utf-8")
        result = runner.invoke(
            main,
            [
                "experiment", "consistency",
                "--dataset", str(dataset),
                "--metric", "sentiment",
                "--levels", "none,fancy",
                "--out", str(tmp_path / "o"),
            ],
        )
        assert result.exit_code == 2
