"""Dataset ingestion, run engine, caching, and project persistence."""

import json

import pytest

from sumlens.llm import MockBackend
from sumlens.workspace import (
    CompletionCache,
    DatasetError,
    Project,
    ProjectError,
    ProjectLock,
    RunEngine,
    ingest_dataset,
)
from tests.conftest import EDIT_CONSTRAINTS, make_blocks


class TestIngest:
    def test_valid_three_lines(self, tmp_path):
        path = tmp_path / "data.jsonl"
        path.write_text(
            "\n".join(
                json.dumps({"id": f"d{i}", "text": f"Text {i}."}) for i in range(3)
            ),
            "utf-8",
        )
        docs = ingest_dataset(path)
        assert [d.id for d in docs] == ["d0", "d1", "d2"]

    def test_duplicate_id_names_the_id(self, tmp_path):
        path = tmp_path / "data.jsonl"
        path.write_text(
            json.dumps({"id": "dup", "text": "a"}) + "\n" + json.dumps({"id": "dup", "text": "b"}),
            "utf-8",
        )
        with pytest.raises(DatasetError, match="dup"):
            ingest_dataset(path)

    def test_empty_file(self, tmp_path):
        path = tmp_path / "data.jsonl"
        path.write_text("", "utf-8")
        with pytest.raises(DatasetError, match="empty dataset"):
            ingest_dataset(path)

    def test_malformed_line_numbered(self, tmp_path):
        path = tmp_path / "data.jsonl"
        path.write_text(json.dumps({"id": "a", "text": "x"}) + "\nnot json", "utf-8")
        with pytest.raises(DatasetError, match=":2"):
            ingest_dataset(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(DatasetError, match="not found"):
            ingest_dataset(tmp_path / "none.jsonl")


class TestRunEngine:
    def test_baseline_scores_every_document(self, baseline_project):
        project, engine, backend, run = baseline_project
        assert run.scope == "baseline"
        assert len(run.doc_ids) == 20
        assert all(run.summaries[d].scores is not None for d in run.doc_ids)
        assert all(run.summaries[d].levels is not None for d in run.doc_ids)
        assert project.stats is not None
        assert project.clusters is not None
        assert project.projection is not None

    def test_validation_scope_covers_exactly_the_centroids(self, baseline_project):
        project, engine, backend, run = baseline_project
        record = engine.run_prompt(project.versions[0].id, "validation")
        assert record.doc_ids == [doc_id for doc_id, _ in project.validation_set()]

    def test_validation_before_baseline_rejected(self, demo_project):
        engine = RunEngine(demo_project, MockBackend())
        version = demo_project.create_version(make_blocks(), parent=None)
        with pytest.raises(ProjectError):
            engine.run_prompt(version.id, "validation")

    def test_second_baseline_rejected(self, baseline_project):
        project, engine, _, _ = baseline_project
        with pytest.raises(ProjectError, match="baseline already exists"):
            engine.run_prompt(project.versions[0].id, "baseline")

    def test_frozen_stats_cannot_be_restated(self, baseline_project):
        project, _, _, _ = baseline_project
        with pytest.raises(ProjectError, match="frozen"):
            project.freeze_stats(project.stats)

    def test_warm_cache_skips_backend(self, tmp_path, demo_project):
        backend = MockBackend()
        cache = CompletionCache(tmp_path / "cache")
        engine = RunEngine(demo_project, backend, cache=cache)
        version = demo_project.create_version(make_blocks(), parent=None)
        engine.run_prompt(version.id, "baseline")
        # duplicate articles share a cache entry within the first run
        unique_articles = len({d.text for d in demo_project.documents})
        calls_after_baseline = backend.call_count
        assert calls_after_baseline == unique_articles

        engine.run_prompt(version.id, "full")
        assert backend.call_count == calls_after_baseline  # all cache hits

    def test_cache_content_addressed(self, tmp_path):
        cache = CompletionCache(tmp_path)
        cache.put("k1", "value")
        cache.put("k1", "value")  # idempotent
        assert cache.get("k1") == "value"
        with pytest.raises(ProjectError, match="would change value"):
            cache.put("k1", "other")

    def test_version_lineage_is_a_tree(self, baseline_project):
        project, _, _, _ = baseline_project
        v1 = project.create_version(make_blocks(EDIT_CONSTRAINTS), parent=0)
        v2 = project.create_version(make_blocks("x {{ARTICLE}}".replace("x ", "")), parent=v1.id)
        ids = [v.id for v in project.versions]
        assert ids == sorted(ids)
        for version in project.versions:
            if version.parent is not None:
                assert version.parent in ids
                assert version.parent < version.id

    def test_unknown_parent_rejected(self, demo_project):
        with pytest.raises(ProjectError):
            demo_project.create_version(make_blocks(), parent=99)

    def test_starred_snapshot_frozen_per_version(self, baseline_project):
        project, _, _, _ = baseline_project
        project.starred = ["up-00", "up-01"]
        v1 = project.create_version(make_blocks(EDIT_CONSTRAINTS), parent=0)
        project.starred.append("up-02")
        v2 = project.create_version(make_blocks(EDIT_CONSTRAINTS), parent=v1.id)
        assert v1.starred == ("up-00", "up-01")
        assert v2.starred == ("up-00", "up-01", "up-02")


class TestPersistence:
    def test_round_trip_deep_equality(self, tmp_path, baseline_project):
        project, engine, backend, run = baseline_project
        project.starred = ["up-00", "up-01"]
        v1 = project.create_version(make_blocks(EDIT_CONSTRAINTS), parent=0)
        engine.run_prompt(v1.id, "validation")

        project.save(tmp_path / "proj")
        loaded = Project.load(tmp_path / "proj")
        assert loaded.state_dict() == project.state_dict()

    def test_crash_leftover_tmp_ignored(self, tmp_path, baseline_project):
        project, _, _, _ = baseline_project
        root = tmp_path / "proj"
        project.save(root)
        (root / "project.json.tmp-999").write_text("{corrupt", "utf-8")
        loaded = Project.load(root)
        assert loaded.state_dict() == project.state_dict()

    def test_missing_run_file_named(self, tmp_path, baseline_project):
        project, _, _, run = baseline_project
        root = tmp_path / "proj"
        project.save(root)
        (root / "runs" / f"run-{run.run_id}.json").unlink()
        with pytest.raises(ProjectError, match=f"run-{run.run_id}.json"):
            Project.load(root)

    def test_version_stamp_mismatch(self, tmp_path, demo_project):
        root = tmp_path / "proj"
        demo_project.save(root)
        manifest = json.loads((root / "project.json").read_text("utf-8"))
        manifest["format_version"] = 999
        (root / "project.json").write_text(json.dumps(manifest), "utf-8")
        with pytest.raises(ProjectError, match="incompatible project"):
            Project.load(root)

    def test_lock_excludes_second_writer(self, tmp_path):
        with ProjectLock(tmp_path):
            with pytest.raises(ProjectError, match="locked"):
                with ProjectLock(tmp_path):
                    pass
        # released: can lock again
        with ProjectLock(tmp_path):
            pass

    def test_stale_lock_from_dead_pid_is_reclaimed(self, tmp_path):
        (tmp_path / "lock").write_text("999999882", "utf-8")  # no such pid
        with ProjectLock(tmp_path):
            pass
