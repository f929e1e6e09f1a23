import time

import pytest
from fastapi.testclient import TestClient

from sumlens.llm import MockBackend, PromptBlocks
from sumlens.service.api import create_app
from sumlens.workspace import Project, RunEngine
from sumlens.workspace.demo import demo_documents

# Budgets verified against MockBackend.sentence_budget in tests.
PERSONA = "You are a news editor."
BASE_CONSTRAINTS = "Summarize the key points clearly. (rev 0)"  # budget 3
EDIT_CONSTRAINTS = "Keep the summary short and simple. (rev 7)"  # budget 2
GOAL = "short positive summaries that kids enjoy"


def make_blocks(constraints: str = BASE_CONSTRAINTS) -> PromptBlocks:
    return PromptBlocks(persona=PERSONA, constraints=constraints, data="{{ARTICLE}}")


@pytest.fixture()
def demo_project():
    return Project(dataset_path="demo", documents=demo_documents())


@pytest.fixture()
def baseline_project(demo_project):
    """Demo project with a completed baseline run (mock backend)."""
    backend = MockBackend()
    engine = RunEngine(demo_project, backend)
    version = demo_project.create_version(make_blocks(), parent=None)
    run = engine.run_prompt(version.id, "baseline")
    assert run.status == "complete"
    return demo_project, engine, backend, run


@pytest.fixture()
def api_client(demo_project):
    app = create_app(demo_project, MockBackend())
    with TestClient(app) as client:
        yield client, demo_project


def wait_run(client, run_id: int, timeout_s: float = 30.0) -> dict:
    deadline = time.monotonic() + timeout_s
    while time.monotonic() < deadline:
        payload = client.get(f"/api/v1/runs/{run_id}").json()["payload"]
        if payload.get("state") in ("complete", "partial", "failed", "error"):
            return payload
        time.sleep(0.02)
    raise TimeoutError(f"run {run_id} did not finish")
