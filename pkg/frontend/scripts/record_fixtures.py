"""Record API payload fixtures for the frontend contract tests.

Runs the full mock-backend loop in-process and saves each endpoint's
envelope payload under frontend/fixtures/. Run from the repo root:

    python frontend/scripts/record_fixtures.py
"""

from __future__ import annotations

import json
import time
from pathlib import Path

from fastapi.testclient import TestClient

from sumlens.llm import MockBackend
from sumlens.service.api import create_app
from sumlens.workspace import Project
from sumlens.workspace.dataset import Document
from sumlens.workspace.demo import demo_documents

PERSONA = "You are a news editor."
BASE_CONSTRAINTS = "Summarize the key points clearly. (rev 0)"
EDIT_CONSTRAINTS = "Keep the summary short and simple. (rev 7)"
GOAL = "short positive summaries that kids enjoy"

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def wait(client, run_id):
    for _ in range(600):
        payload = client.get(f"/api/v1/runs/{run_id}").json()["payload"]
        if payload.get("state") in ("complete", "partial", "failed", "error"):
            return payload
        time.sleep(0.02)
    raise TimeoutError


def save(name: str, payload) -> None:
    (OUT / f"{name}.json").write_text(json.dumps(payload, indent=1, sort_keys=True), "utf-8")
    print(f"wrote fixtures/{name}.json")


def main() -> None:
    OUT.mkdir(exist_ok=True)
    project = Project(dataset_path="demo", documents=demo_documents())
    client = TestClient(create_app(project, MockBackend()))

    save("dataset", client.get("/api/v1/dataset").json()["payload"])

    body = client.post(
        "/api/v1/baseline",
        json={"persona": PERSONA, "constraints": BASE_CONSTRAINTS, "data": "{{ARTICLE}}"},
    ).json()["payload"]
    wait(client, body["run_id"])

    rec = client.post("/api/v1/recommend", json={"goal": GOAL}).json()["payload"]
    save("recommend", rec)
    client.put("/api/v1/config", json={"config": rec["config"]})
    save("config", client.get("/api/v1/config").json()["payload"])
    save("match", client.post("/api/v1/config/match").json()["payload"])

    save("correlation", client.get("/api/v1/correlation").json()["payload"])
    save("clusters", client.get("/api/v1/clusters").json()["payload"])
    save("profiles", client.get("/api/v1/clusters/profiles").json()["payload"])
    save("distributions", client.get("/api/v1/features/distributions").json()["payload"])

    recs = client.get("/api/v1/recommendations").json()["payload"]
    for card in recs["examples"][:2]:
        client.post(f"/api/v1/examples/{card['doc_id']}/star")
    save("recommendations", client.get("/api/v1/recommendations").json()["payload"])
    save("block_definitions", client.get("/api/v1/blocks/definitions").json()["payload"])
    save(
        "suggestion",
        client.post(
            "/api/v1/suggest", json={"block": "constraints", "question": "How do I shorten?"}
        ).json()["payload"],
    )

    version = client.post(
        "/api/v1/versions",
        json={
            "blocks": {"persona": PERSONA, "constraints": EDIT_CONSTRAINTS, "data": "{{ARTICLE}}"},
            "parent": body["version_id"],
        },
    ).json()["payload"]["version"]
    run = client.post("/api/v1/runs", json={"version_id": version["id"], "scope": "validation"})
    new_run = run.json()["payload"]["run_id"]
    wait(client, new_run)

    save("versions", client.get("/api/v1/versions").json()["payload"])
    save("runs", client.get("/api/v1/runs").json()["payload"])
    save("run_detail", client.get(f"/api/v1/runs/{new_run}").json()["payload"])
    save("dotplot", client.get(f"/api/v1/runs/{new_run}/dotplot").json()["payload"])
    save(
        "comparison",
        client.get(
            "/api/v1/comparison", params={"old_run": body["run_id"], "new_run": new_run}
        ).json()["payload"],
    )

    record_noise_variant()


def record_noise_variant() -> None:
    """A second project with an outlier document, so the clusters payload
    carries a nonzero noise count for the noise-toggle contract test."""
    outlier_sentences = [
        " ".join(f"filler{i}w{j}" for j in range(90)) + "." for i in range(3)
    ]
    docs = demo_documents() + [
        Document(id="outlier-00", text=" ".join(outlier_sentences), title="Outlier")
    ]
    project = Project(dataset_path="demo+outlier", documents=docs)
    client = TestClient(create_app(project, MockBackend()))
    body = client.post(
        "/api/v1/baseline",
        json={"persona": PERSONA, "constraints": BASE_CONSTRAINTS, "data": "{{ARTICLE}}"},
    ).json()["payload"]
    wait(client, body["run_id"])
    payload = client.get("/api/v1/clusters").json()["payload"]
    assert payload["noise_count"] >= 1, "outlier was not flagged as noise"
    save("clusters_noise", payload)


if __name__ == "__main__":
    main()
