"""Synthetic demo dataset with planted structure.

Twenty documents in two stylistic groups: ten short, simple, upbeat
reports and ten long, formal, neutral briefs. Extractive summaries of the
two groups land in two well-separated feature-space clusters, which makes
the dataset useful for demos and end-to-end tests alike.
"""

from __future__ import annotations

import json
from pathlib import Path

from sumlens.workspace.dataset import Document

_UPBEAT_SENTENCES = [
    "The team won the great fun win.",
    "The fans loved the great fun win.",
    "The great win brought joy and fun.",
    "The glad fans loved the great win.",
    "The kind crowd loved the great win.",
    "The proud team won the best win.",
    "The good win was great fun.",
    "Fans felt great joy and love.",
    "The fans loved the best fun win.",
    "The great win was good fun.",
    "The team won with great joy.",
    "The best team won the great win.",
]

_FORMAL_SENTENCES = [
    "The municipal infrastructure committee deliberated extensively regarding the proposed transportation budget, evaluating numerous competing priorities while considering the long-term implications of deferred maintenance obligations across several aging corridors throughout the metropolitan region during the protracted quarterly planning session.",
    "Regulatory representatives subsequently examined the comprehensive environmental assessment documentation, identifying substantive methodological inconsistencies within the preliminary analysis and recommending additional independent verification procedures before any definitive authorization could reasonably be granted to the petitioning organizations during the quarterly session.",
    "The consolidated financial disclosures revealed considerable uncertainty surrounding projected operational expenditures, prompting institutional stakeholders to request supplementary actuarial documentation alongside detailed contingency provisions addressing potential liquidity constraints anticipated during the forthcoming fiscal period and the subsequent planning session.",
    "Administrative personnel coordinated an exhaustive procedural review encompassing statutory compliance obligations, interdepartmental communication protocols, and archival documentation standards, ultimately producing an extensive memorandum outlining incremental organizational reforms scheduled for staged implementation during the forthcoming quarterly planning period.",
    "The advisory panel evaluated longitudinal demographic projections alongside infrastructure utilization statistics, concluding that incremental capacity expansions would likely prove insufficient without corresponding investments in distributed service delivery mechanisms across underserved peripheral jurisdictions throughout the forthcoming planning period.",
    "Institutional auditors documented systematic discrepancies between authorized procurement allocations and recorded disbursement totals, recommending comprehensive reconciliation procedures together with strengthened internal oversight mechanisms governing departmental expenditure authorization workflows throughout the subsequent quarterly reporting period.",
]


def demo_documents(count: int = 20) -> list[Document]:
    """Deterministic two-group dataset; half upbeat, half formal."""
    docs: list[Document] = []
    half = count // 2
    for i in range(half):
        sentences = [_UPBEAT_SENTENCES[(i + j) % len(_UPBEAT_SENTENCES)] for j in range(6)]
        docs.append(
            Document(id=f"up-{i:02d}", text=" ".join(sentences), title=f"Match report {i + 1}")
        )
    for i in range(count - half):
        sentences = [_FORMAL_SENTENCES[(i + j) % len(_FORMAL_SENTENCES)] for j in range(4)]
        docs.append(
            Document(id=f"brief-{i:02d}", text=" ".join(sentences), title=f"Policy brief {i + 1}")
        )
    return docs


def write_demo_dataset(path: str | Path, count: int = 20) -> list[Document]:
    docs = demo_documents(count)
    Path(path).write_text(
        "\n".join(json.dumps(d.to_dict(), sort_keys=True) for d in docs), "utf-8"
    )
    return docs
