"""Dataset ingestion: one JSON document per line."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path


class DatasetError(Exception):
    pass


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    title: str = ""

    def to_dict(self) -> dict:
        return {"id": self.id, "text": self.text, "title": self.title}


def parse_dataset_lines(lines: list[str], source: str = "<memory>") -> list[Document]:
    documents: list[Document] = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            doc = Document(
                id=str(record["id"]),
                text=str(record["text"]),
                title=str(record.get("title", "")),
            )
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise DatasetError(f"{source}:{lineno}: malformed document line ({exc})") from exc
        if doc.id in seen:
            raise DatasetError(f"{source}:{lineno}: duplicate document id {doc.id!r}")
        seen.add(doc.id)
        documents.append(doc)
    if not documents:
        raise DatasetError(f"{source}: empty dataset")
    return documents


def ingest_dataset(path: str | Path) -> list[Document]:
    path = Path(path)
    if not path.exists():
        raise DatasetError(f"dataset file not found: {path}")
    return parse_dataset_lines(path.read_text("utf-8").splitlines(), source=str(path))
