"""Five-block prompt structure and deterministic message assembly."""

from __future__ import annotations

from dataclasses import dataclass

ARTICLE_PLACEHOLDER = "{{ARTICLE}}"
BLOCK_NAMES = ("persona", "context", "constraints", "examples", "data")

# Shown in the editor UI and injected into the suggestion agent's prompt.
BLOCK_DEFINITIONS = {
    "persona": "Specify a role-based identity for the AI to adopt, e.g. an experienced news editor.",
    "context": "Provide background the task depends on: the audience, the publication, the purpose of the summary.",
    "constraints": "State hard requirements on the output: length, tone, vocabulary, structure, what to avoid.",
    "examples": "Show model outputs to imitate; each starred example summary is inserted here.",
    "data": "Hold the input article; the {{ARTICLE}} placeholder is replaced per document.",
}


@dataclass(frozen=True)
class PromptBlocks:
    persona: str = ""
    context: str = ""
    constraints: str = ""
    examples: str = ""
    data: str = ARTICLE_PLACEHOLDER

    def validate(self) -> None:
        if self.data.count(ARTICLE_PLACEHOLDER) != 1:
            raise ValueError(
                f"data block malformed: needs exactly one {ARTICLE_PLACEHOLDER} placeholder"
            )

    def to_dict(self) -> dict[str, str]:
        return {name: getattr(self, name) for name in BLOCK_NAMES}

    @classmethod
    def from_dict(cls, data: dict) -> "PromptBlocks":
        return cls(**{name: data.get(name, "") for name in BLOCK_NAMES})


def assemble_prompt(
    blocks: PromptBlocks, article: str, example_summaries: tuple[str, ...] | list[str] = ()
) -> list[dict[str, str]]:
    """Build the single user message for one document.

    Sections appear in fixed order with their labels; empty blocks are
    omitted entirely. Byte-for-byte deterministic for fixed inputs.
    """
    blocks.validate()

    example_parts: list[str] = []
    if blocks.examples.strip():
        example_parts.append(blocks.examples)
    for summary in example_summaries:
        example_parts.append(f"Example summary:\n{summary}")

    sections: list[tuple[str, str]] = [
        ("Persona", blocks.persona),
        ("Context", blocks.context),
        ("Constraints", blocks.constraints),
        ("Examples", "\n\n".join(example_parts)),
        ("Data", blocks.data.replace(ARTICLE_PLACEHOLDER, article)),
    ]
    rendered = [f"{label}:\n{content}" for label, content in sections if content.strip()]
    return [{"role": "user", "content": "\n\n".join(rendered)}]
