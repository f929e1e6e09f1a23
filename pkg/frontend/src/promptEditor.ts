// Prompt Editor view: five labeled blocks with hover definitions, the
// suggestion chat, and Apply (create version -> validation run -> poll).

import { api, pollRun } from "./api";
import { el } from "./svg";
import type { PromptBlocksBody, RunStatusPayload, VersionPayload } from "./types";

export const BLOCK_NAMES = ["persona", "context", "constraints", "examples", "data"] as const;

export interface PromptEditorHandlers {
  onApplied?: (version: VersionPayload, status: RunStatusPayload) => void;
}

export function readBlocks(root: HTMLElement): PromptBlocksBody {
  const value = (name: string) =>
    (root.querySelector(`textarea[data-block="${name}"]`) as HTMLTextAreaElement).value;
  return {
    persona: value("persona"),
    context: value("context"),
    constraints: value("constraints"),
    examples: value("examples"),
    data: value("data"),
  };
}

export function renderPromptEditor(
  container: HTMLElement,
  options: {
    definitions: Record<string, string>;
    initial?: Partial<PromptBlocksBody>;
    parent: number | null;
    starredExamples?: string[];
    handlers?: PromptEditorHandlers;
  },
): HTMLElement {
  const root = el("div", { class: "prompt-editor" });

  for (const name of BLOCK_NAMES) {
    const field = el("div", { class: "block-field", "data-block": name });
    const title = el("h4", { title: options.definitions[name] ?? "" }, name);
    const area = el("textarea", { "data-block": name, rows: "3" }) as HTMLTextAreaElement;
    if (name === "data") {
      area.value = options.initial?.data ?? "{{ARTICLE}}";
    } else if (name === "examples" && options.starredExamples?.length) {
      // pre-fill from the starred ideal examples
      area.value = options.starredExamples.map((t) => `Example summary:\n${t}`).join("\n\n");
    } else {
      area.value = options.initial?.[name] ?? "";
    }
    field.appendChild(title);
    field.appendChild(area);

    const ask = el("button", { class: "suggest", "data-block": name }, "Get Suggestions");
    const answer = el("p", { class: "suggestion-text" });
    ask.addEventListener("click", async () => {
      try {
        const result = await api.suggest(name, `How should I write the ${name} block?`);
        answer.textContent = result.suggestion;
      } catch (error) {
        answer.textContent = `Suggestion failed: ${(error as Error).message}`;
        answer.classList.add("error-banner");
      }
    });
    field.appendChild(ask);
    field.appendChild(answer);
    root.appendChild(field);
  }

  const apply = el("button", { class: "apply" }, "Apply");
  const progress = el("p", { class: "run-progress" });
  apply.addEventListener("click", async () => {
    const blocks = readBlocks(root);
    try {
      const { version } = await api.createVersion(blocks, options.parent);
      const { run_id } = await api.submitRun(version.id, "validation");
      progress.textContent = `run ${run_id}: queued`;
      const status = await pollRun(run_id, {
        intervalMs: 200,
        onProgress: (s) => {
          progress.textContent = `run ${run_id}: ${s.state}${
            s.total ? ` (${s.done}/${s.total})` : ""
          }`;
        },
      });
      options.handlers?.onApplied?.(version, status);
    } catch (error) {
      progress.textContent = `Apply failed: ${(error as Error).message}`;
      progress.classList.add("error-banner");
    }
  });
  root.appendChild(apply);
  root.appendChild(progress);

  container.appendChild(root);
  return root;
}
