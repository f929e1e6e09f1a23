// Feature Selection view: correlation matrix, target dropdowns, and the
// goal chat. Excluded features are drawn striped; significant cells get a
// square sized by |r|, green for positive and red for negative.

import { el, svgEl } from "./svg";
import type { ConfigMap, CorrelationPayload } from "./types";

const CELL = 34;
const POSITIVE = "#59a14f";
const NEGATIVE = "#e15759";

export interface FeatureSelectionHandlers {
  onConfigChange?: (config: ConfigMap) => void;
  onGoalSubmit?: (goal: string) => Promise<{ config: ConfigMap; explanation: string }>;
}

export const FEATURE_LEVELS: Record<string, string[]> = {
  complexity: ["Elementary", "Middle School", "High School", "College", "Professional"],
  formality: ["Informal", "Standard", "Formal", "Very Formal"],
  sentiment: ["Negative", "Neutral", "Positive"],
  faithfulness: ["Bad", "Low", "Avg", "Good"],
  naturalness: ["Bad", "Low", "Avg", "Good"],
  length: ["Short", "Mid", "Long", "Very Long"],
};

function ensureStripePattern(svg: SVGSVGElement): void {
  const defs = svgEl("defs");
  const pattern = svgEl("pattern", {
    id: "stripes",
    width: 6,
    height: 6,
    patternUnits: "userSpaceOnUse",
    patternTransform: "rotate(45)",
  });
  pattern.appendChild(svgEl("rect", { width: 6, height: 6, fill: "#f4f4f4" }));
  pattern.appendChild(svgEl("rect", { width: 3, height: 6, fill: "#d8d8d8" }));
  defs.appendChild(pattern);
  svg.appendChild(defs);
}

export function renderCorrelationMatrix(
  container: HTMLElement,
  payload: CorrelationPayload,
): SVGSVGElement {
  const n = payload.features.length;
  const margin = 90;
  const svg = svgEl("svg", {
    width: margin + n * CELL,
    height: margin + n * CELL,
    class: "correlation-matrix",
  });
  ensureStripePattern(svg);

  const excluded = new Set(payload.excluded);
  for (const [index, feature] of payload.features.entries()) {
    const rowLabel = svgEl("text", {
      x: margin - 6,
      y: margin + index * CELL + CELL / 2 + 4,
      "text-anchor": "end",
      class: "feature-tag",
      "data-feature": feature,
    });
    rowLabel.textContent = feature;
    const title = svgEl("title");
    title.textContent = payload.descriptions[feature] ?? feature;
    rowLabel.appendChild(title);
    svg.appendChild(rowLabel);

    const colLabel = svgEl("text", {
      x: margin + index * CELL + CELL / 2,
      y: margin - 8,
      "text-anchor": "start",
      transform: `rotate(-45 ${margin + index * CELL + CELL / 2} ${margin - 8})`,
      class: "feature-tag",
      "data-feature": feature,
    });
    colLabel.textContent = feature;
    svg.appendChild(colLabel);
  }

  for (let i = 0; i < n; i++) {
    for (let j = 0; j < n; j++) {
      const x = margin + j * CELL;
      const y = margin + i * CELL;
      const striped =
        excluded.has(payload.features[i]) || excluded.has(payload.features[j]);
      const cell = svgEl("rect", {
        x,
        y,
        width: CELL - 2,
        height: CELL - 2,
        fill: striped ? "url(#stripes)" : "#fafafa",
        stroke: "#e0e0e0",
        class: striped ? "cell striped" : "cell",
        "data-row": payload.features[i],
        "data-col": payload.features[j],
      });
      svg.appendChild(cell);

      const r = payload.r[i][j];
      if (i !== j && payload.mask[i][j] && !striped) {
        // square side scales with |r|: stronger correlation, bigger square
        const side = Math.abs(r) * (CELL - 8);
        const square = svgEl("rect", {
          x: x + (CELL - 2 - side) / 2,
          y: y + (CELL - 2 - side) / 2,
          width: side,
          height: side,
          fill: r >= 0 ? POSITIVE : NEGATIVE,
          class: "significance",
          "data-r": r,
        });
        svg.appendChild(square);
      }
    }
  }

  container.appendChild(svg);
  return svg;
}

export function renderConfigDropdowns(
  container: HTMLElement,
  config: ConfigMap,
  handlers: FeatureSelectionHandlers = {},
): void {
  const form = el("div", { class: "config-form" });
  for (const [feature, levels] of Object.entries(FEATURE_LEVELS)) {
    const row = el("label", { class: "config-row", "data-feature": feature });
    const include = el("input", { type: "checkbox", class: "include" }) as HTMLInputElement;
    include.checked = config[feature]?.included ?? false;
    const select = el("select", { class: "level" }) as HTMLSelectElement;
    select.appendChild(el("option", { value: "" }, "(any)"));
    for (const level of levels) {
      select.appendChild(el("option", { value: level }, level));
    }
    select.value = config[feature]?.level ?? "";

    const update = () => {
      config[feature] = {
        included: include.checked,
        level: select.value || null,
        range: config[feature]?.range ?? null,
      };
      handlers.onConfigChange?.(config);
    };
    include.addEventListener("change", update);
    select.addEventListener("change", update);

    row.appendChild(include);
    row.appendChild(el("span", { class: "feature-name" }, feature));
    row.appendChild(select);
    form.appendChild(row);
  }
  container.appendChild(form);
}

export function renderGoalChat(
  container: HTMLElement,
  config: ConfigMap,
  handlers: FeatureSelectionHandlers,
): void {
  const box = el("div", { class: "goal-chat" });
  const input = el("input", {
    type: "text",
    class: "goal-input",
    placeholder: "Describe your summarization goal...",
  }) as HTMLInputElement;
  const button = el("button", { class: "goal-submit" }, "Recommend");
  const answer = el("p", { class: "goal-answer" });

  button.addEventListener("click", async () => {
    if (!handlers.onGoalSubmit || !input.value.trim()) return;
    try {
      const result = await handlers.onGoalSubmit(input.value);
      answer.textContent = result.explanation;
      // auto-fill the dropdowns from the recommended configuration
      for (const [feature, target] of Object.entries(result.config)) {
        config[feature] = target;
      }
      const form = container.querySelector(".config-form");
      if (form) form.remove();
      renderConfigDropdowns(container, config, handlers);
      handlers.onConfigChange?.(config);
    } catch (error) {
      answer.textContent = `Recommendation failed: ${(error as Error).message}`;
      answer.classList.add("error-banner");
    }
  });

  box.appendChild(input);
  box.appendChild(button);
  box.appendChild(answer);
  container.appendChild(box);
}
