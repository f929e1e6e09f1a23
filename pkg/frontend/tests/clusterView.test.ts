// Cluster plot contract: the noise toggle changes the visible-point count
// by exactly the payload's noise count; recommendation cards show payload
// values verbatim and round-trip stars through the API.

import { beforeEach, describe, expect, it, vi } from "vitest";

import { renderClusterPlot, renderNoiseToggle, renderRecommendations } from "../src/clusterView";
import type { ClustersPayload, ExampleCard } from "../src/types";
import { container, fixture, okEnvelope } from "./helpers";

const noisy = fixture<ClustersPayload>("clusters_noise");
const clean = fixture<ClustersPayload>("clusters");
const recommendations = fixture<{ examples: ExampleCard[] }>("recommendations");

describe("cluster plot noise toggle", () => {
  beforeEach(() => {
    document.body.innerHTML = "";
  });

  it("hides noise by default and reveals exactly noise_count more points", () => {
    const root = container();
    const state = { showNoise: false, matchedCluster: null };

    let svg = renderClusterPlot(root, noisy, state);
    const hidden = svg.querySelectorAll("circle.summary-dot").length;
    expect(hidden).toBe(noisy.points.length - noisy.noise_count);

    state.showNoise = true;
    svg = renderClusterPlot(root, noisy, state);
    const shown = svg.querySelectorAll("circle.summary-dot").length;
    expect(shown - hidden).toBe(noisy.noise_count);
    expect(noisy.noise_count).toBeGreaterThan(0);
  });

  it("toggle control flips the state and rerenders", () => {
    const root = container();
    const state = { showNoise: false, matchedCluster: null };
    const rerender = vi.fn(() => renderClusterPlot(root, noisy, state));
    renderNoiseToggle(root, noisy, state, rerender);
    renderClusterPlot(root, noisy, state);

    const box = root.querySelector(".noise-toggle input") as HTMLInputElement;
    box.checked = true;
    box.dispatchEvent(new Event("change"));
    expect(state.showNoise).toBe(true);
    expect(rerender).toHaveBeenCalledOnce();
  });

  it("draws a bubble around the matched cluster", () => {
    const svg = renderClusterPlot(container(), clean, {
      showNoise: false,
      matchedCluster: 0,
    });
    expect(svg.querySelector("path.target-bubble")).not.toBeNull();
  });

  it("colors points by cluster from the shared palette", () => {
    const svg = renderClusterPlot(container(), clean, { showNoise: true, matchedCluster: null });
    const fills = new Set(
      [...svg.querySelectorAll("circle.summary-dot")].map((c) => c.getAttribute("fill")),
    );
    expect(fills.size).toBe(clean.sizes.length);
  });
});

describe("recommendation cards", () => {
  beforeEach(() => {
    document.body.innerHTML = "";
    vi.restoreAllMocks();
  });

  it("renders payload feature values verbatim in the green bars", () => {
    const root = container();
    renderRecommendations(root, recommendations.examples);
    const firstCard = recommendations.examples[0];
    const card = root.querySelector(`.example-card[data-doc="${firstCard.doc_id}"]`)!;
    const bars = [...card.querySelectorAll("rect.green-bar")];
    expect(bars).toHaveLength(firstCard.bars.length);
    for (const [i, bar] of bars.entries()) {
      expect(bar.getAttribute("data-feature")).toBe(firstCard.bars[i].feature);
      expect(Number(bar.getAttribute("data-value"))).toBe(firstCard.bars[i].value);
    }
  });

  it("round-trips starring through the API and re-renders", async () => {
    const root = container();
    const target = recommendations.examples.find((c) => !c.starred)!;
    const fetchMock = vi.fn(async (url: RequestInfo | URL, init?: RequestInit) => {
      expect(String(url)).toBe(`/api/v1/examples/${target.doc_id}/star`);
      expect(init?.method).toBe("POST");
      return okEnvelope({ starred: [target.doc_id] });
    });
    vi.stubGlobal("fetch", fetchMock);

    const { api } = await import("../src/api");
    renderRecommendations(root, recommendations.examples, {
      onToggleStar: async (docId, starred) => {
        await (starred ? api.star(docId) : api.unstar(docId));
        const updated = recommendations.examples.map((c) =>
          c.doc_id === docId ? { ...c, starred } : c,
        );
        renderRecommendations(root, updated);
      },
    });

    const card = root.querySelector(`.example-card[data-doc="${target.doc_id}"]`)!;
    (card.querySelector("button.star") as HTMLButtonElement).click();
    await new Promise((resolve) => setTimeout(resolve, 0));

    expect(fetchMock).toHaveBeenCalledOnce();
    const after = root.querySelector(
      `.example-card[data-doc="${target.doc_id}"] button.star`,
    )!;
    expect(after.classList.contains("starred")).toBe(true);
  });

  it("shows an empty state when nothing fits", () => {
    const root = container();
    renderRecommendations(root, []);
    expect(root.querySelector(".empty-state")).not.toBeNull();
  });
});
