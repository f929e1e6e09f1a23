// Example Sourcing view: the cluster scatter with the matched-cluster
// bubble and noise toggle, profile bars, feature distributions, and the
// recommendation cards with star controls.

import { hullPath } from "./hull";
import { BAND_COLOR, TARGET_HULL_COLOR, clusterColor } from "./palette";
import { el, extentOf, scaler, svgEl } from "./svg";
import type {
  ClustersPayload,
  DistributionsPayload,
  ExampleCard,
  ProfilesPayload,
} from "./types";

const WIDTH = 460;
const HEIGHT = 380;

export interface ClusterViewState {
  showNoise: boolean;
  matchedCluster: number | null;
}

export function renderClusterPlot(
  container: HTMLElement,
  payload: ClustersPayload,
  state: ClusterViewState,
): SVGSVGElement {
  container.querySelector("svg.cluster-plot")?.remove();
  const svg = svgEl("svg", { width: WIDTH, height: HEIGHT, class: "cluster-plot" });
  const points = payload.points.map((p) => [p.x, p.y] as [number, number]);
  const { x, y } = scaler(extentOf(points), WIDTH, HEIGHT);

  if (state.matchedCluster !== null) {
    const members = payload.points.filter((p) => p.cluster === state.matchedCluster);
    const path = hullPath(members.map((p) => [x(p.x), y(p.y)] as [number, number]));
    svg.appendChild(
      svgEl("path", {
        d: path,
        fill: TARGET_HULL_COLOR,
        "fill-opacity": 0.35,
        stroke: TARGET_HULL_COLOR,
        class: "target-bubble",
      }),
    );
  }

  for (const point of payload.points) {
    if (point.noise && !state.showNoise) continue;
    svg.appendChild(
      svgEl("circle", {
        cx: x(point.x),
        cy: y(point.y),
        r: 6,
        fill: clusterColor(point.cluster),
        class: point.noise ? "summary-dot noise" : "summary-dot",
        "data-doc": point.doc_id,
        "data-cluster": point.cluster,
      }),
    );
  }

  container.appendChild(svg);
  return svg;
}

export function renderNoiseToggle(
  container: HTMLElement,
  payload: ClustersPayload,
  state: ClusterViewState,
  rerender: () => void,
): HTMLElement {
  const label = el("label", { class: "noise-toggle" });
  const box = el("input", { type: "checkbox" }) as HTMLInputElement;
  box.checked = state.showNoise;
  box.addEventListener("change", () => {
    state.showNoise = box.checked;
    rerender();
  });
  label.appendChild(box);
  label.appendChild(
    el("span", {}, `show ${payload.noise_count} noise point${payload.noise_count === 1 ? "" : "s"}`),
  );
  container.appendChild(label);
  return label;
}

export function renderClusterProfiles(
  container: HTMLElement,
  payload: ProfilesPayload,
  onSelect?: (cluster: number) => void,
): void {
  const wrap = el("div", { class: "profiles" });
  for (const [clusterId, bars] of Object.entries(payload)) {
    const card = el("div", { class: "profile-card", "data-cluster": clusterId });
    card.appendChild(el("h4", {}, `Cluster ${clusterId}`));
    const svg = svgEl("svg", { width: 180, height: bars.length * 22, class: "profile-bars" });
    bars.forEach((bar, i) => {
      // center line = global mean; the bar spans the scaled min..max
      svg.appendChild(
        svgEl("line", { x1: 90, y1: i * 22, x2: 90, y2: i * 22 + 18, stroke: "#bbb" }),
      );
      const rect = svgEl("rect", {
        x: bar.scaled_min * 180,
        y: i * 22 + 4,
        width: Math.max((bar.scaled_max - bar.scaled_min) * 180, 2),
        height: 10,
        fill: clusterColor(Number(clusterId)),
        class: "profile-bar",
        "data-feature": bar.feature,
      });
      const title = svgEl("title");
      title.textContent = `${bar.feature}: ${bar.raw_min} to ${bar.raw_max}`;
      rect.appendChild(title);
      svg.appendChild(rect);
    });
    card.addEventListener("click", () => onSelect?.(Number(clusterId)));
    card.appendChild(svg);
    wrap.appendChild(card);
  }
  container.appendChild(wrap);
}

export function renderDistributions(
  container: HTMLElement,
  payload: DistributionsPayload,
  targetRanges: Record<string, [number, number] | null> = {},
  onRangePick?: (feature: string, range: [number, number]) => void,
): void {
  const wrap = el("div", { class: "distributions" });
  for (const [feature, data] of Object.entries(payload)) {
    const block = el("div", { class: "distribution", "data-feature": feature });
    block.appendChild(el("h5", {}, feature));
    const svg = svgEl("svg", { width: 220, height: data.clusters.length * 18 + 4 });
    const span = data.global_max - data.global_min || 1;
    const toX = (v: number) => ((v - data.global_min) / span) * 200 + 10;

    const target = targetRanges[feature];
    if (target) {
      svg.appendChild(
        svgEl("rect", {
          x: toX(target[0]),
          y: 0,
          width: Math.max(toX(target[1]) - toX(target[0]), 1),
          height: data.clusters.length * 18 + 4,
          fill: BAND_COLOR,
          class: "target-range",
        }),
      );
    }

    data.clusters.forEach((cluster, i) => {
      const bar = svgEl("rect", {
        x: toX(cluster.min),
        y: i * 18 + 4,
        width: Math.max(toX(cluster.max) - toX(cluster.min), 2),
        height: 10,
        fill: clusterColor(cluster.cluster),
        class: "distribution-bar",
        "data-cluster": cluster.cluster,
      });
      bar.addEventListener("click", () => onRangePick?.(feature, [cluster.min, cluster.max]));
      svg.appendChild(bar);
    });
    block.appendChild(svg);
    wrap.appendChild(block);
  }
  container.appendChild(wrap);
}

export interface RecommendationHandlers {
  onToggleStar?: (docId: string, starred: boolean) => Promise<void>;
}

export function renderRecommendations(
  container: HTMLElement,
  examples: ExampleCard[],
  handlers: RecommendationHandlers = {},
): void {
  container.querySelector(".recommendations")?.remove();
  const wrap = el("div", { class: "recommendations" });
  if (examples.length === 0) {
    wrap.appendChild(
      el("p", { class: "empty-state" }, "No examples fall in the target region yet. Widen the feature ranges."),
    );
    container.appendChild(wrap);
    return;
  }
  for (const card of examples) {
    const node = el("div", { class: "example-card", "data-doc": card.doc_id });
    const star = el(
      "button",
      { class: card.starred ? "star starred" : "star", "aria-label": "star" },
      card.starred ? "★" : "☆",
    );
    star.addEventListener("click", async () => {
      await handlers.onToggleStar?.(card.doc_id, !card.starred);
    });
    node.appendChild(star);
    node.appendChild(el("p", { class: "example-text" }, card.text));

    const svg = svgEl("svg", { width: 200, height: card.bars.length * 14, class: "green-bars" });
    card.bars.forEach((bar, i) => {
      svg.appendChild(
        svgEl("rect", {
          x: 0,
          y: i * 14 + 3,
          width: Math.max(bar.frac * 200, 1),
          height: 8,
          fill: bar.in_target ? "#59a14f" : "#b5d6b5",
          class: "green-bar",
          "data-feature": bar.feature,
          "data-value": bar.value,
        }),
      );
    });
    node.appendChild(svg);
    wrap.appendChild(node);
  }
  container.appendChild(wrap);
}
