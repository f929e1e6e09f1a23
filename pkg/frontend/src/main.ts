// Workbench wiring: four tabbed views over the HTTP API.

import { api, pollRun } from "./api";
import {
  renderClusterPlot,
  renderClusterProfiles,
  renderDistributions,
  renderNoiseToggle,
  renderRecommendations,
  type ClusterViewState,
} from "./clusterView";
import { renderComparisonPicker, renderDotPlot, renderTrajectoryPlot } from "./comparator";
import {
  renderConfigDropdowns,
  renderCorrelationMatrix,
  renderGoalChat,
} from "./featureSelection";
import { renderPromptEditor } from "./promptEditor";
import { el } from "./svg";
import type { ConfigMap } from "./types";

const VIEWS = ["features", "examples", "editor", "comparison"] as const;

function banner(root: HTMLElement, message: string): void {
  const note = el("div", { class: "error-banner" }, message);
  const close = el("button", {}, "dismiss");
  close.addEventListener("click", () => note.remove());
  note.appendChild(close);
  root.prepend(note);
}

async function showFeatures(root: HTMLElement): Promise<void> {
  const correlation = await api.correlation();
  const { config } = await api.getConfig();
  const current: ConfigMap = config ?? ({} as ConfigMap);
  renderCorrelationMatrix(root, correlation);
  renderGoalChat(root, current, {
    onGoalSubmit: (goal) => api.recommend(goal),
    onConfigChange: (next) => void api.putConfig(next),
  });
  renderConfigDropdowns(root, current, {
    onConfigChange: (next) => void api.putConfig(next),
  });
}

async function showExamples(root: HTMLElement): Promise<void> {
  const clusters = await api.clusters();
  const state: ClusterViewState = { showNoise: false, matchedCluster: null };
  try {
    const match = await api.matchCluster();
    state.matchedCluster = match.cluster;
  } catch {
    // no config yet: no target bubble
  }
  const rerender = () => renderClusterPlot(root, clusters, state);
  renderNoiseToggle(root, clusters, state, rerender);
  rerender();
  renderClusterProfiles(root, await api.profiles(), () => void refreshCards());
  renderDistributions(root, await api.distributions());

  async function refreshCards(): Promise<void> {
    const { examples } = await api.recommendations();
    renderRecommendations(root, examples, {
      onToggleStar: async (docId, starred) => {
        await (starred ? api.star(docId) : api.unstar(docId));
        await refreshCards();
      },
    });
  }
  await refreshCards();
}

async function showEditor(root: HTMLElement): Promise<void> {
  const { definitions } = await api.blockDefinitions();
  const { versions } = await api.versions();
  const latest = versions[versions.length - 1];
  const { examples } = await api.recommendations().catch(() => ({ examples: [] }));
  renderPromptEditor(root, {
    definitions,
    initial: latest?.blocks,
    parent: latest ? latest.id : null,
    starredExamples: examples.filter((c) => c.starred).map((c) => c.text),
    handlers: {
      onApplied: () => banner(root, "Validation run finished. See the comparison view."),
    },
  });
}

async function showComparison(root: HTMLElement): Promise<void> {
  const { runs } = await api.runs();
  const finished = runs.filter((r) => r.status === "complete" || r.status === "partial");
  if (finished.length === 0) {
    root.appendChild(el("p", { class: "empty-state" }, "No finished runs yet."));
    return;
  }
  for (const run of finished) {
    const section = el("details", { class: "run-section" });
    section.appendChild(el("summary", {}, `run ${run.run_id} (version ${run.version_id}, ${run.scope})`));
    renderDotPlot(section, await api.dotplot(run.run_id));
    root.appendChild(section);
  }
  renderComparisonPicker(
    root,
    finished.map((r) => r.run_id),
    async (oldRun, newRun) => {
      root.querySelector("svg.trajectory-plot")?.remove();
      try {
        renderTrajectoryPlot(root, await api.comparison(oldRun, newRun));
      } catch (error) {
        banner(root, (error as Error).message);
      }
    },
  );
}

async function boot(): Promise<void> {
  const app = document.getElementById("app");
  if (!app) return;

  const nav = el("nav", { class: "tabs" });
  const content = el("main", { class: "view" });
  app.appendChild(nav);
  app.appendChild(content);

  const show = async (view: (typeof VIEWS)[number]) => {
    content.replaceChildren();
    try {
      if (view === "features") await showFeatures(content);
      else if (view === "examples") await showExamples(content);
      else if (view === "editor") await showEditor(content);
      else await showComparison(content);
    } catch (error) {
      banner(content, (error as Error).message);
    }
  };

  for (const view of VIEWS) {
    const tab = el("button", { class: "tab", "data-view": view }, view);
    tab.addEventListener("click", () => void show(view));
    nav.appendChild(tab);
  }

  try {
    await api.clusters();
    await show("features");
  } catch {
    // no baseline yet: offer to run it with a starter prompt
    const starter = el("button", { class: "run-baseline" }, "Run baseline with a starter prompt");
    starter.addEventListener("click", async () => {
      const { run_id } = await api.baseline({
        persona: "You are a news editor.",
        context: "",
        constraints: "Summarize the key points clearly.",
        examples: "",
        data: "{{ARTICLE}}",
      });
      starter.textContent = "Baseline running...";
      await pollRun(run_id);
      await show("features");
    });
    content.appendChild(starter);
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  void boot();
}
