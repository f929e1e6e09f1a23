// Thin API client. Every endpoint returns the standard envelope; ok()
// unwraps it and throws on error envelopes so views can catch and show
// a banner.

import type {
  ClustersPayload,
  ComparisonPayload,
  ConfigMap,
  CorrelationPayload,
  DistributionsPayload,
  DotplotPayload,
  Envelope,
  ExampleCard,
  ProfilesPayload,
  PromptBlocksBody,
  RunStatusPayload,
  VersionPayload,
} from "./types";

const BASE = "/api/v1";

export class ApiError extends Error {
  code: string;
  constructor(code: string, message: string) {
    super(message);
    this.code = code;
  }
}

async function ok<T>(response: Response): Promise<T> {
  const body = (await response.json()) as Envelope<T>;
  if (body.status === "error") {
    throw new ApiError(body.error.code, body.error.message);
  }
  return body.payload;
}

async function get<T>(path: string): Promise<T> {
  return ok<T>(await fetch(`${BASE}${path}`));
}

async function send<T>(method: string, path: string, body?: unknown): Promise<T> {
  return ok<T>(
    await fetch(`${BASE}${path}`, {
      method,
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    }),
  );
}

export const api = {
  dataset: () => get<{ count: number }>("/dataset"),
  correlation: (tau?: number) =>
    get<CorrelationPayload>(`/correlation${tau !== undefined ? `?tau=${tau}` : ""}`),
  clusters: () => get<ClustersPayload>("/clusters"),
  profiles: () => get<ProfilesPayload>("/clusters/profiles"),
  distributions: () => get<DistributionsPayload>("/features/distributions"),
  getConfig: () => get<{ config: ConfigMap | null }>("/config"),
  putConfig: (config: ConfigMap) => send<{ config: ConfigMap }>("PUT", "/config", { config }),
  matchCluster: () => send<{ cluster: number; fit: number }>("POST", "/config/match"),
  recommendations: () => get<{ examples: ExampleCard[] }>("/recommendations"),
  star: (docId: string) => send<{ starred: string[] }>("POST", `/examples/${docId}/star`),
  unstar: (docId: string) => send<{ starred: string[] }>("DELETE", `/examples/${docId}/star`),
  versions: () => get<{ versions: VersionPayload[] }>("/versions"),
  createVersion: (blocks: PromptBlocksBody, parent: number | null) =>
    send<{ version: VersionPayload }>("POST", "/versions", { blocks, parent }),
  blockDefinitions: () => get<{ definitions: Record<string, string> }>("/blocks/definitions"),
  suggest: (block: string, question: string) =>
    send<{ suggestion: string }>("POST", "/suggest", { block, question }),
  recommend: (goal: string) =>
    send<{ config: ConfigMap; explanation: string }>("POST", "/recommend", { goal }),
  baseline: (blocks: PromptBlocksBody) =>
    send<{ version_id: number; run_id: number }>("POST", "/baseline", blocks),
  submitRun: (versionId: number, scope: string) =>
    send<{ run_id: number }>("POST", "/runs", { version_id: versionId, scope }),
  runs: () =>
    get<{ runs: { run_id: number; version_id: number; scope: string; status: string }[] }>(
      "/runs",
    ),
  runStatus: (runId: number) => get<RunStatusPayload>(`/runs/${runId}`),
  dotplot: (runId: number) => get<DotplotPayload>(`/runs/${runId}/dotplot`),
  comparison: (oldRun: number, newRun: number) =>
    get<ComparisonPayload>(`/comparison?old_run=${oldRun}&new_run=${newRun}`),
};

const TERMINAL_STATES = new Set(["complete", "partial", "failed", "error"]);

/** Poll a run until it reaches a terminal state. */
export async function pollRun(
  runId: number,
  opts: { intervalMs?: number; maxPolls?: number; onProgress?: (s: RunStatusPayload) => void } = {},
): Promise<RunStatusPayload> {
  const interval = opts.intervalMs ?? 500;
  const maxPolls = opts.maxPolls ?? 600;
  for (let i = 0; i < maxPolls; i++) {
    const status = await api.runStatus(runId);
    opts.onProgress?.(status);
    if (TERMINAL_STATES.has(status.state)) {
      return status;
    }
    await new Promise((resolve) => setTimeout(resolve, interval));
  }
  throw new Error(`run ${runId} did not finish after ${maxPolls} polls`);
}
