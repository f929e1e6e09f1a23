// Payload shapes for the /api/v1 endpoints the workbench consumes.

export type Envelope<T> =
  | { status: "ok"; payload: T }
  | { status: "error"; error: { code: string; message: string; detail: unknown } };

export interface CorrelationPayload {
  features: string[];
  r: number[][];
  mask: boolean[][];
  tau: number;
  excluded: string[];
  descriptions: Record<string, string>;
}

export interface ClusterPoint {
  doc_id: string;
  cluster: number;
  noise: boolean;
  x: number;
  y: number;
}

export interface ClustersPayload {
  points: ClusterPoint[];
  sizes: number[];
  noise_count: number;
  centroids: string[];
}

export interface FeatureBar {
  feature: string;
  raw_min: number;
  raw_max: number;
  raw_mean: number;
  scaled_min: number;
  scaled_max: number;
}

export type ProfilesPayload = Record<string, FeatureBar[]>;

export interface DistributionCluster {
  cluster: number;
  min: number;
  max: number;
  mean: number;
}

export type DistributionsPayload = Record<
  string,
  { clusters: DistributionCluster[]; global_min: number; global_max: number }
>;

export interface FeatureTarget {
  included: boolean;
  level: string | null;
  range: [number, number] | null;
}

export type ConfigMap = Record<string, FeatureTarget>;

export interface ExampleBar {
  feature: string;
  value: number;
  global_min: number;
  global_max: number;
  frac: number;
  in_target: boolean;
}

export interface ExampleCard {
  doc_id: string;
  text: string;
  fit: number;
  levels: Record<string, string>;
  bars: ExampleBar[];
  starred: boolean;
}

export interface PromptBlocksBody {
  persona: string;
  context: string;
  constraints: string;
  examples: string;
  data: string;
}

export interface VersionPayload {
  id: number;
  blocks: PromptBlocksBody;
  parent: number | null;
  created: string;
  starred: string[];
}

export interface RunStatusPayload {
  run_id: number;
  state: string;
  done?: number;
  total?: number;
  doc_ids?: string[];
  error?: string;
}

export interface DotRow {
  feature: string;
  band: [number, number | null] | null;
  dots: { doc_id: string; value: number; weight: number; in_band: boolean | null }[];
}

export interface DotplotPayload {
  run_id: number;
  rows: DotRow[];
}

export type TrajectoryDirection = "better" | "worse" | "insignificant";

export interface TrajectorySegment {
  case_id: string;
  weight: number;
  points: [number, number][];
  old_point: [number, number];
  new_point: [number, number];
  delta: number;
  direction: TrajectoryDirection;
}

export interface ComparisonPayload {
  old_run: number;
  new_run: number;
  delta: number;
  target_points: [number, number][];
  old_points: [number, number][];
  new_points: [number, number][];
  trajectories: TrajectorySegment[];
}
