// Single shared palette: cluster colors and the trajectory class colors.
// Every view pulls colors from here so legends and plots always agree.

import type { TrajectoryDirection } from "./types";

const CLUSTER_COLORS = [
  "#4e79a7",
  "#9467bd",
  "#f28e2b",
  "#59a14f",
  "#e15759",
  "#76b7b2",
  "#edc948",
  "#b07aa1",
  "#ff9da7",
  "#9c755f",
];

export const NOISE_COLOR = "#c7c7c7";

export function clusterColor(cluster: number): string {
  if (cluster < 0) return NOISE_COLOR;
  return CLUSTER_COLORS[cluster % CLUSTER_COLORS.length];
}

// Color-blind-safe direction colors: yellow toward the goal, purple away,
// gray for changes below the significance threshold.
export const TRAJECTORY_COLORS: Record<TrajectoryDirection, string> = {
  better: "#e6a117",
  worse: "#7b3294",
  insignificant: "#9e9e9e",
};

export function trajectoryColor(direction: TrajectoryDirection): string {
  return TRAJECTORY_COLORS[direction];
}

export const TARGET_HULL_COLOR = "#8ed08e";
export const OLD_HULL_COLOR = "#d9d9d9";
export const NEW_HULL_COLOR = "#8a8a8a";
export const BAND_COLOR = "#c9ecc9";
