// Comparison view: per-version dot plots with target bands, and the
// trajectory plot showing movement between two prompt versions inside
// the shared projection (hulls for target/old/new, 100-point curves).

import { hullPath } from "./hull";
import {
  NEW_HULL_COLOR,
  OLD_HULL_COLOR,
  TARGET_HULL_COLOR,
  BAND_COLOR,
  trajectoryColor,
} from "./palette";
import { el, extentOf, scaler, svgEl } from "./svg";
import type { ComparisonPayload, DotplotPayload } from "./types";

const WIDTH = 520;
const HEIGHT = 420;
const ROW_H = 26;
const PLOT_W = 300;

export function renderDotPlot(container: HTMLElement, payload: DotplotPayload): SVGSVGElement {
  const svg = svgEl("svg", {
    width: PLOT_W + 140,
    height: payload.rows.length * ROW_H,
    class: "dot-plot",
    "data-run": payload.run_id,
  });

  payload.rows.forEach((row, i) => {
    const y = i * ROW_H;
    const label = svgEl("text", { x: 0, y: y + 17, class: "row-label" });
    label.textContent = row.feature;
    svg.appendChild(label);

    const values = row.dots.map((d) => d.value);
    const bandValues = row.band ? [row.band[0], row.band[1] ?? Math.max(...values, row.band[0])] : [];
    const all = values.concat(bandValues.filter((v): v is number => v !== null));
    const lo = Math.min(...(all.length ? all : [0]));
    const hi = Math.max(...(all.length ? all : [1]));
    const span = hi - lo || 1;
    const toX = (v: number) => 120 + ((v - lo) / span) * PLOT_W;

    if (row.band) {
      const [bandLo, bandHi] = row.band;
      const right = bandHi === null ? 120 + PLOT_W : toX(bandHi);
      svg.appendChild(
        svgEl("rect", {
          x: toX(bandLo),
          y: y + 4,
          width: Math.max(right - toX(bandLo), 1),
          height: ROW_H - 8,
          fill: BAND_COLOR,
          class: "target-band",
          "data-feature": row.feature,
        }),
      );
    }

    for (const dot of row.dots) {
      svg.appendChild(
        svgEl("circle", {
          cx: toX(dot.value),
          cy: y + ROW_H / 2,
          // radius encodes the validation case's cluster size
          r: 3 + Math.sqrt(dot.weight),
          fill: dot.in_band === null ? "#999" : dot.in_band ? "#2e7d32" : "#b26a00",
          class: "case-dot",
          "data-doc": dot.doc_id,
          "data-in-band": String(dot.in_band),
          "data-value": dot.value,
        }),
      );
    }
  });

  container.appendChild(svg);
  return svg;
}

export function renderTrajectoryPlot(
  container: HTMLElement,
  payload: ComparisonPayload,
): SVGSVGElement {
  const svg = svgEl("svg", { width: WIDTH, height: HEIGHT, class: "trajectory-plot" });

  const everything: [number, number][] = [
    ...payload.target_points,
    ...payload.old_points,
    ...payload.new_points,
    ...payload.trajectories.flatMap((t) => t.points),
  ];
  const { x, y } = scaler(extentOf(everything), WIDTH, HEIGHT);
  const map = (p: [number, number]) => [x(p[0]), y(p[1])] as [number, number];

  const hulls: [readonly [number, number][], string, string][] = [
    [payload.target_points, TARGET_HULL_COLOR, "target-hull"],
    [payload.old_points, OLD_HULL_COLOR, "old-hull"],
    [payload.new_points, NEW_HULL_COLOR, "new-hull"],
  ];
  for (const [points, color, cls] of hulls) {
    if (points.length === 0) continue;
    svg.appendChild(
      svgEl("path", {
        d: hullPath(points.map(map)),
        fill: color,
        "fill-opacity": 0.3,
        stroke: color,
        class: cls,
      }),
    );
  }

  for (const segment of payload.trajectories) {
    const path = segment.points
      .map((p, i) => `${i === 0 ? "M" : "L"} ${map(p)[0]} ${map(p)[1]}`)
      .join(" ");
    svg.appendChild(
      svgEl("path", {
        d: path,
        fill: "none",
        stroke: trajectoryColor(segment.direction),
        // width encodes the case's cluster size
        "stroke-width": 1 + Math.sqrt(segment.weight) / 2,
        class: `trajectory ${segment.direction}`,
        "data-case": segment.case_id,
        "data-direction": segment.direction,
      }),
    );
    const [ox, oy] = map(segment.old_point);
    const [nx, ny] = map(segment.new_point);
    const r = 3 + Math.sqrt(segment.weight) / 2;
    svg.appendChild(
      svgEl("circle", { cx: ox, cy: oy, r, fill: OLD_HULL_COLOR, class: "endpoint old" }),
    );
    svg.appendChild(
      svgEl("circle", { cx: nx, cy: ny, r, fill: NEW_HULL_COLOR, class: "endpoint new" }),
    );
  }

  container.appendChild(svg);
  return svg;
}

export function renderComparisonPicker(
  container: HTMLElement,
  runIds: number[],
  onPick: (oldRun: number, newRun: number) => void,
): void {
  const wrap = el("div", { class: "comparison-picker" });
  const oldSel = el("select", { class: "old-run" }) as HTMLSelectElement;
  const newSel = el("select", { class: "new-run" }) as HTMLSelectElement;
  for (const id of runIds) {
    oldSel.appendChild(el("option", { value: String(id) }, `run ${id}`));
    newSel.appendChild(el("option", { value: String(id) }, `run ${id}`));
  }
  if (runIds.length > 1) newSel.value = String(runIds[runIds.length - 1]);
  const button = el("button", { class: "select-comparison" }, "Select Comparison");
  button.addEventListener("click", () => onPick(Number(oldSel.value), Number(newSel.value)));
  wrap.appendChild(oldSel);
  wrap.appendChild(newSel);
  wrap.appendChild(button);
  container.appendChild(wrap);
}
