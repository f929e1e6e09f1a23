// Tiny SVG/DOM helpers; no framework, works under jsdom.

const SVG_NS = "http://www.w3.org/2000/svg";

export function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number> = {},
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

export interface Extent {
  minX: number;
  maxX: number;
  minY: number;
  maxY: number;
}

export function extentOf(points: [number, number][], pad = 0.1): Extent {
  let minX = Infinity,
    maxX = -Infinity,
    minY = Infinity,
    maxY = -Infinity;
  for (const [x, y] of points) {
    minX = Math.min(minX, x);
    maxX = Math.max(maxX, x);
    minY = Math.min(minY, y);
    maxY = Math.max(maxY, y);
  }
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  return {
    minX: minX - pad * spanX,
    maxX: maxX + pad * spanX,
    minY: minY - pad * spanY,
    maxY: maxY + pad * spanY,
  };
}

/** Affine map from data space into a width x height viewport. */
export function scaler(extent: Extent, width: number, height: number) {
  return {
    x: (v: number) => ((v - extent.minX) / (extent.maxX - extent.minX)) * width,
    y: (v: number) => height - ((v - extent.minY) / (extent.maxY - extent.minY)) * height,
  };
}
