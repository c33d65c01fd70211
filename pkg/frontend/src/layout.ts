/**
 * Force-directed board layout, deterministically seeded from the instance
 * bytes so the same graph text always renders identically.
 */

import { GraphShape } from "./graphText.js";

export interface Point {
  x: number;
  y: number;
}

/** FNV-1a 32-bit hash of the instance bytes. */
export function seedFromBytes(text: string): number {
  let hash = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    hash ^= text.charCodeAt(i);
    hash = Math.imul(hash, 0x01000193);
  }
  return hash >>> 0;
}

/** mulberry32: small deterministic PRNG over a 32-bit seed. */
export function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export interface LayoutOptions {
  iterations?: number;
  width?: number;
  height?: number;
}

/**
 * Spring-embedder layout: uniform repulsion between all vertex pairs,
 * attraction along edges, cooling step size.  Positions are normalised
 * into the given box with a small margin.
 */
export function forceLayout(
  shape: GraphShape,
  instanceBytes: string,
  options: LayoutOptions = {},
): Point[] {
  const { iterations = 150, width = 100, height = 100 } = options;
  const { n, edges } = shape;
  if (n === 0) return [];
  const rng = mulberry32(seedFromBytes(instanceBytes));
  const xs = new Float64Array(n);
  const ys = new Float64Array(n);
  for (let v = 0; v < n; v++) {
    xs[v] = rng();
    ys[v] = rng();
  }
  if (n === 1) return [{ x: width / 2, y: height / 2 }];

  const area = 1;
  const ideal = Math.sqrt(area / n);
  for (let step = 0; step < iterations; step++) {
    const dx = new Float64Array(n);
    const dy = new Float64Array(n);
    for (let u = 0; u < n; u++) {
      for (let v = u + 1; v < n; v++) {
        let ex = xs[u] - xs[v];
        let ey = ys[u] - ys[v];
        let dist = Math.hypot(ex, ey);
        if (dist < 1e-9) {
          // deterministic tie-break for coincident vertices
          ex = 1e-3 * (u - v);
          ey = 1e-3;
          dist = Math.hypot(ex, ey);
        }
        const repulse = (ideal * ideal) / dist;
        dx[u] += (ex / dist) * repulse;
        dy[u] += (ey / dist) * repulse;
        dx[v] -= (ex / dist) * repulse;
        dy[v] -= (ey / dist) * repulse;
      }
    }
    for (const [u, v] of edges) {
      const ex = xs[u] - xs[v];
      const ey = ys[u] - ys[v];
      const dist = Math.hypot(ex, ey) || 1e-9;
      const attract = (dist * dist) / ideal;
      dx[u] -= (ex / dist) * attract;
      dy[u] -= (ey / dist) * attract;
      dx[v] += (ex / dist) * attract;
      dy[v] += (ey / dist) * attract;
    }
    const temperature = 0.1 * (1 - step / iterations) + 1e-3;
    for (let v = 0; v < n; v++) {
      const mag = Math.hypot(dx[v], dy[v]) || 1e-9;
      const clip = Math.min(mag, temperature);
      xs[v] += (dx[v] / mag) * clip;
      ys[v] += (dy[v] / mag) * clip;
    }
  }

  // normalise into the box with a 10% margin
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const points: Point[] = [];
  for (let v = 0; v < n; v++) {
    points.push({
      x: 0.1 * width + 0.8 * width * ((xs[v] - minX) / spanX),
      y: 0.1 * height + 0.8 * height * ((ys[v] - minY) / spanY),
    });
  }
  return points;
}
