import type { GraphDoc } from "./types";

export interface NodePosition {
  x: number;
  y: number;
}

/** Mulberry32: tiny deterministic PRNG so layouts reproduce across reloads. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function layoutSeed(graph: GraphDoc, candidateIndex: number): number {
  // stable across sessions for the same candidate shape
  let h = 2166136261 ^ candidateIndex;
  for (const edge of graph.edges) {
    h = Math.imul(h ^ (edge.source * 31 + edge.target), 16777619);
  }
  return h >>> 0;
}

/**
 * Deterministic force-directed layout: nodes start on a seeded circle and
 * relax under spring forces on edges, pairwise repulsion, and a weak
 * centering pull. Fixed iteration count and step sizes, no wall-clock
 * dependence, so the same graph and seed always produce the same picture.
 */
export function forceLayout(
  graph: GraphDoc,
  width: number,
  height: number,
  seed: number,
  iterations = 300,
): NodePosition[] {
  const n = graph.nodes.length;
  const rand = mulberry32(seed);
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) * 0.35;
  const pos: NodePosition[] = graph.nodes.map((_, i) => {
    const angle = (2 * Math.PI * i) / Math.max(n, 1) + rand() * 0.2;
    return {
      x: cx + radius * Math.cos(angle) + (rand() - 0.5) * 8,
      y: cy + radius * Math.sin(angle) + (rand() - 0.5) * 8,
    };
  });
  if (n <= 1) return pos;

  const springLength = Math.min(width, height) / Math.max(2.5, Math.sqrt(n));
  const vx = new Array<number>(n).fill(0);
  const vy = new Array<number>(n).fill(0);

  for (let iter = 0; iter < iterations; iter++) {
    const cooling = 1 - iter / iterations;
    for (let i = 0; i < n; i++) {
      let fx = 0;
      let fy = 0;
      for (let j = 0; j < n; j++) {
        if (i === j) continue;
        const dx = pos[i].x - pos[j].x;
        const dy = pos[i].y - pos[j].y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const repulsion = (springLength * springLength) / d2;
        fx += dx * repulsion * 0.08;
        fy += dy * repulsion * 0.08;
      }
      fx += (cx - pos[i].x) * 0.01;
      fy += (cy - pos[i].y) * 0.01;
      vx[i] = fx;
      vy[i] = fy;
    }
    for (const edge of graph.edges) {
      const a = edge.source;
      const b = edge.target;
      const dx = pos[b].x - pos[a].x;
      const dy = pos[b].y - pos[a].y;
      const dist = Math.max(Math.sqrt(dx * dx + dy * dy), 1e-6);
      const pull = ((dist - springLength) / dist) * 0.05;
      vx[a] += dx * pull;
      vy[a] += dy * pull;
      vx[b] -= dx * pull;
      vy[b] -= dy * pull;
    }
    for (let i = 0; i < n; i++) {
      pos[i].x += vx[i] * cooling * 2;
      pos[i].y += vy[i] * cooling * 2;
    }
  }
  return pos;
}

/**
 * Edge thickness map (documented UI config): linear in weight, clamped to
 * [1, 7] pixels; the heaviest edge gets the full 7.
 */
export function edgeWidth(weight: number, maxWeight: number): number {
  if (maxWeight <= 0) return 1;
  return 1 + 6 * Math.max(0, Math.min(1, weight / maxWeight));
}
