import { describe, expect, it } from "vitest";

import { edgeWidth, forceLayout, layoutSeed, mulberry32 } from "../src/layout";
import type { GraphDoc } from "../src/types";

const graph: GraphDoc = {
  nodes: [
    { id: 0, label: "A" },
    { id: 1, label: "B" },
    { id: 2, label: "C" },
    { id: 3, label: "D" },
  ],
  edges: [
    { source: 0, target: 1, weight: 3 },
    { source: 1, target: 2, weight: 2 },
    { source: 2, target: 3, weight: 1 },
  ],
  provenance: "mst-candidate",
};

describe("deterministic layout", () => {
  it("prng is reproducible", () => {
    const a = mulberry32(1234);
    const b = mulberry32(1234);
    for (let i = 0; i < 10; i++) expect(a()).toBe(b());
  });

  it("same graph and seed produce identical positions", () => {
    const p1 = forceLayout(graph, 800, 600, layoutSeed(graph, 0));
    const p2 = forceLayout(graph, 800, 600, layoutSeed(graph, 0));
    expect(p1).toEqual(p2);
  });

  it("different candidate indices get different seeds", () => {
    expect(layoutSeed(graph, 0)).not.toBe(layoutSeed(graph, 1));
  });

  it("positions stay finite and connected nodes end up closer than far pairs", () => {
    const pos = forceLayout(graph, 800, 600, layoutSeed(graph, 0));
    for (const p of pos) {
      expect(Number.isFinite(p.x)).toBe(true);
      expect(Number.isFinite(p.y)).toBe(true);
    }
    const dist = (i: number, j: number) =>
      Math.hypot(pos[i].x - pos[j].x, pos[i].y - pos[j].y);
    // endpoints of the path should sit farther apart than adjacent nodes
    expect(dist(0, 3)).toBeGreaterThan(dist(0, 1));
  });

  it("edge thickness is linear in weight and clamped", () => {
    expect(edgeWidth(0, 10)).toBe(1);
    expect(edgeWidth(10, 10)).toBe(7);
    expect(edgeWidth(5, 10)).toBe(4);
    expect(edgeWidth(3, 0)).toBe(1);
    // monotone
    expect(edgeWidth(2, 10)).toBeLessThan(edgeWidth(9, 10));
  });
});
