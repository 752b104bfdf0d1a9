import { describe, expect, it } from "vitest";

import { Store } from "../src/state";
import type { CandidatesDoc, GraphDoc, Report } from "../src/types";

const report = (recall: number): Report => ({
  size: 4,
  n_edges: 3,
  recall,
  precision: 0.5,
  avg_d: 1.5,
  div_d: 0.5,
  acc: null,
  unconnected_forms: recall === 1 ? [] : ["f3"],
  precision_note: null,
  subset_min_size: 2,
});

const g = (edges: [number, number, number][]): GraphDoc => ({
  nodes: [
    { id: 0, label: "A" },
    { id: 1, label: "B" },
    { id: 2, label: "C" },
  ],
  edges: edges.map(([source, target, weight]) => ({ source, target, weight })),
  provenance: "mst-candidate",
});

const doc: CandidatesDoc = {
  active: 0,
  candidates: [g([[0, 1, 2]]), g([[1, 2, 1]])],
  reports: [report(0.8), report(0.8)],
  g0: g([
    [0, 1, 2],
    [1, 2, 1],
    [0, 2, 1],
  ]),
  summary: {
    table: { rows: 3, functions: ["A", "B", "C"], sparsity: 0.4, forms: [] },
    k: 100,
    m: 2,
    merged: false,
    truncated: false,
    max_weight: 2,
    has_gold: false,
    candidates: [],
  },
};

describe("store", () => {
  it("opens a session and notifies subscribers", () => {
    const store = new Store();
    let calls = 0;
    store.subscribe(() => calls++);
    store.openSession("sid", doc);
    expect(calls).toBe(1);
    expect(store.get().phase).toBe("view");
    expect(store.get().candidates.length).toBe(2);
    expect(store.activeReport()?.recall).toBe(0.8);
  });

  it("tracks previous reports per candidate for delta display", () => {
    const store = new Store();
    store.openSession("sid", doc);
    expect(store.get().previousReports).toEqual([null, null]);
    store.applyMutation(0, g([[0, 1, 2], [0, 2, 1]] as any), report(1));
    expect(store.get().previousReports[0]?.recall).toBe(0.8);
    expect(store.get().reports[0].recall).toBe(1);
    expect(store.get().previousReports[1]).toBeNull();
  });

  it("bumps revision on every update and keeps mutations non-optimistic", () => {
    const store = new Store();
    const before = store.get().revision;
    store.update({});
    expect(store.get().revision).toBe(before + 1);
  });

  it("setActive clears the highlighted form", () => {
    const store = new Store();
    store.openSession("sid", doc);
    store.update({ highlightedForm: "f1" });
    store.setActive(1);
    expect(store.get().highlightedForm).toBeNull();
    expect(store.get().active).toBe(1);
  });
});
