import type { CandidatesDoc, GraphDoc, Report, SessionSummary } from "./types";

export type Phase = "read" | "view";

export interface AppState {
  phase: Phase;
  sessionId: string | null;
  summary: SessionSummary | null;
  g0: GraphDoc | null;
  candidates: GraphDoc[];
  reports: Report[];
  active: number;
  /** previous report per candidate, for delta arrows in the metric panel */
  previousReports: (Report | null)[];
  highlightedForm: string | null;
  /** bumped on every confirmed server mutation; panels re-render off it */
  revision: number;
  lastError: string | null;
}

type Listener = (state: AppState) => void;

/**
 * Single source of truth for the UI. Panels render only what is stored
 * here, and the store only changes from confirmed server responses;
 * there are no optimistic updates.
 */
export class Store {
  private state: AppState = {
    phase: "read",
    sessionId: null,
    summary: null,
    g0: null,
    candidates: [],
    reports: [],
    active: 0,
    previousReports: [],
    highlightedForm: null,
    revision: 0,
    lastError: null,
  };
  private listeners: Listener[] = [];

  get(): AppState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(): void {
    for (const listener of [...this.listeners]) {
      listener(this.state);
    }
  }

  update(partial: Partial<AppState>): void {
    this.state = { ...this.state, ...partial, revision: this.state.revision + 1 };
    this.emit();
  }

  openSession(sessionId: string, doc: CandidatesDoc): void {
    this.update({
      phase: "view",
      sessionId,
      summary: doc.summary,
      g0: doc.g0,
      candidates: doc.candidates,
      reports: doc.reports,
      previousReports: doc.reports.map(() => null),
      active: doc.active,
      highlightedForm: null,
      lastError: null,
    });
  }

  setActive(index: number): void {
    if (index !== this.state.active) {
      this.update({ active: index, highlightedForm: null });
    }
  }

  /** Install a confirmed mutation result for one candidate. */
  applyMutation(index: number, graph: GraphDoc, report: Report): void {
    const candidates = [...this.state.candidates];
    const reports = [...this.state.reports];
    const previous = [...this.state.previousReports];
    previous[index] = this.state.reports[index] ?? null;
    candidates[index] = graph;
    reports[index] = report;
    this.update({
      candidates,
      reports,
      previousReports: previous,
      active: index,
      lastError: null,
    });
  }

  setError(message: string | null): void {
    this.update({ lastError: message });
  }

  activeGraph(): GraphDoc | null {
    return this.state.candidates[this.state.active] ?? null;
  }

  activeReport(): Report | null {
    return this.state.reports[this.state.active] ?? null;
  }
}
