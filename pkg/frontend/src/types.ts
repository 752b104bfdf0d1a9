// Payload shapes mirrored from the backend's JSON schemas.

export interface GraphNode {
  id: number;
  label: string;
}

export interface GraphEdge {
  source: number;
  target: number;
  weight: number;
}

export interface GraphDoc {
  nodes: GraphNode[];
  edges: GraphEdge[];
  provenance: string;
}

export interface Report {
  size: number;
  n_edges: number;
  recall: number;
  precision: number | null;
  avg_d: number;
  div_d: number;
  acc: number | null;
  unconnected_forms: string[];
  precision_note: string | null;
  subset_min_size: number;
}

export interface CandidateSummary {
  index: number;
  n_edges: number;
  report: Report;
}

export interface SessionSummary {
  table: {
    rows: number;
    functions: string[];
    sparsity: number;
    forms: { language: string; form: string }[];
  };
  k: number | null;
  m: number;
  merged: boolean;
  truncated: boolean;
  max_weight: number;
  has_gold: boolean;
  candidates: CandidateSummary[];
}

export interface SessionCreated {
  session_id: string;
  summary: SessionSummary;
}

export interface CandidatesDoc {
  active: number;
  candidates: GraphDoc[];
  reports: Report[];
  g0: GraphDoc;
  summary: SessionSummary;
}

export interface FormMatch {
  language: string;
  form: string;
  functions: number[];
  labels: string[];
  edges: [number, number][];
  connected: boolean;
  components: number[][];
}

export interface FormSubgraph {
  form: string;
  matches: FormMatch[];
}

export interface EditAction {
  kind: "add_edge" | "delete_edge" | "set_weight" | "merge_all";
  source?: number;
  target?: number;
  weight?: number;
}

export interface MutationResult {
  active: number;
  graph: GraphDoc;
  report: Report;
  history_length: number;
  undone?: boolean;
}
