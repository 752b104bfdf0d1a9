import type {
  CandidatesDoc,
  EditAction,
  FormSubgraph,
  MutationResult,
  SessionCreated,
} from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly stage: string,
    readonly detail: string,
  ) {
    super(`[${stage}] ${detail}`);
  }
}

async function toError(response: Response): Promise<ApiError> {
  let stage = "request";
  let detail = response.statusText;
  try {
    const body = await response.json();
    if (body && typeof body === "object") {
      stage = body.stage ?? stage;
      detail = body.detail ?? JSON.stringify(body);
    }
  } catch {
    // non-JSON error body; keep the status text
  }
  return new ApiError(response.status, stage, detail);
}

export interface CreateSessionOptions {
  k?: number;
  m?: number;
  merge?: boolean;
  gold?: { name: string; data: Uint8Array };
}

interface MultipartField {
  name: string;
  value: string | Uint8Array;
  filename?: string;
  type?: string;
}

/** Build a multipart/form-data body by hand: works identically in the
 * browser and in node test environments, with no FormData realm issues. */
export function encodeMultipart(fields: MultipartField[]): {
  body: Uint8Array;
  contentType: string;
} {
  const boundary = "----semmap" + Math.random().toString(36).slice(2);
  const encoder = new TextEncoder();
  const chunks: Uint8Array[] = [];
  for (const field of fields) {
    let head = `--${boundary}\r\nContent-Disposition: form-data; name="${field.name}"`;
    if (field.filename) head += `; filename="${field.filename}"`;
    head += "\r\n";
    if (field.type) head += `Content-Type: ${field.type}\r\n`;
    head += "\r\n";
    chunks.push(encoder.encode(head));
    chunks.push(
      typeof field.value === "string" ? encoder.encode(field.value) : field.value,
    );
    chunks.push(encoder.encode("\r\n"));
  }
  chunks.push(encoder.encode(`--${boundary}--\r\n`));
  const total = chunks.reduce((n, c) => n + c.length, 0);
  const body = new Uint8Array(total);
  let offset = 0;
  for (const chunk of chunks) {
    body.set(chunk, offset);
    offset += chunk.length;
  }
  return { body, contentType: `multipart/form-data; boundary=${boundary}` };
}

/** Thin typed wrapper over the session API; every UI number originates here. */
export class ApiClient {
  constructor(readonly base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.base + path, init);
    if (!response.ok) {
      throw await toError(response);
    }
    return (await response.json()) as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("/api/health");
  }

  async createSession(
    table: { name: string; data: Uint8Array },
    options: CreateSessionOptions = {},
  ): Promise<SessionCreated> {
    const fields: MultipartField[] = [
      { name: "table", value: table.data, filename: table.name, type: "text/csv" },
    ];
    if (options.gold) {
      fields.push({
        name: "gold",
        value: options.gold.data,
        filename: options.gold.name,
        type: "application/json",
      });
    }
    if (options.k !== undefined) fields.push({ name: "k", value: String(options.k) });
    if (options.m !== undefined) fields.push({ name: "m", value: String(options.m) });
    if (options.merge !== undefined) {
      fields.push({ name: "merge", value: String(options.merge) });
    }
    const { body, contentType } = encodeMultipart(fields);
    return this.request("/api/sessions", {
      method: "POST",
      headers: { "Content-Type": contentType },
      body: body.slice().buffer as ArrayBuffer,
    });
  }

  candidates(sessionId: string): Promise<CandidatesDoc> {
    return this.request(`/api/sessions/${sessionId}/candidates`);
  }

  formSubgraph(
    sessionId: string,
    candidate: number,
    form: string,
  ): Promise<FormSubgraph> {
    return this.request(
      `/api/sessions/${sessionId}/candidates/${candidate}/form/${encodeURIComponent(form)}`,
    );
  }

  edit(
    sessionId: string,
    candidate: number,
    action: EditAction,
  ): Promise<MutationResult> {
    return this.request(`/api/sessions/${sessionId}/candidates/${candidate}/edits`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(action),
    });
  }

  merge(sessionId: string, candidate: number): Promise<MutationResult> {
    return this.request(
      `/api/sessions/${sessionId}/candidates/${candidate}/merge`,
      { method: "POST" },
    );
  }

  undo(sessionId: string, candidate: number): Promise<MutationResult> {
    return this.request(
      `/api/sessions/${sessionId}/candidates/${candidate}/undo`,
      { method: "POST" },
    );
  }

  async exportGraph(
    sessionId: string,
    candidate: number,
    format: "json" | "dot",
  ): Promise<Uint8Array> {
    const response = await fetch(
      `${this.base}/api/sessions/${sessionId}/candidates/${candidate}/export?format=${format}`,
    );
    if (!response.ok) {
      throw await toError(response);
    }
    return new Uint8Array(await response.arrayBuffer());
  }
}
