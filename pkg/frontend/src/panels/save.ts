import type { ApiClient } from "../api";
import type { NodePosition } from "../layout";
import { encodePng } from "../png";
import { renderToRaster } from "../render";
import type { Store } from "../state";
import type { FormMatch } from "../types";

const EXPORT_WIDTH = 1000;
const EXPORT_HEIGHT = 680;

/** Export the current candidate: PNG (rendered locally) or JSON/DOT (server). */
export class SavePanel {
  readonly element: HTMLElement;
  positionsProvider: ((index: number) => NodePosition[]) | null = null;
  highlightProvider: (() => FormMatch | null) | null = null;

  constructor(
    doc: Document,
    private store: Store,
    private api: ApiClient,
  ) {
    this.element = doc.createElement("section");
    this.element.id = "save-panel";
    this.element.innerHTML = `
      <h3>Save</h3>
      <div class="row">
        <button id="export-png">PNG image</button>
        <button id="export-json">JSON</button>
        <button id="export-dot">DOT</button>
      </div>
    `;
    (this.element.querySelector("#export-png") as HTMLButtonElement).addEventListener(
      "click",
      () => {
        const bytes = this.exportPngBytes();
        if (bytes) this.download(bytes, "semantic-map.png", "image/png");
      },
    );
    (this.element.querySelector("#export-json") as HTMLButtonElement).addEventListener(
      "click",
      () => void this.exportServer("json"),
    );
    (this.element.querySelector("#export-dot") as HTMLButtonElement).addEventListener(
      "click",
      () => void this.exportServer("dot"),
    );
  }

  /** Render the active candidate to PNG bytes (pure local pipeline). */
  exportPngBytes(): Uint8Array | null {
    const state = this.store.get();
    const graph = state.candidates[state.active];
    if (!graph || !this.positionsProvider) return null;
    const base = this.positionsProvider(state.active);
    // rescale the layout into the export frame with a margin
    const xs = base.map((p) => p.x);
    const ys = base.map((p) => p.y);
    const minX = Math.min(...xs);
    const maxX = Math.max(...xs);
    const minY = Math.min(...ys);
    const maxY = Math.max(...ys);
    const margin = 60;
    const sx = (EXPORT_WIDTH - 2 * margin) / Math.max(maxX - minX, 1);
    const sy = (EXPORT_HEIGHT - 2 * margin) / Math.max(maxY - minY, 1);
    const scale = Math.min(sx, sy);
    const positions = base.map((p) => ({
      x: margin + (p.x - minX) * scale,
      y: margin + (p.y - minY) * scale,
    }));
    const highlight = this.highlightProvider ? this.highlightProvider() : null;
    const raster = renderToRaster(
      graph, positions, EXPORT_WIDTH, EXPORT_HEIGHT, highlight,
    );
    return encodePng(raster.data, EXPORT_WIDTH, EXPORT_HEIGHT);
  }

  async exportServer(format: "json" | "dot"): Promise<Uint8Array | null> {
    const state = this.store.get();
    if (!state.sessionId) return null;
    const bytes = await this.api.exportGraph(state.sessionId, state.active, format);
    this.download(
      bytes,
      `candidate_${state.active}.${format}`,
      format === "json" ? "application/json" : "text/vnd.graphviz",
    );
    return bytes;
  }

  private download(bytes: Uint8Array, name: string, type: string): void {
    // jsdom has no URL.createObjectURL; tests grab the bytes directly
    if (typeof URL.createObjectURL !== "function") return;
    const blob = new Blob([bytes.slice().buffer], { type });
    const url = URL.createObjectURL(blob);
    const a = this.element.ownerDocument.createElement("a");
    a.href = url;
    a.download = name;
    a.click();
    URL.revokeObjectURL(url);
  }

  render(): void {
    this.element.hidden = this.store.get().phase !== "view";
  }
}
