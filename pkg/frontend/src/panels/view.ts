import type { ApiClient } from "../api";
import { forceLayout, layoutSeed, type NodePosition } from "../layout";
import { CanvasPainter, drawGraphScene, NODE_RADIUS, type ViewTransform } from "../render";
import type { Store } from "../state";
import type { FormMatch, GraphDoc } from "../types";

const WIDTH = 860;
const HEIGHT = 560;

/**
 * Graph view: candidate tabs, zoom/drag/re-center canvas, and a form list
 * whose entries highlight their induced subgraph with a connectivity badge.
 */
export class ViewPanel {
  readonly element: HTMLElement;
  private canvas: HTMLCanvasElement;
  private tabsBox: HTMLElement;
  private formsBox: HTMLElement;
  private badgeBox: HTMLElement;
  /** positions are computed once per candidate from its pristine shape */
  private positionsByCandidate = new Map<number, NodePosition[]>();
  private transform: ViewTransform = { scale: 1, tx: 0, ty: 0 };
  private highlight: FormMatch | null = null;
  private sessionOfPositions: string | null = null;
  private dragging: { node: number | null; lastX: number; lastY: number } | null = null;
  onNodePicked: ((node: number) => void) | null = null;

  constructor(
    doc: Document,
    private store: Store,
    private api: ApiClient,
  ) {
    this.element = doc.createElement("section");
    this.element.id = "view-panel";
    this.element.innerHTML = `
      <div id="candidate-tabs" role="tablist"></div>
      <div id="view-stage">
        <canvas id="graph-canvas" width="${WIDTH}" height="${HEIGHT}"></canvas>
        <div id="view-controls">
          <button id="zoom-in" title="zoom in">+</button>
          <button id="zoom-out" title="zoom out">-</button>
          <button id="recenter" title="re-center">center</button>
          <button id="relayout" title="re-run the layout with a new seed">shuffle</button>
        </div>
        <div id="form-badge" hidden></div>
      </div>
      <div id="form-list"></div>
    `;
    this.canvas = this.element.querySelector("#graph-canvas") as HTMLCanvasElement;
    this.tabsBox = this.element.querySelector("#candidate-tabs") as HTMLElement;
    this.formsBox = this.element.querySelector("#form-list") as HTMLElement;
    this.badgeBox = this.element.querySelector("#form-badge") as HTMLElement;
    (this.element.querySelector("#zoom-in") as HTMLButtonElement).addEventListener(
      "click", () => this.zoom(1.25),
    );
    (this.element.querySelector("#zoom-out") as HTMLButtonElement).addEventListener(
      "click", () => this.zoom(0.8),
    );
    (this.element.querySelector("#recenter") as HTMLButtonElement).addEventListener(
      "click", () => {
        this.transform = { scale: 1, tx: 0, ty: 0 };
        this.paint();
      },
    );
    (this.element.querySelector("#relayout") as HTMLButtonElement).addEventListener(
      "click", () => this.relayout(),
    );
    this.canvas.addEventListener("wheel", (event) => {
      event.preventDefault();
      this.zoom(event.deltaY < 0 ? 1.1 : 0.9);
    });
    this.canvas.addEventListener("pointerdown", (e) => this.pointerDown(e));
    this.canvas.addEventListener("pointermove", (e) => this.pointerMove(e));
    this.canvas.addEventListener("pointerup", (e) => this.pointerUp(e));
  }

  private reseedOffset = 0;

  positions(index: number): NodePosition[] {
    const state = this.store.get();
    if (this.sessionOfPositions !== state.sessionId) {
      this.positionsByCandidate.clear();
      this.sessionOfPositions = state.sessionId;
      this.reseedOffset = 0;
    }
    let cached = this.positionsByCandidate.get(index);
    if (!cached) {
      const graph = state.candidates[index];
      cached = forceLayout(
        graph, WIDTH, HEIGHT, layoutSeed(graph, index) + this.reseedOffset,
      );
      this.positionsByCandidate.set(index, cached);
    }
    return cached;
  }

  /** Re-run the layout with the next seed (user-triggered shuffle). */
  relayout(): void {
    this.reseedOffset += 1;
    this.positionsByCandidate.delete(this.store.get().active);
    this.paint();
  }

  currentHighlight(): FormMatch | null {
    return this.highlight;
  }

  private zoom(factor: number): void {
    const next = Math.max(0.2, Math.min(6, this.transform.scale * factor));
    // keep the stage center fixed while zooming
    const cx = WIDTH / 2;
    const cy = HEIGHT / 2;
    const ratio = next / this.transform.scale;
    this.transform = {
      scale: next,
      tx: cx - (cx - this.transform.tx) * ratio,
      ty: cy - (cy - this.transform.ty) * ratio,
    };
    this.paint();
  }

  private nodeAt(x: number, y: number): number | null {
    const state = this.store.get();
    const graph = state.candidates[state.active];
    if (!graph) return null;
    const pos = this.positions(state.active);
    const r = NODE_RADIUS * Math.sqrt(this.transform.scale) + 4;
    for (const node of graph.nodes) {
      const px = pos[node.id].x * this.transform.scale + this.transform.tx;
      const py = pos[node.id].y * this.transform.scale + this.transform.ty;
      if ((px - x) ** 2 + (py - y) ** 2 <= r * r) return node.id;
    }
    return null;
  }

  private canvasPoint(event: PointerEvent): { x: number; y: number } {
    const rect = this.canvas.getBoundingClientRect();
    return { x: event.clientX - rect.left, y: event.clientY - rect.top };
  }

  private pointerDown(event: PointerEvent): void {
    const { x, y } = this.canvasPoint(event);
    const node = this.nodeAt(x, y);
    this.dragging = { node, lastX: x, lastY: y };
    if (node !== null && this.onNodePicked) this.onNodePicked(node);
  }

  private pointerMove(event: PointerEvent): void {
    if (!this.dragging) return;
    const { x, y } = this.canvasPoint(event);
    const dx = x - this.dragging.lastX;
    const dy = y - this.dragging.lastY;
    this.dragging.lastX = x;
    this.dragging.lastY = y;
    if (this.dragging.node !== null) {
      const pos = this.positions(this.store.get().active)[this.dragging.node];
      pos.x += dx / this.transform.scale;
      pos.y += dy / this.transform.scale;
    } else {
      this.transform = {
        ...this.transform,
        tx: this.transform.tx + dx,
        ty: this.transform.ty + dy,
      };
    }
    this.paint();
  }

  private pointerUp(_event: PointerEvent): void {
    this.dragging = null;
  }

  async highlightForm(form: string): Promise<void> {
    const state = this.store.get();
    if (!state.sessionId) return;
    const doc = await this.api.formSubgraph(state.sessionId, state.active, form);
    this.highlight = doc.matches[0] ?? null;
    this.store.update({ highlightedForm: form });
  }

  clearHighlight(): void {
    this.highlight = null;
    this.store.update({ highlightedForm: null });
  }

  /** Re-fetch the highlighted form after an edit so the badge never goes stale. */
  async refreshHighlight(): Promise<void> {
    const state = this.store.get();
    if (state.highlightedForm && state.sessionId) {
      const doc = await this.api.formSubgraph(
        state.sessionId, state.active, state.highlightedForm,
      );
      this.highlight = doc.matches[0] ?? null;
    }
  }

  private canvasUnavailable = false;

  private context2d(): CanvasRenderingContext2D | null {
    if (this.canvasUnavailable) return null;
    try {
      const ctx = this.canvas.getContext("2d");
      if (!ctx) this.canvasUnavailable = true;
      return ctx;
    } catch {
      // headless test environments have no 2d context; probe only once
      this.canvasUnavailable = true;
      return null;
    }
  }

  private paint(): void {
    const state = this.store.get();
    const graph = state.candidates[state.active];
    const ctx = this.context2d();
    if (!graph || !ctx) return;
    ctx.clearRect(0, 0, WIDTH, HEIGHT);
    drawGraphScene(
      new CanvasPainter(ctx),
      graph,
      this.positions(state.active),
      this.transform,
      this.highlight,
    );
  }

  private renderTabs(graphs: GraphDoc[]): void {
    const active = this.store.get().active;
    this.tabsBox.innerHTML = "";
    graphs.forEach((_, i) => {
      const tab = this.tabsBox.ownerDocument.createElement("button");
      tab.className = "candidate-tab" + (i === active ? " active" : "");
      tab.dataset.index = String(i);
      tab.textContent = `candidate ${i}`;
      tab.setAttribute("role", "tab");
      tab.addEventListener("click", () => {
        this.highlight = null;
        this.store.setActive(i);
      });
      this.tabsBox.appendChild(tab);
    });
  }

  private renderForms(): void {
    const state = this.store.get();
    const doc = this.formsBox.ownerDocument;
    this.formsBox.innerHTML = "<h3>Forms</h3>";
    const seen = new Set<string>();
    for (const row of state.summary?.table.forms ?? []) {
      if (seen.has(row.form)) continue;
      seen.add(row.form);
      const button = doc.createElement("button");
      button.className =
        "form-chip" + (state.highlightedForm === row.form ? " active" : "");
      button.dataset.form = row.form;
      button.textContent = row.form;
      button.addEventListener("click", () => {
        if (state.highlightedForm === row.form) {
          this.clearHighlight();
        } else {
          void this.highlightForm(row.form);
        }
      });
      this.formsBox.appendChild(button);
    }
  }

  private renderBadge(): void {
    if (!this.highlight) {
      this.badgeBox.hidden = true;
      return;
    }
    const m = this.highlight;
    this.badgeBox.hidden = false;
    this.badgeBox.className = m.connected ? "badge ok" : "badge broken";
    this.badgeBox.textContent = m.connected
      ? `${m.form} (${m.language}): connected`
      : `${m.form} (${m.language}): ${m.components.length} components`;
  }

  render(): void {
    const state = this.store.get();
    this.element.hidden = state.phase !== "view";
    if (state.phase !== "view") return;
    this.renderTabs(state.candidates);
    this.renderForms();
    this.renderBadge();
    this.paint();
  }
}
