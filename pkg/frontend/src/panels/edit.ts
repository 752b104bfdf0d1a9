import type { ApiClient } from "../api";
import { ApiError } from "../api";
import type { Store } from "../state";
import type { EditAction } from "../types";

/**
 * Edge editing: add (pick two nodes, by click or dropdown), delete,
 * re-weight, merge to full recall, undo. Every button maps to exactly one
 * edit action; the store only changes from the server's confirmed result.
 */
export class EditPanel {
  readonly element: HTMLElement;
  private errorBox: HTMLElement;
  private pendingPick: "source" | "target" = "source";
  onMutated: (() => Promise<void>) | null = null;
  /** time from server response to store update, for latency checks */
  lastApplyMs = 0;

  constructor(
    doc: Document,
    private store: Store,
    private api: ApiClient,
  ) {
    this.element = doc.createElement("section");
    this.element.id = "edit-panel";
    this.element.innerHTML = `
      <h3>Edit</h3>
      <div class="row">
        <select id="edit-source"></select>
        <select id="edit-target"></select>
        <input type="number" id="edit-weight" placeholder="weight" min="0" step="any">
      </div>
      <div class="row">
        <button id="add-edge-btn">Add edge</button>
        <button id="delete-edge-btn">Delete edge</button>
        <button id="set-weight-btn">Set weight</button>
      </div>
      <div class="row">
        <button id="merge-btn">Merge to full recall</button>
        <button id="undo-btn">Undo</button>
      </div>
      <div id="edit-error" class="error" hidden></div>
    `;
    this.errorBox = this.element.querySelector("#edit-error") as HTMLElement;
    this.button("#add-edge-btn").addEventListener("click", () => {
      void this.apply({
        kind: "add_edge",
        source: this.pick("#edit-source"),
        target: this.pick("#edit-target"),
        ...this.weight(),
      });
    });
    this.button("#delete-edge-btn").addEventListener("click", () => {
      void this.apply({
        kind: "delete_edge",
        source: this.pick("#edit-source"),
        target: this.pick("#edit-target"),
      });
    });
    this.button("#set-weight-btn").addEventListener("click", () => {
      void this.apply({
        kind: "set_weight",
        source: this.pick("#edit-source"),
        target: this.pick("#edit-target"),
        ...this.weight(),
      });
    });
    this.button("#merge-btn").addEventListener("click", () => void this.merge());
    this.button("#undo-btn").addEventListener("click", () => void this.undo());
  }

  private button(selector: string): HTMLButtonElement {
    return this.element.querySelector(selector) as HTMLButtonElement;
  }

  private pick(selector: string): number {
    return Number((this.element.querySelector(selector) as HTMLSelectElement).value);
  }

  private weight(): { weight?: number } {
    const raw = (this.element.querySelector("#edit-weight") as HTMLInputElement).value;
    return raw === "" ? {} : { weight: Number(raw) };
  }

  /** Canvas node clicks land here: first click sets source, second target. */
  pickNode(node: number): void {
    const selector = this.pendingPick === "source" ? "#edit-source" : "#edit-target";
    (this.element.querySelector(selector) as HTMLSelectElement).value = String(node);
    this.pendingPick = this.pendingPick === "source" ? "target" : "source";
  }

  async apply(action: EditAction): Promise<void> {
    const state = this.store.get();
    if (!state.sessionId) return;
    try {
      const result = await this.api.edit(state.sessionId, state.active, action);
      const t0 = performance.now();
      this.store.applyMutation(state.active, result.graph, result.report);
      this.lastApplyMs = performance.now() - t0;
      this.showError(null);
      if (this.onMutated) await this.onMutated();
    } catch (error) {
      this.showError(error);
    }
  }

  async merge(): Promise<void> {
    const state = this.store.get();
    if (!state.sessionId) return;
    try {
      const result = await this.api.merge(state.sessionId, state.active);
      const t0 = performance.now();
      this.store.applyMutation(state.active, result.graph, result.report);
      this.lastApplyMs = performance.now() - t0;
      this.showError(null);
      if (this.onMutated) await this.onMutated();
    } catch (error) {
      this.showError(error);
    }
  }

  async undo(): Promise<void> {
    const state = this.store.get();
    if (!state.sessionId) return;
    try {
      const result = await this.api.undo(state.sessionId, state.active);
      if (result.undone === false) {
        this.showError("nothing to undo");
        return;
      }
      this.store.applyMutation(state.active, result.graph, result.report);
      this.showError(null);
      if (this.onMutated) await this.onMutated();
    } catch (error) {
      this.showError(error);
    }
  }

  private showError(error: unknown): void {
    if (error === null) {
      this.errorBox.hidden = true;
      this.errorBox.textContent = "";
      return;
    }
    this.errorBox.hidden = false;
    this.errorBox.textContent =
      error instanceof ApiError ? `${error.stage}: ${error.detail}` : String(error);
  }

  render(): void {
    const state = this.store.get();
    this.element.hidden = state.phase !== "view";
    if (state.phase !== "view") return;
    const labels = state.summary?.table.functions ?? [];
    for (const selector of ["#edit-source", "#edit-target"]) {
      const select = this.element.querySelector(selector) as HTMLSelectElement;
      const current = select.value;
      select.innerHTML = labels
        .map((label, i) => `<option value="${i}">${label}</option>`)
        .join("");
      if (current) select.value = current;
    }
  }
}
