import type { ApiClient } from "../api";
import { ApiError } from "../api";
import { SAMPLE_CSV, SAMPLE_NAME } from "../sample";
import type { Store } from "../state";

/** Read a File as bytes; falls back to FileReader where Blob.arrayBuffer
 * is missing (older DOM implementations). */
async function fileBytes(file: File): Promise<Uint8Array> {
  if (typeof file.arrayBuffer === "function") {
    return new Uint8Array(await file.arrayBuffer());
  }
  return new Promise((resolve, reject) => {
    const reader = new FileReader();
    reader.onload = () => resolve(new Uint8Array(reader.result as ArrayBuffer));
    reader.onerror = () => reject(reader.error);
    reader.readAsArrayBuffer(file);
  });
}

/** Upload panel: pick a CSV (and optional gold standard), choose K/M/merge. */
export class ReadPanel {
  readonly element: HTMLElement;
  private errorBox: HTMLElement;
  private busy = false;

  constructor(
    doc: Document,
    private store: Store,
    private api: ApiClient,
  ) {
    this.element = doc.createElement("section");
    this.element.id = "read-panel";
    this.element.innerHTML = `
      <h2>Load a form-function table</h2>
      <p class="hint">CSV with <code>language,form</code> as the first two columns,
      then one column per function; cells are 0 or 1.</p>
      <form id="read-form">
        <label>Table CSV <input type="file" id="table-file" accept=".csv,text/csv"></label>
        <label>Gold standard (optional) <input type="file" id="gold-file" accept=".json"></label>
        <label>K (trees to enumerate) <input type="number" id="k-input" value="10000" min="1"></label>
        <label>M (candidates to keep) <input type="number" id="m-input" value="3" min="1"></label>
        <label class="inline"><input type="checkbox" id="merge-input"> merge to full recall</label>
        <div class="row">
          <button type="submit" id="upload-btn">Build candidates</button>
          <button type="button" id="sample-btn">Use sample data</button>
        </div>
      </form>
      <div id="read-error" class="error" hidden></div>
    `;
    this.errorBox = this.element.querySelector("#read-error") as HTMLElement;
    const form = this.element.querySelector("#read-form") as HTMLFormElement;
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submitFile();
    });
    (this.element.querySelector("#sample-btn") as HTMLButtonElement).addEventListener(
      "click",
      () => void this.submitSample(),
    );
  }

  private params() {
    const k = Number(
      (this.element.querySelector("#k-input") as HTMLInputElement).value || "10000",
    );
    const m = Number(
      (this.element.querySelector("#m-input") as HTMLInputElement).value || "3",
    );
    const merge = (this.element.querySelector("#merge-input") as HTMLInputElement)
      .checked;
    return { k, m, merge };
  }

  private async submitFile(): Promise<void> {
    const input = this.element.querySelector("#table-file") as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) {
      this.showError("pick a CSV file first, or use the sample data");
      return;
    }
    const goldInput = this.element.querySelector("#gold-file") as HTMLInputElement;
    const gold = goldInput.files?.[0];
    try {
      await this.create(
        file.name,
        await fileBytes(file),
        gold ? { name: gold.name, data: await fileBytes(gold) } : undefined,
      );
    } catch (error) {
      this.showError(String(error));
    }
  }

  private async submitSample(): Promise<void> {
    await this.create(SAMPLE_NAME, new TextEncoder().encode(SAMPLE_CSV));
  }

  private async create(
    name: string,
    data: Uint8Array,
    gold?: { name: string; data: Uint8Array },
  ): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    this.showError(null);
    try {
      const { k, m, merge } = this.params();
      const created = await this.api.createSession({ name, data }, { k, m, merge, gold });
      const doc = await this.api.candidates(created.session_id);
      this.store.openSession(created.session_id, doc);
    } catch (error) {
      if (error instanceof ApiError) {
        this.showError(`${error.stage}: ${error.detail}`);
      } else {
        this.showError(String(error));
      }
    } finally {
      this.busy = false;
    }
  }

  private showError(message: string | null): void {
    if (message) {
      this.errorBox.textContent = message;
      this.errorBox.hidden = false;
    } else {
      this.errorBox.hidden = true;
      this.errorBox.textContent = "";
    }
  }

  render(): void {
    this.element.hidden = this.store.get().phase !== "read";
  }
}
