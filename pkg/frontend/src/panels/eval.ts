import type { Store } from "../state";
import type { Report } from "../types";

type Trend = "up" | "down" | "none";

// metric rows: label, report key, desired direction for a better map
const ROWS: [string, keyof Report, Trend][] = [
  ["Size", "size", "up"],
  ["n_edges", "n_edges", "none"],
  ["Recall", "recall", "up"],
  ["Precision", "precision", "up"],
  ["Avg_D", "avg_d", "none"],
  ["Div_D", "div_d", "down"],
  ["Acc", "acc", "up"],
];

function fmt(value: number | null): string {
  if (value === null || value === undefined) return "n/a";
  if (Number.isInteger(value)) return String(value);
  return value.toPrecision(4);
}

/** Live metric table with desired-trend arrows and per-edit deltas. */
export class EvalPanel {
  readonly element: HTMLElement;

  constructor(
    doc: Document,
    private store: Store,
  ) {
    this.element = doc.createElement("section");
    this.element.id = "eval-panel";
  }

  private deltaCell(
    current: number | null,
    previous: number | null,
    trend: Trend,
  ): string {
    if (current === null || previous === null || current === previous) return "";
    const arrow = current > previous ? "&#9650;" : "&#9660;";
    let cls = "neutral";
    if (trend !== "none") {
      const improved = trend === "up" ? current > previous : current < previous;
      cls = improved ? "good" : "bad";
    }
    return `<span class="delta ${cls}">${arrow} ${fmt(Math.abs(current - previous))}</span>`;
  }

  render(): void {
    const state = this.store.get();
    this.element.hidden = state.phase !== "view";
    if (state.phase !== "view") return;
    const report = state.reports[state.active];
    if (!report) {
      this.element.innerHTML = "";
      return;
    }
    const previous = state.previousReports[state.active];
    const rows = ROWS.map(([label, key, trend]) => {
      const value = report[key] as number | null;
      const prev = previous ? (previous[key] as number | null) : null;
      const arrow =
        trend === "none" ? "" : trend === "up" ? "&#8593;" : "&#8595;";
      let cell = fmt(value);
      if (key === "precision" && value === null) {
        cell = `<span class="pending" title="${report.precision_note ?? ""}">n/a</span>`;
      }
      return `<tr data-metric="${label}">
        <th>${label} <span class="trend">${arrow}</span></th>
        <td class="value">${cell}</td>
        <td>${this.deltaCell(value, prev, trend)}</td>
      </tr>`;
    }).join("");
    const unconnected = report.unconnected_forms.length
      ? `<div id="unconnected"><h4>Unconnected forms</h4>${report.unconnected_forms
          .map((f) => `<span class="chip">${f}</span>`)
          .join(" ")}</div>`
      : `<div id="unconnected" class="ok">every form is connected</div>`;
    this.element.innerHTML = `
      <h3>Metrics</h3>
      <table id="metric-table"><tbody>${rows}</tbody></table>
      ${unconnected}
    `;
  }
}
