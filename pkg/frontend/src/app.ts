import { ApiClient } from "./api";
import { EditPanel } from "./panels/edit";
import { EvalPanel } from "./panels/eval";
import { ReadPanel } from "./panels/read";
import { SavePanel } from "./panels/save";
import { ViewPanel } from "./panels/view";
import { Store } from "./state";

export interface App {
  store: Store;
  api: ApiClient;
  read: ReadPanel;
  view: ViewPanel;
  eval: EvalPanel;
  edit: EditPanel;
  save: SavePanel;
  root: HTMLElement;
}

/** Assemble the panels, wire them to one store, and mount into root. */
export function initApp(root: HTMLElement, apiBase = ""): App {
  const doc = root.ownerDocument;
  const store = new Store();
  const api = new ApiClient(apiBase);

  const read = new ReadPanel(doc, store, api);
  const view = new ViewPanel(doc, store, api);
  const evalPanel = new EvalPanel(doc, store);
  const edit = new EditPanel(doc, store, api);
  const save = new SavePanel(doc, store, api);

  // node clicks on the canvas feed the edit panel's endpoint pickers
  view.onNodePicked = (node) => edit.pickNode(node);
  // after a confirmed mutation, re-fetch any highlighted form so the
  // badge reflects the new graph before the next paint
  edit.onMutated = () => view.refreshHighlight();
  save.positionsProvider = (index) => view.positions(index);
  save.highlightProvider = () => view.currentHighlight();

  const header = doc.createElement("header");
  header.innerHTML = `<h1>semantic map workbench</h1><div id="session-info"></div>`;
  const workspace = doc.createElement("div");
  workspace.id = "workspace";
  const sidebar = doc.createElement("aside");
  sidebar.append(evalPanel.element, edit.element, save.element);
  workspace.append(view.element, sidebar);
  root.append(header, read.element, workspace);

  const sessionInfo = header.querySelector("#session-info") as HTMLElement;
  store.subscribe(() => {
    const state = store.get();
    read.render();
    view.render();
    evalPanel.render();
    edit.render();
    save.render();
    workspace.style.display = state.phase === "view" ? "" : "none";
    if (state.summary) {
      const t = state.summary.table;
      sessionInfo.textContent =
        `${t.rows} rows x ${t.functions.length} functions, ` +
        `sparsity ${t.sparsity.toFixed(3)}` +
        (state.summary.truncated ? `, top ${state.summary.k} trees` : "");
    } else {
      sessionInfo.textContent = "";
    }
  });
  store.update({});

  return { store, api, read, view, eval: evalPanel, edit, save, root };
}
