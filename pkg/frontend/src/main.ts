import { ApiClient } from "./api";
import { drawGrid } from "./renderer";
import { ExplorerStore } from "./state";
import { hideTooltip, showTooltip } from "./tooltip";
import { SORT_KEYS } from "./types";
import type { ViewState } from "./state";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export interface App {
  store: ExplorerStore;
  canvas: HTMLCanvasElement;
  sortSelect: HTMLSelectElement;
  fileInput: HTMLInputElement;
  zoomInput: HTMLInputElement;
}

export function createApp(root: HTMLElement, api: ApiClient): App {
  const store = new ExplorerStore(api);

  const toolbar = el("div", "toolbar");
  const fileInput = el("input") as HTMLInputElement;
  fileInput.type = "file";
  fileInput.accept = ".csv,text/csv";

  const sortSelect = el("select") as HTMLSelectElement;
  for (const key of SORT_KEYS) {
    const option = el("option", undefined, key);
    option.value = key;
    sortSelect.appendChild(option);
  }

  const zoomInput = el("input") as HTMLInputElement;
  zoomInput.type = "range";
  zoomInput.min = "1";
  zoomInput.max = "8";
  zoomInput.step = "1";
  zoomInput.value = "1";

  const status = el("span", "status");
  toolbar.append(fileInput, el("label", undefined, "sort:"), sortSelect,
    el("label", undefined, "zoom:"), zoomInput, status);

  const canvasWrap = el("div", "canvas-wrap");
  const canvas = el("canvas") as HTMLCanvasElement;
  canvasWrap.appendChild(canvas);

  const sidebar = el("div", "sidebar");
  const legendList = el("ul", "legend");
  const statsTable = el("table", "stats");
  const threadsTable = el("table", "threads");
  sidebar.append(el("h3", undefined, "Legend"), legendList,
    el("h3", undefined, "Top creators"), statsTable,
    el("h3", undefined, "Threads"), threadsTable);

  root.append(toolbar, canvasWrap, sidebar);

  fileInput.addEventListener("change", () => {
    const file = fileInput.files?.[0];
    if (!file) return;
    void file.text().then((text) => store.loadFile(text, file.name));
  });

  sortSelect.addEventListener("change", () => {
    hideTooltip();
    void store.setSort(sortSelect.value as (typeof SORT_KEYS)[number]);
  });

  zoomInput.addEventListener("input", () => {
    store.setZoom(Number(zoomInput.value));
  });

  canvas.addEventListener("click", (event: MouseEvent) => {
    // offsetX/offsetY are unreliable under jsdom; derive from client coords
    const rect = canvas.getBoundingClientRect();
    const x = event.clientX - rect.left;
    const y = event.clientY - rect.top;
    void store.clickAt(x, y).then((detail) => {
      if (detail) {
        showTooltip(detail, event.pageX, event.pageY);
      } else {
        hideTooltip();
      }
    });
  });

  store.subscribe((state: ViewState) => {
    if (state.error) {
      status.textContent = `error: ${state.error}`;
      return;
    }
    status.textContent = state.handle
      ? `${state.handle.source_name}: ${state.handle.created_count} objects`
      : "load a CSV log to begin";
    if (state.grid) {
      drawGrid(canvas, state.grid, state.zoom);
      legendList.replaceChildren(
        ...state.grid.legend.map((entry) => {
          const item = el("li");
          const swatch = el("span", "swatch");
          swatch.style.background = entry.color;
          item.append(swatch, ` ${entry.value} (${entry.count})`);
          return item;
        }),
      );
    }
    if (state.stats) {
      statsTable.replaceChildren(
        ...state.stats.entries.map((entry) => {
          const row = el("tr");
          row.append(el("td", undefined, entry.value), el("td", undefined, String(entry.count)));
          return row;
        }),
      );
    }
    if (state.threads) {
      threadsTable.replaceChildren(
        ...state.threads.rows.map((r) => {
          const row = el("tr");
          row.append(
            el("td", undefined, r.thread),
            el("td", undefined, `+${r.created}`),
            el("td", undefined, `-${r.destroyed}`),
          );
          return row;
        }),
      );
    }
  });

  return { store, canvas, sortSelect, fileInput, zoomInput };
}

// Browser entry point; tests build the app against a mock client instead.
if (typeof document !== "undefined" && document.getElementById("app")) {
  createApp(document.getElementById("app") as HTMLElement, new ApiClient(""));
}
