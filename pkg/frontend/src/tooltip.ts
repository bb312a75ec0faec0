import type { ObjectDetail } from "./types";

let element: HTMLDivElement | null = null;

function tooltipElement(): HTMLDivElement {
  if (!element) {
    element = document.createElement("div");
    element.className = "tooltip";
    element.style.cssText = [
      "position: absolute",
      "background: rgba(20, 20, 20, 0.92)",
      "color: #fff",
      "padding: 6px 10px",
      "border-radius: 4px",
      "font: 12px/1.5 monospace",
      "pointer-events: none",
      "z-index: 10",
      "display: none",
    ].join(";");
    document.body.appendChild(element);
  }
  if (!element.isConnected) {
    document.body.appendChild(element); // the document was reset
  }
  return element;
}

function truncate(id: string): string {
  return id.length > 13 ? `${id.slice(0, 13)}…` : id;
}

export function tooltipHtml(detail: ObjectDetail): string {
  const created = new Date(detail.created_at * 1000).toISOString().slice(0, 16);
  return [
    `<b data-oid="${detail.object_id}">${truncate(detail.object_id)}</b>`,
    `type: ${detail.type}`,
    `package: ${detail.package || "(default)"}`,
    `thread: ${detail.created_by}`,
    `created: ${created}`,
    `destroyed: ${detail.destroyed ? "yes" : "no"}`,
  ].join("<br>");
}

export function showTooltip(detail: ObjectDetail, pageX: number, pageY: number): void {
  const el = tooltipElement();
  el.innerHTML = tooltipHtml(detail);
  el.dataset.objectId = detail.object_id;
  el.style.left = `${pageX + 12}px`;
  el.style.top = `${pageY + 12}px`;
  el.style.display = "block";
}

export function hideTooltip(): void {
  if (element) {
    element.style.display = "none";
    delete element.dataset.objectId;
  }
}

/** Visible tooltip's object id, or null; used by tests and callers. */
export function tooltipTarget(): string | null {
  if (!element || element.style.display === "none") {
    return null;
  }
  return element.dataset.objectId ?? null;
}
