import type { Layout } from "./types";

/**
 * Cell index under a point, mirroring the server's row-major layout:
 * cell i sits at ((i % columns) * side, (i / columns | 0) * side).
 *
 * Coordinates are in canvas pixels; divide by the zoom factor first
 * when the canvas is scaled client-side.
 */
export function hitTest(layout: Layout, x: number, y: number, zoom = 1): number | null {
  if (layout.count === 0 || x < 0 || y < 0) {
    return null;
  }
  const gx = x / zoom;
  const gy = y / zoom;
  const col = Math.floor(gx / layout.cell_side);
  const row = Math.floor(gy / layout.cell_side);
  if (col >= layout.columns || row >= layout.rows) {
    return null;
  }
  const index = row * layout.columns + col;
  return index < layout.count ? index : null;
}

/** Center of a cell in zoomed canvas coordinates. */
export function cellCenter(layout: Layout, index: number, zoom = 1): { x: number; y: number } {
  const side = layout.cell_side;
  const x = (index % layout.columns) * side + side / 2;
  const y = Math.floor(index / layout.columns) * side + side / 2;
  return { x: x * zoom, y: y * zoom };
}
