import type { GridResponse } from "./types";

/**
 * Paint the cell list onto a canvas.  The grid is drawn from the JSON
 * cells rather than server SVG so zoom and tooltips stay local.
 * No-ops when no 2d context is available (e.g. under jsdom in tests).
 */
export function drawGrid(canvas: HTMLCanvasElement, grid: GridResponse, zoom: number): void {
  const side = grid.layout.cell_side * zoom;
  canvas.width = Math.max(1, Math.ceil(grid.layout.width * zoom));
  canvas.height = Math.max(1, Math.ceil(grid.layout.rows * grid.layout.cell_side * zoom));
  let ctx: CanvasRenderingContext2D | null;
  try {
    ctx = canvas.getContext("2d");
  } catch {
    ctx = null; // jsdom throws instead of returning null
  }
  if (!ctx) {
    return;
  }
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (const cell of grid.cells) {
    ctx.fillStyle = cell.color;
    ctx.fillRect(cell.x * zoom, cell.y * zoom, side, side);
  }
}
