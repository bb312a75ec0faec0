// Response shapes of the tracegrid HTTP API (see ../docs/api.md).

export type SortKey = "none" | "package" | "class" | "type" | "thread" | "method";

export const SORT_KEYS: SortKey[] = ["none", "package", "class", "type", "thread", "method"];

export interface UploadResponse {
  id: string;
  source_name: string;
  event_count: number;
  created_count: number;
}

export interface Layout {
  cell_side: number;
  columns: number;
  rows: number;
  count: number;
  width: number;
}

export interface Cell {
  index: number;
  x: number;
  y: number;
  color: string;
  object_id: string;
  group_value: string;
}

export interface LegendEntry {
  value: string;
  color: string;
  count: number;
}

export interface GridResponse {
  layout: Layout;
  cells: Cell[];
  legend: LegendEntry[];
}

export interface ObjectEvent {
  kind: number; // 1 created, 2 method entry, 3 destroyed
  thread: string;
  timestamp: number;
  type: string;
  class: string;
  method: string;
  line: number;
}

export interface ObjectDetail {
  object_id: string;
  type: string;
  package: string;
  created_by: string;
  created_at: number;
  destroyed: boolean;
  events: ObjectEvent[];
}

export interface StatsResponse {
  by: SortKey;
  k: number;
  total: number;
  entries: { value: string; count: number }[];
}

export interface ThreadsResponse {
  rows: { thread: string; created: number; destroyed: number }[];
}

export interface ApiError {
  error: string;
  line?: number;
  reason?: string;
}
