import { ApiClient, ApiRequestError } from "./api";
import { hitTest } from "./hittest";
import type {
  GridResponse,
  ObjectDetail,
  SortKey,
  StatsResponse,
  ThreadsResponse,
  UploadResponse,
} from "./types";

export interface Viewport {
  width: number;
  height: number;
}

/** Everything the view derives from; mutated only through ExplorerStore. */
export interface ViewState {
  handle: UploadResponse | null;
  sort: SortKey;
  viewport: Viewport;
  zoom: number;
  selectedObjectId: string | null;
  grid: GridResponse | null;
  detail: ObjectDetail | null;
  stats: StatsResponse | null;
  threads: ThreadsResponse | null;
  error: string | null;
}

type Listener = (state: ViewState) => void;

export class ExplorerStore {
  readonly state: ViewState = {
    handle: null,
    sort: "none",
    viewport: { width: 1024, height: 768 },
    zoom: 1,
    selectedObjectId: null,
    grid: null,
    detail: null,
    stats: null,
    threads: null,
    error: null,
  };

  private listeners: Listener[] = [];
  private gridRequest = 0; // latest-wins token for in-flight grid fetches

  constructor(private readonly api: ApiClient) {}

  subscribe(fn: Listener): void {
    this.listeners.push(fn);
  }

  private notify(): void {
    for (const fn of this.listeners) {
      fn(this.state);
    }
  }

  async loadFile(text: string, name: string): Promise<void> {
    try {
      const handle = await this.api.uploadLog(text, name);
      this.state.handle = handle;
      this.state.selectedObjectId = null; // selection never outlives its log
      this.state.detail = null;
      this.state.error = null;
      await Promise.all([this.refreshGrid(), this.refreshSidebar()]);
    } catch (err) {
      this.state.error = err instanceof Error ? err.message : String(err);
      this.notify();
    }
  }

  async setSort(key: SortKey): Promise<void> {
    this.state.sort = key;
    await this.refreshGrid();
  }

  setViewport(viewport: Viewport): void {
    this.state.viewport = viewport;
    void this.refreshGrid();
  }

  setZoom(factor: number): void {
    this.state.zoom = Math.max(1, factor);
    this.notify();
  }

  /** Resolve a canvas click to an object and fetch its tooltip detail. */
  async clickAt(x: number, y: number): Promise<ObjectDetail | null> {
    const grid = this.state.grid;
    const handle = this.state.handle;
    if (!grid || !handle) {
      return null;
    }
    const index = hitTest(grid.layout, x, y, this.state.zoom);
    if (index === null) {
      this.state.selectedObjectId = null;
      this.state.detail = null;
      this.notify();
      return null;
    }
    const objectId = grid.cells[index].object_id;
    const detail = await this.api.getObject(handle.id, objectId);
    this.state.selectedObjectId = objectId;
    this.state.detail = detail;
    this.notify();
    return detail;
  }

  private async refreshGrid(): Promise<void> {
    const handle = this.state.handle;
    if (!handle) {
      return;
    }
    const token = ++this.gridRequest;
    try {
      const grid = await this.api.getGrid(
        handle.id,
        this.state.sort,
        this.state.viewport.width,
        this.state.viewport.height,
      );
      if (token !== this.gridRequest) {
        return; // a newer request won
      }
      this.state.grid = grid;
      this.state.error = null;
    } catch (err) {
      if (token !== this.gridRequest) {
        return;
      }
      this.state.error =
        err instanceof ApiRequestError ? err.message : String(err);
    }
    this.notify();
  }

  private async refreshSidebar(): Promise<void> {
    const handle = this.state.handle;
    if (!handle) {
      return;
    }
    const by = this.state.sort === "none" ? "type" : this.state.sort;
    [this.state.stats, this.state.threads] = await Promise.all([
      this.api.getStats(handle.id, by, 10),
      this.api.getThreads(handle.id),
    ]);
    this.notify();
  }
}
