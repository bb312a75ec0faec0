import type {
  ApiError,
  GridResponse,
  ObjectDetail,
  SortKey,
  StatsResponse,
  ThreadsResponse,
  UploadResponse,
} from "./types";

export class ApiRequestError extends Error {
  constructor(readonly status: number, readonly body: ApiError) {
    super(bodyMessage(status, body));
  }
}

function bodyMessage(status: number, body: ApiError): string {
  if (body.line !== undefined) {
    return `${body.error} (line ${body.line}: ${body.reason})`;
  }
  return `${body.error} (HTTP ${status})`;
}

async function json<T>(resp: Response): Promise<T> {
  const body = await resp.json();
  if (!resp.ok) {
    throw new ApiRequestError(resp.status, body as ApiError);
  }
  return body as T;
}

/** Typed client for the five tracegrid endpoints. */
export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  async uploadLog(body: string, name: string): Promise<UploadResponse> {
    const resp = await this.fetchFn(`${this.base}/logs`, {
      method: "POST",
      headers: { "content-type": "text/csv", "x-log-name": name },
      body,
    });
    return json(resp);
  }

  async getGrid(logId: string, sort: SortKey, w: number, h: number): Promise<GridResponse> {
    const resp = await this.fetchFn(
      `${this.base}/logs/${logId}/grid?sort=${sort}&w=${w}&h=${h}`,
    );
    return json(resp);
  }

  async getObject(logId: string, objectId: string): Promise<ObjectDetail> {
    const resp = await this.fetchFn(
      `${this.base}/logs/${logId}/objects/${encodeURIComponent(objectId)}`,
    );
    return json(resp);
  }

  async getStats(logId: string, by: SortKey, k: number): Promise<StatsResponse> {
    const resp = await this.fetchFn(`${this.base}/logs/${logId}/stats?by=${by}&k=${k}`);
    return json(resp);
  }

  async getThreads(logId: string): Promise<ThreadsResponse> {
    const resp = await this.fetchFn(`${this.base}/logs/${logId}/threads`);
    return json(resp);
  }
}
