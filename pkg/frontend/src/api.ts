/** Typed client for the session-service HTTP API.
 *
 * Every mutation carries the caller's expected revision; a stale value is
 * surfaced as a ConflictError so the UI can refetch and inform the user —
 * the client never retries a stale mutation on its own.
 */

import type { ExportReport, InteractionEvent, ProjectSnapshot } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly reasonCode: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class ConflictError extends ApiError {
  constructor(message: string) {
    super(409, "revision_conflict", message);
    this.name = "ConflictError";
  }
}

interface ErrorBody {
  reason_code?: string;
  message?: string;
}

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchImpl(this.baseUrl + path, init);
    if (!res.ok) {
      let body: ErrorBody = {};
      try {
        body = (await res.json()) as ErrorBody;
      } catch {
        // non-JSON error body; fall through with the status alone
      }
      const message = body.message ?? `HTTP ${res.status}`;
      if (res.status === 409) throw new ConflictError(message);
      throw new ApiError(res.status, body.reason_code ?? "http_error", message);
    }
    return (await res.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  fetchProject(): Promise<ProjectSnapshot> {
    return this.request<ProjectSnapshot>("/api/project");
  }

  appendEntry(
    scenarioId: string,
    mockupId: string,
    expectedRevision: number,
  ): Promise<{ revision: number; entry_id: string }> {
    return this.post(`/api/scenarios/${scenarioId}/entries`, {
      mockup_id: mockupId,
      expected_revision: expectedRevision,
    });
  }

  reorderEntries(
    scenarioId: string,
    order: string[],
    expectedRevision: number,
  ): Promise<{ revision: number }> {
    return this.request(`/api/scenarios/${scenarioId}/entries/order`, {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ order, expected_revision: expectedRevision }),
    });
  }

  deleteEntry(
    scenarioId: string,
    entryId: string,
    expectedRevision: number,
  ): Promise<{ revision: number }> {
    return this.request(
      `/api/scenarios/${scenarioId}/entries/${entryId}?expected_revision=${expectedRevision}`,
      { method: "DELETE" },
    );
  }

  recordEvents(
    entryId: string,
    events: InteractionEvent[],
    expectedRevision: number,
  ): Promise<{ revision: number; recorded: number }> {
    return this.post(`/api/entries/${entryId}/events`, {
      events,
      expected_revision: expectedRevision,
    });
  }

  insertEvent(
    entryId: string,
    event: InteractionEvent,
    index: number,
    expectedRevision: number,
  ): Promise<{ revision: number }> {
    return this.post(`/api/entries/${entryId}/events/insert`, {
      event,
      index,
      expected_revision: expectedRevision,
    });
  }

  clearSequence(entryId: string, expectedRevision: number): Promise<{ revision: number }> {
    return this.request(
      `/api/entries/${entryId}/events?expected_revision=${expectedRevision}`,
      { method: "DELETE" },
    );
  }

  frameUrl(scenarioId: string, tMs: number, holdMs = 500): string {
    return `${this.baseUrl}/api/scenarios/${scenarioId}/frame?t_ms=${tMs}&hold_ms=${holdMs}`;
  }

  /** Rendered frame at a scenario time, as PNG bytes. */
  async fetchFrame(scenarioId: string, tMs: number, holdMs = 500): Promise<Uint8Array> {
    const res = await this.fetchImpl(this.frameUrl(scenarioId, tMs, holdMs));
    if (!res.ok) {
      throw new ApiError(res.status, "frame_failed", `frame fetch failed: HTTP ${res.status}`);
    }
    return new Uint8Array(await res.arrayBuffer());
  }

  exportScenario(
    scenarioId: string,
    options: { fps?: number; hold_ms?: number; format?: string; output?: string } = {},
  ): Promise<ExportReport> {
    return this.post(`/api/scenarios/${scenarioId}/export`, options);
  }
}
