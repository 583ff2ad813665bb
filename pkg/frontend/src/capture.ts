/** Live event capture on the mockup preview pane.
 *
 * While recording, pointer and key input is buffered with timestamps
 * relative to the capture clock origin (t0). Timestamps are clamped to be
 * non-decreasing and pointer moves are throttled, so an uploaded batch
 * always satisfies the server's sequence precondition. Nothing is sent
 * until stop(): the whole take is one all-or-nothing mutation.
 */

import type { ApiClient } from "./api.js";
import type { InteractionEvent, PointerSource } from "./types.js";

/** clear-first replaces the entry's sequence; insert splices the take in. */
export type CaptureMode = "clear-first" | "insert";

export interface CaptureOptions {
  /** Minimum gap between recorded pointer moves (downs/ups/keys are exact). */
  moveThrottleMs?: number;
  /** Clock in milliseconds; injectable for tests. */
  now?: () => number;
}

export interface CaptureResult {
  uploaded: InteractionEvent[];
  revision: number;
}

export class CaptureSession {
  readonly entryId: string;
  recording = false;

  private readonly api: ApiClient;
  private readonly moveThrottleMs: number;
  private readonly now: () => number;
  private t0 = 0;
  private buffer: InteractionEvent[] = [];
  private lastT = 0;
  private lastMoveT: number | null = null;

  constructor(api: ApiClient, entryId: string, options: CaptureOptions = {}) {
    this.api = api;
    this.entryId = entryId;
    this.moveThrottleMs = options.moveThrottleMs ?? 16;
    this.now = options.now ?? (() => performance.now());
  }

  get buffered(): readonly InteractionEvent[] {
    return this.buffer;
  }

  start(): void {
    this.t0 = this.now();
    this.buffer = [];
    this.lastT = 0;
    this.lastMoveT = null;
    this.recording = true;
  }

  /** Capture-relative timestamp, clamped so the buffer never goes backwards. */
  private stamp(): number {
    const t = Math.max(0, Math.round(this.now() - this.t0), this.lastT);
    this.lastT = t;
    return t;
  }

  pointerMove(x: number, y: number): void {
    if (!this.recording) return;
    const t = Math.max(0, Math.round(this.now() - this.t0), this.lastT);
    if (this.lastMoveT !== null && t - this.lastMoveT < this.moveThrottleMs) return;
    this.lastT = t;
    this.lastMoveT = t;
    this.buffer.push({ t, kind: "pointer_move", x, y });
  }

  pointerDown(x: number, y: number, source: PointerSource = "mouse"): void {
    if (!this.recording) return;
    this.buffer.push({ t: this.stamp(), kind: "pointer_down", x, y, source });
  }

  pointerUp(x: number, y: number, source: PointerSource = "mouse"): void {
    if (!this.recording) return;
    this.buffer.push({ t: this.stamp(), kind: "pointer_up", x, y, source });
  }

  keyChar(char: string): void {
    if (!this.recording) return;
    this.buffer.push({ t: this.stamp(), kind: "key_char", char });
  }

  keyBackspace(): void {
    if (!this.recording) return;
    this.buffer.push({ t: this.stamp(), kind: "key_backspace" });
  }

  /** Stop and upload the take.
   *
   * An empty take sends no mutation at all. In clear-first mode the old
   * sequence is cleared, then the batch is recorded; in insert mode each
   * event is spliced in starting at insertIndex. A stale revision raises
   * ConflictError untouched — callers refetch and inform the user; the
   * session never retries a stale batch.
   */
  async stop(
    expectedRevision: number,
    mode: CaptureMode = "clear-first",
    insertIndex = 0,
  ): Promise<CaptureResult> {
    this.recording = false;
    const uploaded = this.buffer;
    this.buffer = [];
    if (uploaded.length === 0) {
      return { uploaded, revision: expectedRevision };
    }
    let revision = expectedRevision;
    if (mode === "clear-first") {
      revision = (await this.api.clearSequence(this.entryId, revision)).revision;
      revision = (await this.api.recordEvents(this.entryId, uploaded, revision)).revision;
    } else {
      for (let i = 0; i < uploaded.length; i++) {
        revision = (
          await this.api.insertEvent(this.entryId, uploaded[i], insertIndex + i, revision)
        ).revision;
      }
    }
    return { uploaded, revision };
  }
}
