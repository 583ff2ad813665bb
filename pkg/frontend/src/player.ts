/** Replay preview: a frame-scrubbing player polling the service's frame
 * endpoint. Every displayed frame is server-rendered — the UI holds no
 * replay logic of its own beyond timeline arithmetic for the scrubber.
 */

import type { ApiClient } from "./api.js";

export interface PlayerOptions {
  fps?: number;
  holdMs?: number;
  /** Frame-step scheduler; injectable for tests (defaults to setTimeout). */
  schedule?: (fn: () => void, ms: number) => unknown;
}

export type FrameListener = (png: Uint8Array, tMs: number) => void;
export type ErrorListener = (message: string, tMs: number) => void;

export class PreviewPlayer {
  playheadMs = 0;
  playing = false;
  /** True while the last fetch failed; the pane shows a placeholder. */
  showingPlaceholder = false;

  private readonly fps: number;
  private readonly holdMs: number;
  private readonly schedule: (fn: () => void, ms: number) => unknown;
  private fetchSeq = 0;

  constructor(
    private readonly api: ApiClient,
    readonly scenarioId: string,
    private readonly totalMs: number,
    private readonly onFrame: FrameListener,
    private readonly onError: ErrorListener = () => {},
    options: PlayerOptions = {},
  ) {
    this.fps = options.fps ?? 30;
    this.holdMs = options.holdMs ?? 500;
    this.schedule = options.schedule ?? ((fn, ms) => setTimeout(fn, ms));
  }

  /** Move the playhead and display the frame there. A failed fetch shows
   * the error placeholder but leaves the playhead where the user put it. */
  async scrub(tMs: number): Promise<void> {
    this.playheadMs = Math.max(0, Math.min(Math.round(tMs), Math.max(0, this.totalMs - 1)));
    const seq = ++this.fetchSeq;
    try {
      const png = await this.api.fetchFrame(this.scenarioId, this.playheadMs, this.holdMs);
      if (seq !== this.fetchSeq) return; // superseded by a newer scrub
      this.showingPlaceholder = false;
      this.onFrame(png, this.playheadMs);
    } catch (err) {
      if (seq !== this.fetchSeq) return;
      this.showingPlaceholder = true;
      this.onError(err instanceof Error ? err.message : String(err), this.playheadMs);
    }
  }

  play(): void {
    if (this.playing) return;
    this.playing = true;
    const stepMs = 1000 / this.fps;
    const step = async () => {
      if (!this.playing) return;
      await this.scrub(this.playheadMs);
      if (this.playheadMs >= this.totalMs - 1) {
        this.playing = false;
        return;
      }
      this.playheadMs = Math.min(this.playheadMs + stepMs, this.totalMs - 1);
      this.schedule(step, stepMs);
    };
    void step();
  }

  pause(): void {
    this.playing = false;
  }
}
