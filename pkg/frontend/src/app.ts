/** Three-pane recorder app: mockup gallery, capture/replay preview,
 * scenario timeline. All state flows through the session-service API;
 * conflicts refetch and tell the user instead of retrying.
 */

import { ApiClient, ConflictError } from "./api.js";
import { CaptureSession } from "./capture.js";
import { PreviewPlayer } from "./player.js";
import { TimelineView } from "./timeline.js";
import {
  scenarioById,
  scenarioDurationMs,
  type ProjectSnapshot,
} from "./types.js";

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

export class RecorderApp {
  private snapshot!: ProjectSnapshot;
  private timeline!: TimelineView;
  private player!: PreviewPlayer;
  private capture: CaptureSession | null = null;

  private readonly gallery: HTMLElement;
  private readonly previewImg: HTMLImageElement;
  private readonly scrubber: HTMLInputElement;
  private readonly timelinePane: HTMLElement;
  private readonly status: HTMLElement;

  constructor(
    private readonly api: ApiClient,
    private readonly scenarioId: string,
    root: HTMLElement,
  ) {
    this.gallery = el("div", "gallery");
    const preview = el("div", "preview");
    this.previewImg = el("img", "frame");
    this.scrubber = el("input");
    this.scrubber.type = "range";
    preview.append(this.previewImg, this.scrubber);
    this.timelinePane = el("div", "timeline");
    this.status = el("div", "status");
    root.append(this.gallery, preview, this.timelinePane, this.status);

    this.previewImg.addEventListener("pointermove", (e) =>
      this.capture?.pointerMove(...this.toMockup(e)),
    );
    this.previewImg.addEventListener("pointerdown", (e) =>
      this.capture?.pointerDown(...this.toMockup(e)),
    );
    this.previewImg.addEventListener("pointerup", (e) =>
      this.capture?.pointerUp(...this.toMockup(e)),
    );
    document.addEventListener("keydown", (e) => {
      if (!this.capture) return;
      if (e.key === "Backspace") this.capture.keyBackspace();
      else if (e.key.length === 1) this.capture.keyChar(e.key);
    });
    this.scrubber.addEventListener("input", () => {
      void this.player.scrub(Number(this.scrubber.value));
    });
  }

  async init(): Promise<void> {
    this.snapshot = await this.api.fetchProject();
    this.timeline = new TimelineView(this.api, this.scenarioId, this.snapshot);
    const total = scenarioDurationMs(scenarioById(this.snapshot.project, this.scenarioId));
    this.scrubber.max = String(Math.max(0, total - 1));
    this.player = new PreviewPlayer(
      this.api,
      this.scenarioId,
      total,
      (png, t) => this.showFrame(png, t),
      (msg) => this.report(`frame error: ${msg}`),
    );
    this.renderGallery();
    this.renderTimeline();
    await this.player.scrub(0);
  }

  private toMockup(e: PointerEvent): [number, number] {
    const rect = this.previewImg.getBoundingClientRect();
    return [Math.round(e.clientX - rect.left), Math.round(e.clientY - rect.top)];
  }

  private showFrame(png: Uint8Array, tMs: number): void {
    const blob = new Blob([png.slice().buffer], { type: "image/png" });
    const url = URL.createObjectURL(blob);
    this.previewImg.onload = () => URL.revokeObjectURL(url);
    this.previewImg.src = url;
    this.scrubber.value = String(tMs);
  }

  private report(message: string): void {
    this.status.textContent = message;
  }

  private async refetch(): Promise<void> {
    this.snapshot = await this.api.fetchProject();
    this.timeline.sync(this.snapshot);
    this.renderTimeline();
  }

  private renderGallery(): void {
    this.gallery.replaceChildren();
    for (const mockup of this.snapshot.project.mockups) {
      const card = el("button", "mockup-card", mockup.name);
      card.addEventListener("click", () => void this.addEntry(mockup.id));
      this.gallery.append(card);
    }
  }

  private async addEntry(mockupId: string): Promise<void> {
    try {
      await this.api.appendEntry(this.scenarioId, mockupId, this.snapshot.revision);
    } catch (err) {
      if (!(err instanceof ConflictError)) throw err;
      this.report("someone else changed the project; timeline reloaded");
    }
    await this.refetch();
  }

  private renderTimeline(): void {
    this.timelinePane.replaceChildren();
    this.timeline.cards.forEach((card, index) => {
      const node = el("div", "entry-card", `${card.mockupName} · ${card.durationMs} ms`);
      node.draggable = true;
      node.addEventListener("dragstart", () => this.timeline.beginDrag(index));
      node.addEventListener("dragover", (e) => e.preventDefault());
      node.addEventListener("drop", () => void this.dropAt(index));
      node.addEventListener("dblclick", () => void this.toggleRecording(card.entryId));
      this.timelinePane.append(node);
    });
  }

  private async dropAt(index: number): Promise<void> {
    const result = await this.timeline.drop(index);
    if (result.conflict) {
      this.report(`reorder rejected (stale revision); timeline reloaded`);
    }
    this.renderTimeline();
  }

  async toggleRecording(entryId: string): Promise<void> {
    if (this.capture?.recording) {
      try {
        const { revision } = await this.capture.stop(this.snapshot.revision);
        this.snapshot.revision = revision;
        this.report("recording saved");
      } catch (err) {
        if (!(err instanceof ConflictError)) throw err;
        this.report("recording rejected (stale revision); project reloaded, take discarded");
      }
      this.capture = null;
      await this.refetch();
      return;
    }
    this.capture = new CaptureSession(this.api, entryId);
    this.capture.start();
    this.report(`recording on ${entryId} — double-click the card again to stop`);
  }
}

export async function mount(root: HTMLElement, baseUrl: string, scenarioId: string) {
  const app = new RecorderApp(new ApiClient(baseUrl), scenarioId, root);
  await app.init();
  return app;
}
