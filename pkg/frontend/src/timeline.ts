/** Scenario timeline pane: ordered entry cards with drag-to-reorder.
 *
 * Card order always mirrors the server's entry order at the last known
 * revision; a drop issues exactly one full-permutation PUT (or none when
 * the card lands back in its original slot). A stale revision surfaces as
 * a conflict: the view refetches and reports, and never retries the move.
 */

import { ApiClient, ConflictError } from "./api.js";
import { entryDurationMs, scenarioById, type ProjectSnapshot, type Scenario } from "./types.js";

export interface EntryCard {
  entryId: string;
  mockupId: string;
  mockupName: string;
  durationMs: number;
}

export interface DropResult {
  moved: boolean;
  conflict: string | null;
}

export class TimelineView {
  revision: number;
  cards: EntryCard[] = [];
  dragIndex: number | null = null;
  /** Human-readable notice of the last conflict, cleared on the next sync. */
  conflictNotice: string | null = null;

  constructor(
    private readonly api: ApiClient,
    readonly scenarioId: string,
    snapshot: ProjectSnapshot,
    private readonly holdMs = 500,
  ) {
    this.revision = snapshot.revision;
    this.cards = this.buildCards(snapshot);
  }

  private buildCards(snapshot: ProjectSnapshot): EntryCard[] {
    const scenario: Scenario = scenarioById(snapshot.project, this.scenarioId);
    const names = new Map(snapshot.project.mockups.map((m) => [m.id, m.name]));
    return scenario.entries.map((entry) => ({
      entryId: entry.id,
      mockupId: entry.mockup_id,
      mockupName: names.get(entry.mockup_id) ?? entry.mockup_id,
      durationMs: entryDurationMs(entry, this.holdMs),
    }));
  }

  sync(snapshot: ProjectSnapshot): void {
    this.revision = snapshot.revision;
    this.cards = this.buildCards(snapshot);
    this.conflictNotice = null;
  }

  beginDrag(index: number): void {
    if (index < 0 || index >= this.cards.length) throw new RangeError(`no card ${index}`);
    this.dragIndex = index;
  }

  cancelDrag(): void {
    this.dragIndex = null;
  }

  /** Drop the dragged card before slot targetIndex (0..cards.length). */
  async drop(targetIndex: number): Promise<DropResult> {
    if (this.dragIndex === null) throw new Error("no drag in progress");
    const from = this.dragIndex;
    this.dragIndex = null;
    const order = this.cards.map((c) => c.entryId);
    const [moved] = order.splice(from, 1);
    const to = targetIndex > from ? targetIndex - 1 : targetIndex;
    order.splice(to, 0, moved);
    if (to === from) {
      return { moved: false, conflict: null };
    }
    try {
      const res = await this.api.reorderEntries(this.scenarioId, order, this.revision);
      this.revision = res.revision;
      const byId = new Map(this.cards.map((c) => [c.entryId, c]));
      this.cards = order.map((id) => byId.get(id)!);
      return { moved: true, conflict: null };
    } catch (err) {
      if (err instanceof ConflictError) {
        this.conflictNotice = err.message;
        this.sync(await this.api.fetchProject());
        this.conflictNotice = err.message;
        return { moved: false, conflict: err.message };
      }
      throw err;
    }
  }
}
