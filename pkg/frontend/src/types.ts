/** Shapes of the session-service JSON API (mirrors the project file format). */

export type PointerSource = "mouse" | "touch";

export type InteractionEvent =
  | { t: number; kind: "pointer_move"; x: number; y: number }
  | { t: number; kind: "pointer_down"; x: number; y: number; source?: PointerSource }
  | { t: number; kind: "pointer_up"; x: number; y: number; source?: PointerSource }
  | { t: number; kind: "key_char"; char: string }
  | { t: number; kind: "key_backspace" };

export type ControlKind = "button" | "text_input" | "checkbox" | "hotspot";

/** [x, y, w, h] in mockup pixels. */
export type BBox = [number, number, number, number];

export interface Control {
  id: string;
  kind: ControlKind;
  bbox: BBox;
  label?: string;
  initial?: string | boolean;
}

export interface Mockup {
  id: string;
  name: string;
  image_ref: string;
  width_px: number;
  height_px: number;
  controls: Control[];
}

export interface TimelineEntry {
  id: string;
  mockup_id: string;
  events: InteractionEvent[];
}

export interface Scenario {
  id: string;
  name: string;
  entries: TimelineEntry[];
}

export interface ProjectDoc {
  schema_version: number;
  asset_dir: string;
  mockups: Mockup[];
  scenarios: Scenario[];
}

export interface ProjectSnapshot {
  revision: number;
  project: ProjectDoc;
}

export interface ExportReport {
  frames: number;
  duration_ms: number;
  bytes: number;
  output: string;
}

export function mockupById(doc: ProjectDoc, id: string): Mockup {
  const m = doc.mockups.find((m) => m.id === id);
  if (!m) throw new Error(`unknown mockup ${id}`);
  return m;
}

export function scenarioById(doc: ProjectDoc, id: string): Scenario {
  const s = doc.scenarios.find((s) => s.id === id);
  if (!s) throw new Error(`unknown scenario ${id}`);
  return s;
}

/** Entry duration: last event time plus the hold dwell (hold alone if empty). */
export function entryDurationMs(entry: TimelineEntry, holdMs = 500): number {
  const last = entry.events.length ? entry.events[entry.events.length - 1].t : 0;
  return last + holdMs;
}

/** Global start time of each entry; spans are contiguous from 0. */
export function entryStartsMs(scenario: Scenario, holdMs = 500): Map<string, number> {
  const starts = new Map<string, number>();
  let t = 0;
  for (const entry of scenario.entries) {
    starts.set(entry.id, t);
    t += entryDurationMs(entry, holdMs);
  }
  return starts;
}

export function scenarioDurationMs(scenario: Scenario, holdMs = 500): number {
  return scenario.entries.reduce((t, e) => t + entryDurationMs(e, holdMs), 0);
}
