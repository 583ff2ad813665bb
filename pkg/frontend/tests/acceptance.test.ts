/** End-to-end acceptance against a live service process:
 * the scripted record-replay loop and the drag-reorder contract.
 */

import { Buffer } from "node:buffer";
import { PNG } from "pngjs";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, ConflictError } from "../src/api.js";
import { CaptureSession } from "../src/capture.js";
import { PreviewPlayer } from "../src/player.js";
import { TimelineView } from "../src/timeline.js";
import {
  entryStartsMs,
  scenarioById,
  scenarioDurationMs,
  type BBox,
  type Control,
} from "../src/types.js";
import { fakeClock } from "./fakes.js";
import { startWebstoreService, type LiveService } from "./service.js";

let service: LiveService;
let api: ApiClient;

beforeAll(async () => {
  service = await startWebstoreService();
  api = new ApiClient(service.baseUrl);
}, 60000);

afterAll(async () => {
  await service?.stop();
});

interface Decoded {
  width: number;
  height: number;
  data: Buffer;
}

function decode(png: Uint8Array): Decoded {
  return PNG.sync.read(Buffer.from(png)) as Decoded;
}

function regionPixels(img: Decoded, [x, y, w, h]: BBox, inset = 0): Buffer {
  const out: number[] = [];
  for (let yy = y + inset; yy < y + h - inset; yy++) {
    for (let xx = x + inset; xx < x + w - inset; xx++) {
      const i = (yy * img.width + xx) * 4;
      out.push(img.data[i], img.data[i + 1], img.data[i + 2]);
    }
  }
  return Buffer.from(out);
}

function darkFraction(img: Decoded, bbox: BBox, inset = 0): number {
  const px = regionPixels(img, bbox, inset);
  let dark = 0;
  for (let i = 0; i < px.length; i += 3) {
    if (px[i] + px[i + 1] + px[i + 2] < 3 * 128) dark++;
  }
  return dark / (px.length / 3);
}

const center = (b: BBox): [number, number] => [
  b[0] + Math.floor(b[2] / 2),
  b[1] + Math.floor(b[3] / 2),
];

describe("record-replay loop", () => {
  it("a captured click + 3 typed characters replay server-side", async () => {
    let snap = await api.fetchProject();
    const login = snap.project.mockups.find((m) => m.name === "Login")!;
    const field: Control = login.controls.find((c) => c.kind === "text_input")!;
    const button: Control = login.controls.find((c) => c.kind === "button")!;

    // the UI appends a fresh timeline entry for the Login mockup, then records
    const appended = await api.appendEntry("s01", login.id, snap.revision);

    const clock = fakeClock(0);
    const take = new CaptureSession(api, appended.entry_id, { now: clock.now });
    take.start();
    const [fx, fy] = center(field.bbox);
    const [bx, by] = center(button.bbox);
    clock.advance(100);
    take.pointerMove(fx, fy);
    clock.advance(80);
    take.pointerDown(fx, fy); // focus the text input
    clock.advance(80);
    take.pointerUp(fx, fy);
    for (const ch of "abc") {
      clock.advance(120);
      take.keyChar(ch);
    }
    clock.advance(100);
    take.pointerMove(bx, by);
    clock.advance(200);
    take.pointerDown(bx, by); // click the button; last event at t = 1000
    clock.advance(80);
    take.pointerUp(bx, by);
    const { uploaded, revision } = await take.stop(appended.revision, "clear-first");
    expect(uploaded[uploaded.length - 1].t).toBe(1000);

    snap = await api.fetchProject();
    expect(snap.revision).toBe(revision);
    const scenario = scenarioById(snap.project, "s01");
    const entry = scenario.entries[scenario.entries.length - 1];
    expect(entry.id).toBe(appended.entry_id);
    expect(entry.events).toEqual(uploaded);

    const start = entryStartsMs(scenario).get(entry.id)!;
    const initial = decode(await api.fetchFrame("s01", start));
    const atEnd = decode(await api.fetchFrame("s01", start + 1000));

    // typed text renders in the text-input region
    expect(regionPixels(initial, field.bbox, 2).every((v) => v === 255)).toBe(true);
    expect(darkFraction(atEnd, field.bbox, 2)).toBeGreaterThan(0);
    expect(regionPixels(atEnd, field.bbox).equals(regionPixels(initial, field.bbox))).toBe(
      false,
    );

    // at the end time the button still renders pressed: the up at t=1000
    // follows the down at t=920, inside the 100 ms press flash
    expect(darkFraction(initial, button.bbox, 2)).toBeLessThan(0.5);
    expect(darkFraction(atEnd, button.bbox, 2)).toBeGreaterThan(0.5);

    // once the flash has elapsed the button renders unpressed again; compare
    // against the pre-click frame (cursor already parked on the button)
    const beforeClick = decode(await api.fetchFrame("s01", start + 919));
    const afterFlash = decode(await api.fetchFrame("s01", start + 1020));
    expect(darkFraction(beforeClick, button.bbox, 2)).toBeLessThan(0.5);
    expect(
      regionPixels(afterFlash, button.bbox).equals(regionPixels(beforeClick, button.bbox)),
    ).toBe(true);
  }, 60000);
});

describe("drag reorder", () => {
  it("one permutation PUT; sequences unchanged; stale revision conflicts visibly", async () => {
    const before = await api.fetchProject();
    const beforeScenario = scenarioById(before.project, "s01");
    const beforeOrder = beforeScenario.entries.map((e) => e.id);
    const eventsById = new Map(
      beforeScenario.entries.map((e) => [e.id, JSON.stringify(e.events)]),
    );

    let puts = 0;
    const counting = new ApiClient(service.baseUrl, async (url, init) => {
      if (init?.method === "PUT") puts++;
      return fetch(url, init);
    });
    const view = new TimelineView(counting, "s01", before);
    view.beginDrag(2);
    const result = await view.drop(0);
    expect(result).toEqual({ moved: true, conflict: null });
    expect(puts).toBe(1);

    const after = await api.fetchProject();
    const afterScenario = scenarioById(after.project, "s01");
    const expected = [
      beforeOrder[2],
      beforeOrder[0],
      beforeOrder[1],
      ...beforeOrder.slice(3),
    ];
    expect(afterScenario.entries.map((e) => e.id)).toEqual(expected);
    for (const entry of afterScenario.entries) {
      expect(JSON.stringify(entry.events)).toBe(eventsById.get(entry.id));
    }

    // a mutation with the pre-reorder revision is stale: visible conflict,
    // no state change, no retry
    const staleView = new TimelineView(api, "s01", before);
    staleView.beginDrag(0);
    const stale = await staleView.drop(2);
    expect(stale.moved).toBe(false);
    expect(stale.conflict).toBeTruthy();
    expect(staleView.conflictNotice).toBeTruthy();
    // the refetch resynced the view to the server's (reordered) truth
    expect(staleView.cards.map((c) => c.entryId)).toEqual(expected);
    expect(staleView.revision).toBe(after.revision);

    const unchanged = await api.fetchProject();
    expect(unchanged.revision).toBe(after.revision);
    expect(scenarioById(unchanged.project, "s01").entries.map((e) => e.id)).toEqual(
      expected,
    );

    await expect(api.reorderEntries("s01", beforeOrder, before.revision)).rejects.toThrow(
      ConflictError,
    );
  }, 60000);
});

describe("replay preview against the live service", () => {
  it("scrubbing across an entry boundary switches mockups exactly there", async () => {
    const snap = await api.fetchProject();
    const scenario = scenarioById(snap.project, "s01");
    const boundary = entryStartsMs(scenario).get(scenario.entries[1].id)!;

    const frames = new Map<number, Uint8Array>();
    const player = new PreviewPlayer(
      api,
      "s01",
      scenarioDurationMs(scenario),
      (png, t) => frames.set(t, png),
    );
    await player.scrub(boundary - 1);
    await player.scrub(boundary);
    const left = decode(frames.get(boundary - 1)!);
    const right = decode(frames.get(boundary)!);
    expect([left.width, left.height]).toEqual([320, 240]);
    expect(left.data.equals(right.data)).toBe(false); // different mockup shown
  }, 60000);

  it("a frame failure shows the placeholder and keeps the playhead", async () => {
    const player = new PreviewPlayer(
      api,
      "no-such-scenario",
      1000,
      () => {
        throw new Error("should not display a frame");
      },
      () => {},
    );
    await player.scrub(42);
    expect(player.showingPlaceholder).toBe(true);
    expect(player.playheadMs).toBe(42);
  });
});
