import { describe, expect, it } from "vitest";

import { ApiClient, type FetchLike } from "../src/api.js";
import { PreviewPlayer } from "../src/player.js";

function pngFetch(status = 200): { fetch: FetchLike; urls: string[] } {
  const urls: string[] = [];
  const fetchImpl: FetchLike = async (url) => {
    urls.push(url);
    return new Response(new Uint8Array([0x89, 0x50, 0x4e, 0x47]), {
      status,
      headers: { "content-type": "image/png" },
    });
  };
  return { fetch: fetchImpl, urls };
}

describe("scrubbing", () => {
  it("fetches the frame at the playhead and clamps into [0, total)", async () => {
    const { fetch, urls } = pngFetch();
    const frames: number[] = [];
    const player = new PreviewPlayer(
      new ApiClient("http://x", fetch),
      "s01",
      2000,
      (_png, t) => frames.push(t),
    );
    await player.scrub(500);
    await player.scrub(99999);
    await player.scrub(-3);
    expect(frames).toEqual([500, 1999, 0]);
    expect(urls[0]).toContain("t_ms=500");
    expect(player.showingPlaceholder).toBe(false);
  });

  it("a failed fetch shows the placeholder but keeps the playhead", async () => {
    const { fetch } = pngFetch(500);
    const errors: string[] = [];
    const player = new PreviewPlayer(
      new ApiClient("http://x", fetch),
      "s01",
      2000,
      () => {
        throw new Error("should not display a frame");
      },
      (msg) => errors.push(msg),
    );
    await player.scrub(700);
    expect(player.showingPlaceholder).toBe(true);
    expect(player.playheadMs).toBe(700);
    expect(errors).toHaveLength(1);
  });

  it("play steps the playhead until the end and stops", async () => {
    const { fetch } = pngFetch();
    const frames: number[] = [];
    const pending: (() => void)[] = [];
    const player = new PreviewPlayer(
      new ApiClient("http://x", fetch),
      "s01",
      100,
      (_png, t) => frames.push(t),
      () => {},
      { fps: 10, schedule: (fn) => pending.push(fn) },
    );
    player.play();
    // drain scheduled steps; each step awaits one frame fetch
    for (let i = 0; i < 10 && (pending.length || player.playing); i++) {
      await new Promise((r) => setTimeout(r, 0));
      pending.splice(0).forEach((fn) => fn());
    }
    await new Promise((r) => setTimeout(r, 0));
    expect(player.playing).toBe(false);
    expect(frames[0]).toBe(0);
    expect(frames[frames.length - 1]).toBe(99);
  });
});
