import { describe, expect, it } from "vitest";

import { PALETTE, renderBoard, renderPalette, renderStatus } from "../src/render.js";
import { makeView, pt } from "./helpers.js";

function count(haystack: string, needle: string): number {
  return haystack.split(needle).length - 1;
}

describe("board markup", () => {
  it("is a pure function of the view", () => {
    const view = makeView({ points: [pt(0, 0, 3)], legal_slots: [0, 1], round: 1 });
    expect(renderBoard(view, true)).toBe(renderBoard(view, true));
  });

  it("renders one clickable marker per legal slot", () => {
    const view = makeView({
      points: [pt(0, 0, 0), pt(1, 0, 1)],
      legal_slots: [0, 1, 2],
      round: 2,
    });
    const svg = renderBoard(view, false);
    expect(count(svg, "data-slot=")).toBe(3);
    for (const slot of [0, 1, 2]) expect(svg).toContain(`data-slot="${slot}"`);
    const ended = renderBoard(makeView({ points: view.points, legal_slots: [] }), false);
    expect(count(ended, "data-slot=")).toBe(0);
  });

  it("draws adjacency arcs only when toggled on", () => {
    const view = makeView({
      points: [pt(0, 0, 0), pt(1, 1, 1), pt(1, 0, 2)],
      legal_slots: [],
      round: 3,
    });
    expect(count(renderBoard(view, true), '<path class="arc"')).toBe(3);
    expect(count(renderBoard(view, false), '<path class="arc"')).toBe(0);
  });

  it("highlights both halves of the repeated block", () => {
    const view = makeView({
      status: "ended",
      round: 5,
      points: [pt(0, 0, 0), pt(1, 2, 1), pt(1, 1, 2), pt(3, 2, 1), pt(1, 0, 2)],
      legal_slots: [],
      witness: { start: 1, size: 2 },
    });
    const svg = renderBoard(view, false);
    expect(count(svg, "witness-band witness-first")).toBe(1);
    expect(count(svg, "witness-band witness-second")).toBe(1);
    expect(count(svg, 'class="point witness-first"')).toBe(2);
    expect(count(svg, 'class="point witness-second"')).toBe(2);
    expect(count(svg, 'class="point"')).toBe(1);
  });

  it("shows the pending position as a placeholder", () => {
    const view = makeView({
      mode: "human-alice",
      legal_slots: [],
      pending: { num: 0, depth: 0, value: 0, slot: 0 },
    });
    const svg = renderBoard(view, false);
    expect(svg).toContain('class="pending"');
    expect(svg).toContain(">?</text>");
  });
});

describe("palette markup", () => {
  it("offers exactly q swatches to a human Alice with a pending point", () => {
    const view = makeView({
      mode: "human-alice",
      q: 3,
      legal_slots: [],
      pending: { num: 0, depth: 0, value: 0, slot: 0 },
      engines: { alice: null, bob: "solver" },
    });
    const html = renderPalette(view);
    expect(count(html, "<button")).toBe(3);
    for (const c of [0, 1, 2]) expect(html).toContain(`data-color="${c}"`);
    expect(html).not.toContain("disabled");
  });

  it("disables swatches once the game is over", () => {
    const view = makeView({
      mode: "human-alice",
      q: 3,
      status: "ended",
      legal_slots: [],
      witness: { start: 0, size: 1 },
    });
    expect(count(renderPalette(view), "disabled")).toBe(3);
  });

  it("renders nothing when the engine plays Alice", () => {
    expect(renderPalette(makeView())).toBe("");
  });

  it("has twelve distinct colors", () => {
    expect(new Set(PALETTE).size).toBe(12);
  });
});

describe("status line", () => {
  it("describes a human-Bob turn", () => {
    const text = renderStatus(makeView({ round: 2, points: [pt(0, 0, 0)], legal_slots: [0, 1] }));
    expect(text).toContain("round 2/8");
    expect(text).toContain("Bob: you");
    expect(text).toContain("Alice: engine (coloring)");
    expect(text).toContain("pick an insertion gap");
  });

  it("describes the ending witness", () => {
    const text = renderStatus(
      makeView({
        status: "ended",
        round: 4,
        legal_slots: [],
        witness: { start: 1, size: 2 },
      }),
    );
    expect(text).toContain("block of size 2 doubled at index 1");
  });

  it("announces survival at the round budget", () => {
    const text = renderStatus(makeView({ round: 8, legal_slots: [] }));
    expect(text).toContain("Alice survives");
  });
});
