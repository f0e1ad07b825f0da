import type { PointView, SessionView } from "../src/view.js";

export function pt(num: number, depth: number, color: number): PointView {
  return { num, depth, value: num / 2 ** depth, color };
}

export function makeView(overrides: Partial<SessionView> = {}): SessionView {
  return {
    id: "abc123",
    mode: "human-bob",
    q: 12,
    max_rounds: 8,
    round: 0,
    status: "ongoing",
    points: [],
    legal_slots: [0],
    pending: null,
    witness: null,
    engines: { alice: "coloring", bob: null },
    transcript: {},
    ...overrides,
  };
}
