// Pure board geometry: pixel positions for points, gaps, and arcs computed
// from a service view.  No DOM access, so all of it is unit-testable.

import { adjacent } from "./dyadic.js";
import type { SessionView, WitnessView } from "./view.js";

export interface Arc {
  from: number;
  to: number;
}

export interface GapMarker {
  slot: number;
  x: number;
}

export interface BoardGeometry {
  width: number;
  height: number;
  baseline: number;
  pointXs: number[];
  gaps: GapMarker[];
  pendingX: number | null;
}

export interface WitnessRanges {
  first: [number, number]; // half-open index ranges into the point list
  second: [number, number];
}

// The exact position an insertion at this slot would create: one step past
// an extreme, or the middle of an interior gap.  Matches the referee.
export function slotValue(view: SessionView, slot: number): number {
  const pts = view.points;
  if (pts.length === 0) return 0;
  if (slot === 0) return pts[0].value - 1;
  if (slot === pts.length) return pts[pts.length - 1].value + 1;
  return (pts[slot - 1].value + pts[slot].value) / 2;
}

export function layoutBoard(view: SessionView, width = 900): BoardGeometry {
  const values = view.points.map((p) => p.value);
  if (view.pending !== null) values.push(view.pending.value);
  const lo = (values.length > 0 ? Math.min(...values) : 0) - 1;
  const hi = (values.length > 0 ? Math.max(...values) : 0) + 1;
  const margin = 40;
  const scale = (width - 2 * margin) / (hi - lo);
  const xFor = (v: number) => margin + (v - lo) * scale;
  return {
    width,
    height: 300,
    baseline: 190,
    pointXs: view.points.map((p) => xFor(p.value)),
    gaps: view.legal_slots.map((slot) => ({ slot, x: xFor(slotValue(view, slot)) })),
    pendingX: view.pending === null ? null : xFor(view.pending.value),
  };
}

// Every adjacent pair of the current point set, by point index.
export function arcsOf(points: { num: number; depth: number }[]): Arc[] {
  const arcs: Arc[] = [];
  for (let i = 0; i < points.length; i++) {
    for (let j = i + 1; j < points.length; j++) {
      if (adjacent(points[i], points[j])) arcs.push({ from: i, to: j });
    }
  }
  return arcs;
}

export function witnessRanges(
  witness: WitnessView | null,
  pointCount: number,
): WitnessRanges | null {
  if (witness === null) return null;
  const mid = witness.start + witness.size;
  const end = mid + witness.size;
  if (end > pointCount) return null;
  return { first: [witness.start, mid], second: [mid, end] };
}

export function witnessClass(
  index: number,
  ranges: WitnessRanges | null,
): "witness-first" | "witness-second" | null {
  if (ranges === null) return null;
  if (index >= ranges.first[0] && index < ranges.first[1]) return "witness-first";
  if (index >= ranges.second[0] && index < ranges.second[1]) return "witness-second";
  return null;
}

export function validateForm(mode: string, q: number, rounds: number): string | null {
  if (mode !== "human-bob" && mode !== "human-alice" && mode !== "auto") {
    return "mode must be human-bob, human-alice, or auto";
  }
  if (!Number.isInteger(q) || q < 1 || q > 64) {
    return "colors (q) must be an integer between 1 and 64";
  }
  if (!Number.isInteger(rounds) || rounds < 1 || rounds > 512) {
    return "rounds must be an integer between 1 and 512";
  }
  return null;
}
