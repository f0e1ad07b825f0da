// Markup builders: a service view in, HTML/SVG strings out.  Pure functions
// so rendering is deterministic and testable without a browser.

import { arcsOf, layoutBoard, witnessClass, witnessRanges } from "./board.js";
import { formatDyadic } from "./dyadic.js";
import type { SessionView } from "./view.js";

// One distinguishable swatch per symbol; indexes past the palette wrap but
// keep their numeric label.
export const PALETTE = [
  "#4269d0",
  "#efb118",
  "#ff725c",
  "#6cc5b0",
  "#3ca951",
  "#ff8ab7",
  "#a463f2",
  "#97bbf5",
  "#9c6b4e",
  "#636363",
  "#c51d7d",
  "#17becf",
];

export function colorOf(symbol: number): string {
  return PALETTE[symbol % PALETTE.length];
}

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderBoard(view: SessionView, showArcs: boolean, width = 900): string {
  const geo = layoutBoard(view, width);
  const y = geo.baseline;
  const parts: string[] = [];
  parts.push(
    `<line class="axis" x1="10" y1="${y}" x2="${geo.width - 10}" y2="${y}"/>`,
  );

  if (showArcs) {
    for (const arc of arcsOf(view.points)) {
      const xa = geo.pointXs[arc.from];
      const xb = geo.pointXs[arc.to];
      const left = Math.min(xa, xb);
      const right = Math.max(xa, xb);
      const r = (right - left) / 2;
      parts.push(
        `<path class="arc" d="M ${left} ${y} A ${r} ${r} 0 0 1 ${right} ${y}"/>`,
      );
    }
  }

  const ranges = witnessRanges(view.witness, view.points.length);
  if (ranges !== null) {
    for (const [cls, [from, to]] of [
      ["witness-first", ranges.first],
      ["witness-second", ranges.second],
    ] as const) {
      const xa = geo.pointXs[from] - 12;
      const xb = geo.pointXs[to - 1] + 12;
      parts.push(
        `<rect class="witness-band ${cls}" x="${xa}" y="${y + 26}" ` +
          `width="${xb - xa}" height="7" rx="3"/>`,
      );
    }
  }

  view.points.forEach((p, i) => {
    const x = geo.pointXs[i];
    const ring = witnessClass(i, ranges);
    const radius = Math.max(9, 15 - p.depth);
    parts.push(`<g class="point${ring === null ? "" : ` ${ring}`}">`);
    parts.push(
      `<circle cx="${x}" cy="${y}" r="${radius}" fill="${colorOf(p.color)}"/>`,
    );
    parts.push(
      `<text class="symbol" x="${x}" y="${y + 4}">${p.color}</text>`,
    );
    parts.push(
      `<text class="pos-label" x="${x}" y="${y + 48}">${esc(formatDyadic(p))}</text>`,
    );
    parts.push("</g>");
  });

  if (geo.pendingX !== null && view.pending !== null) {
    parts.push(
      `<g class="pending"><circle cx="${geo.pendingX}" cy="${y}" r="14"/>` +
        `<text class="symbol" x="${geo.pendingX}" y="${y + 4}">?</text>` +
        `<text class="pos-label" x="${geo.pendingX}" y="${y + 48}">` +
        `${esc(formatDyadic(view.pending))}</text></g>`,
    );
  }

  for (const gap of geo.gaps) {
    parts.push(
      `<g class="gap" data-slot="${gap.slot}">` +
        `<circle cx="${gap.x}" cy="${y}" r="11"/>` +
        `<text x="${gap.x}" y="${y + 4}">+</text></g>`,
    );
  }

  return (
    `<svg viewBox="0 0 ${geo.width} ${geo.height}" ` +
    `preserveAspectRatio="xMidYMid meet">${parts.join("")}</svg>`
  );
}

export function renderPalette(view: SessionView): string {
  if (view.mode !== "human-alice") return "";
  const active = view.status === "ongoing" && view.pending !== null;
  const buttons: string[] = [];
  for (let c = 0; c < view.q; c++) {
    buttons.push(
      `<button class="swatch" data-color="${c}"${active ? "" : " disabled"} ` +
        `style="background:${colorOf(c)}">${c}</button>`,
    );
  }
  return buttons.join("");
}

export function renderStatus(view: SessionView): string {
  const sides = [
    view.engines.bob === null ? "Bob: you" : `Bob: engine (${esc(view.engines.bob)})`,
    view.engines.alice === null
      ? "Alice: you"
      : `Alice: engine (${esc(view.engines.alice)})`,
  ];
  const bits = [
    `round ${view.round}/${view.max_rounds}`,
    `q=${view.q}`,
    sides.join(", "),
  ];
  if (view.status === "ongoing") {
    if (view.pending !== null) {
      bits.push(`pending position ${esc(formatDyadic(view.pending))}, pick a color`);
    } else if (view.legal_slots.length > 0) {
      bits.push("pick an insertion gap");
    } else {
      bits.push("round budget reached, no repetition: Alice survives");
    }
  } else if (view.status === "ended" && view.witness !== null) {
    const w = view.witness;
    bits.push(
      `repetition: block of size ${w.size} doubled at index ${w.start}, Bob wins`,
    );
  } else if (view.status === "forfeit") {
    bits.push("forfeit");
  }
  return bits.join(" · ");
}
