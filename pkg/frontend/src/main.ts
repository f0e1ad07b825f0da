// Page wiring: the form starts a session, gap clicks post Bob moves, palette
// clicks post Alice moves.  The board is re-rendered only from views the
// service returned, so a rejected move leaves it untouched.

import { ApiError, GameClient } from "./api.js";
import { validateForm } from "./board.js";
import { renderBoard, renderPalette, renderStatus } from "./render.js";
import type { SessionView } from "./view.js";

function mustGet<T extends Element>(selector: string): T {
  const el = document.querySelector(selector);
  if (el === null) throw new Error(`missing element: ${selector}`);
  return el as T;
}

const form = mustGet<HTMLFormElement>("#new-game");
const modeInput = mustGet<HTMLSelectElement>("#mode");
const qInput = mustGet<HTMLInputElement>("#q");
const roundsInput = mustGet<HTMLInputElement>("#rounds");
const apiInput = mustGet<HTMLInputElement>("#api-base");
const arcsToggle = mustGet<HTMLInputElement>("#arcs");
const statusEl = mustGet<HTMLElement>("#status");
const errorEl = mustGet<HTMLElement>("#error");
const boardEl = mustGet<HTMLElement>("#board");
const paletteEl = mustGet<HTMLElement>("#palette");

let client: GameClient | null = null;
let sessionId: string | null = null;
let view: SessionView | null = null;
let busy = false;

function showError(message: string): void {
  errorEl.textContent = message;
}

function render(): void {
  if (view === null) return;
  statusEl.textContent = renderStatus(view);
  boardEl.innerHTML = renderBoard(view, arcsToggle.checked);
  paletteEl.innerHTML = renderPalette(view);
}

function applyView(next: SessionView): void {
  view = next;
  showError("");
  render();
}

async function perform(action: () => Promise<SessionView>): Promise<void> {
  if (busy) return;
  busy = true;
  try {
    applyView(await action());
  } catch (err) {
    // the board keeps its last confirmed state; only the message changes
    showError(err instanceof ApiError ? err.message : String(err));
  } finally {
    busy = false;
  }
}

form.addEventListener("submit", (event) => {
  event.preventDefault();
  const mode = modeInput.value;
  const q = Number(qInput.value);
  const rounds = Number(roundsInput.value);
  const problem = validateForm(mode, q, rounds);
  if (problem !== null) {
    showError(problem);
    return;
  }
  const base = apiInput.value.trim().replace(/\/$/, "");
  client = new GameClient(base);
  void perform(async () => {
    const created = await client!.createSession(mode, q, rounds);
    sessionId = created.id;
    return created.view;
  });
});

boardEl.addEventListener("click", (event) => {
  const gap = (event.target as Element).closest("[data-slot]");
  if (gap === null || client === null || sessionId === null || view === null) return;
  if (view.mode !== "human-bob" || view.status !== "ongoing") return;
  const slot = Number(gap.getAttribute("data-slot"));
  void perform(() => client!.bobMove(sessionId!, slot));
});

paletteEl.addEventListener("click", (event) => {
  const swatch = (event.target as Element).closest("[data-color]");
  if (swatch === null || client === null || sessionId === null || view === null) return;
  if (view.mode !== "human-alice" || view.status !== "ongoing") return;
  const color = Number(swatch.getAttribute("data-color"));
  void perform(() => client!.aliceMove(sessionId!, color));
});

arcsToggle.addEventListener("change", () => render());
