// Shapes of the JSON views the game service returns.  The board is rendered
// from these verbatim; the client never derives game state on its own.

export interface PointView {
  num: number;
  depth: number;
  value: number;
  color: number;
}

export interface PendingView {
  num: number;
  depth: number;
  value: number;
  slot: number;
}

export interface WitnessView {
  start: number;
  size: number;
}

export interface EngineLabels {
  alice: string | null;
  bob: string | null;
}

export type GameMode = "human-bob" | "human-alice" | "auto";
export type GameStatus = "ongoing" | "ended" | "forfeit";

export interface SessionView {
  id: string;
  mode: GameMode;
  q: number;
  max_rounds: number;
  round: number;
  status: GameStatus;
  points: PointView[];
  legal_slots: number[];
  pending: PendingView | null;
  witness: WitnessView | null;
  engines: EngineLabels;
  transcript: unknown;
}

export interface CreateSessionResponse {
  id: string;
  view: SessionView;
}
