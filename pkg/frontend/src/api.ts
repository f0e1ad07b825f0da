// Thin HTTP client for the game service.  Errors carry the server's detail
// message so the page can show exactly why a move was rejected.

import type { CreateSessionResponse, SessionView } from "./view.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class GameClient {
  private readonly fetchFn: FetchLike;

  constructor(
    readonly baseUrl: string,
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  async createSession(
    mode: string,
    q: number,
    rounds: number,
  ): Promise<CreateSessionResponse> {
    return this.request("/sessions", { mode, q, rounds });
  }

  async view(sessionId: string): Promise<SessionView> {
    return this.request(`/sessions/${sessionId}`);
  }

  async bobMove(sessionId: string, slot: number): Promise<SessionView> {
    return this.request(`/sessions/${sessionId}/bob-move`, { slot });
  }

  async aliceMove(sessionId: string, color: number): Promise<SessionView> {
    return this.request(`/sessions/${sessionId}/alice-move`, { color });
  }

  private async request(path: string, body?: unknown): Promise<any> {
    const init: RequestInit =
      body === undefined
        ? { method: "GET" }
        : {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(body),
          };
    const resp = await this.fetchFn(this.baseUrl + path, init);
    if (!resp.ok) {
      throw new ApiError(resp.status, await detailOf(resp));
    }
    return resp.json();
  }
}

async function detailOf(resp: Response): Promise<string> {
  try {
    const parsed = await resp.json();
    if (typeof parsed?.detail === "string") return parsed.detail;
    if (parsed?.detail !== undefined) return JSON.stringify(parsed.detail);
  } catch {
    // fall through to the generic message
  }
  if (resp.status === 409) return "session is busy, try again";
  return `request failed with HTTP ${resp.status}`;
}
