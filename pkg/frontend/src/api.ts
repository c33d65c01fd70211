/**
 * Typed client for the game session HTTP API.
 *
 * Every rule decision (legality, outcome, analysis) comes from the server;
 * this module only shapes requests and responses.
 */

export type Role = "Existential" | "Universal";
export type Status = "InProgress" | "ExistentialWon" | "UniversalWon";

export interface SessionView {
  id: string;
  status: Status;
  k: number;
  order: number[];
  roles: Role[];
  human_role: Role;
  /** [vertex, colour] pairs in play order. */
  coloured: [number, number][];
  position: number;
  next_vertex: number | null;
  turn: Role | null;
  legal_colours: number[];
  /** Colours in play order; replaying them reproduces the state. */
  history: number[];
}

export interface Analysis {
  winner: Role;
  non_losing_colours: number[];
  turn: Role | null;
  status: Status;
}

export interface CreateSessionRequest {
  graph: string;
  k?: number;
  human_role?: Role;
  order?: number[];
  roles?: Role[];
}

export class ApiError extends Error {
  constructor(readonly status: number, readonly detail: string) {
    super(`${status}: ${detail}`);
  }
}

async function decode<T>(response: Response): Promise<T> {
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const detail =
      typeof body?.detail === "string" ? body.detail : response.statusText;
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

export class GameApi {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  private request(path: string, init?: RequestInit): Promise<Response> {
    return this.fetchImpl(`${this.baseUrl}${path}`, init);
  }

  async createSession(req: CreateSessionRequest): Promise<SessionView> {
    const response = await this.request("/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(req),
    });
    return decode<SessionView>(response);
  }

  async getState(id: string): Promise<SessionView> {
    return decode<SessionView>(await this.request(`/sessions/${id}`));
  }

  async postMove(id: string, colour: number): Promise<SessionView> {
    const response = await this.request(`/sessions/${id}/moves`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ colour }),
    });
    return decode<SessionView>(response);
  }

  async getAnalysis(id: string, timeoutMs?: number): Promise<Analysis> {
    const init: RequestInit = {};
    if (timeoutMs !== undefined) {
      init.signal = AbortSignal.timeout(timeoutMs);
    }
    return decode<Analysis>(await this.request(`/sessions/${id}/analysis`, init));
  }

  async undo(id: string): Promise<SessionView> {
    const response = await this.request(`/sessions/${id}/undo`, {
      method: "POST",
    });
    return decode<SessionView>(response);
  }
}
