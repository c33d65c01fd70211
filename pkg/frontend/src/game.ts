/**
 * Game controller: drives one session through the API, keeps the latest
 * server view, and records a transcript of every UI action together with
 * the state the server returned for it.
 *
 * Replaying a transcript with bare API calls must reproduce the same
 * states (up to the fresh session id) — the controller adds no rules.
 */

import { CreateSessionRequest, GameApi, SessionView } from "./api.js";

export type UiAction =
  | { kind: "create"; request: CreateSessionRequest }
  | { kind: "move"; colour: number }
  | { kind: "undo" };

export interface TranscriptEntry {
  action: UiAction;
  state: SessionView;
}

/** A session view with the per-session id removed, for cross-session
 * comparison. */
export type ComparableState = Omit<SessionView, "id">;

export function comparable(view: SessionView): ComparableState {
  const { id: _id, ...rest } = view;
  return rest;
}

export class GameController {
  private sessionId: string | null = null;
  private latest: SessionView | null = null;
  readonly transcript: TranscriptEntry[] = [];

  constructor(private readonly api: GameApi) {}

  get state(): SessionView {
    if (this.latest === null) throw new Error("no session yet");
    return this.latest;
  }

  private record(action: UiAction, state: SessionView): SessionView {
    this.latest = state;
    this.transcript.push({ action, state });
    return state;
  }

  async start(request: CreateSessionRequest): Promise<SessionView> {
    const state = await this.api.createSession(request);
    this.sessionId = state.id;
    return this.record({ kind: "create", request }, state);
  }

  async playColour(colour: number): Promise<SessionView> {
    if (this.sessionId === null) throw new Error("no session yet");
    const state = await this.api.postMove(this.sessionId, colour);
    return this.record({ kind: "move", colour }, state);
  }

  async undo(): Promise<SessionView> {
    if (this.sessionId === null) throw new Error("no session yet");
    const state = await this.api.undo(this.sessionId);
    return this.record({ kind: "undo" }, state);
  }

  async refresh(): Promise<SessionView> {
    if (this.sessionId === null) throw new Error("no session yet");
    this.latest = await this.api.getState(this.sessionId);
    return this.latest;
  }
}

/**
 * Replay the actions of a transcript against the bare API and return the
 * state after each action, in order.
 */
export async function replayTranscript(
  api: GameApi,
  transcript: readonly TranscriptEntry[],
): Promise<SessionView[]> {
  const states: SessionView[] = [];
  let sessionId: string | null = null;
  for (const { action } of transcript) {
    let state: SessionView;
    switch (action.kind) {
      case "create":
        state = await api.createSession(action.request);
        sessionId = state.id;
        break;
      case "move":
        if (sessionId === null) throw new Error("move before create");
        state = await api.postMove(sessionId, action.colour);
        break;
      case "undo":
        if (sessionId === null) throw new Error("undo before create");
        state = await api.undo(sessionId);
        break;
    }
    states.push(state);
  }
  return states;
}
