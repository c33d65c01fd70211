/**
 * What-if panel model: fetches the game-theoretic analysis of the current
 * position and degrades gracefully when the server cannot answer (instance
 * over the engine's size cap, timeout, network failure).
 */

import { Analysis, GameApi, Role, Status } from "./api.js";

export interface WhatIfView {
  available: boolean;
  /** Winner under optimal play from here, when available. */
  winner: Role | null;
  /** Colours to highlight as non-losing for the mover. */
  highlighted: number[];
  /** Frozen with the outcome once the game is over. */
  frozen: boolean;
  status: Status | null;
  note: string | null;
}

export const UNAVAILABLE: WhatIfView = {
  available: false,
  winner: null,
  highlighted: [],
  frozen: false,
  status: null,
  note: "analysis unavailable for this position",
};

export function fromAnalysis(analysis: Analysis): WhatIfView {
  const over = analysis.status !== "InProgress";
  return {
    available: true,
    winner: analysis.winner,
    highlighted: over ? [] : analysis.non_losing_colours,
    frozen: over,
    status: analysis.status,
    note: over ? `game over: ${analysis.status}` : null,
  };
}

export async function refreshWhatIf(
  api: GameApi,
  sessionId: string,
  timeoutMs = 5000,
): Promise<WhatIfView> {
  try {
    return fromAnalysis(await api.getAnalysis(sessionId, timeoutMs));
  } catch {
    return UNAVAILABLE;
  }
}
