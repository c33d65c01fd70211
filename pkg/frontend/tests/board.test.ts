import { describe, expect, it } from "vitest";

import { SessionView } from "../src/api.js";
import { buildBoard } from "../src/board.js";

const P3 = "n 3\ne 0 1\ne 1 2\n";

function view(overrides: Partial<SessionView> = {}): SessionView {
  return {
    id: "abc",
    status: "InProgress",
    k: 2,
    order: [0, 2, 1],
    roles: ["Existential", "Universal", "Existential"],
    human_role: "Universal",
    coloured: [[0, 1]],
    position: 1,
    next_vertex: 2,
    turn: "Universal",
    legal_colours: [2],
    history: [1],
    ...overrides,
  };
}

describe("board view-model", () => {
  it("mirrors the server colouring exactly", () => {
    const board = buildBoard(P3, view());
    const colours = board.vertices.map((v) => v.colour);
    expect(colours).toEqual([1, null, null]);
  });

  it("annotates play order and roles from the session", () => {
    const board = buildBoard(P3, view());
    const byVertex = new Map(board.vertices.map((v) => [v.vertex, v]));
    expect(byVertex.get(0)).toMatchObject({ playOrder: 1, role: "Existential" });
    expect(byVertex.get(2)).toMatchObject({
      playOrder: 2,
      role: "Universal",
      isNext: true,
    });
    expect(byVertex.get(1)).toMatchObject({ playOrder: 3, role: "Existential" });
  });

  it("gates the palette by the server legal-move list only", () => {
    const board = buildBoard(P3, view());
    expect(board.palette).toEqual([
      { colour: 1, enabled: false },
      { colour: 2, enabled: true },
    ]);
  });

  it("disables the whole palette when it is the engine's turn", () => {
    const board = buildBoard(P3, view({ turn: "Existential" }));
    expect(board.humanTurn).toBe(false);
    expect(board.palette.every((p) => !p.enabled)).toBe(true);
  });

  it("shows the outcome banner for finished games", () => {
    const over = view({
      status: "UniversalWon",
      turn: null,
      legal_colours: [],
    });
    const board = buildBoard(P3, over);
    expect(board.outcomeBanner).toMatch(/Universal wins/);
    expect(board.palette.every((p) => !p.enabled)).toBe(true);
    expect(buildBoard(P3, view()).outcomeBanner).toBeNull();
  });

  it("carries list badges from the instance text", () => {
    const listed = "n 2\ne 0 1\nl 0 1,2\nl 1 1,2,3\n";
    const board = buildBoard(
      listed,
      view({ order: [0, 1], roles: ["Existential", "Universal"], k: 3,
             coloured: [], position: 0, next_vertex: 0, history: [],
             legal_colours: [1, 2], turn: "Universal" }),
    );
    expect(board.vertices[0].listBadge).toEqual([1, 2]);
    expect(board.vertices[1].listBadge).toEqual([1, 2, 3]);
  });
});
