/**
 * Board view-model: combines the parsed graph shape, the deterministic
 * layout, and the latest server session view into plain render data.
 *
 * The rendered colouring always equals the server state; the palette is
 * gated by the server's legal-move list, never by local rules.
 */

import { Role, SessionView, Status } from "./api.js";
import { GraphShape, parseGraphText } from "./graphText.js";
import { forceLayout, Point } from "./layout.js";

export interface VertexView {
  vertex: number;
  position: Point;
  colour: number | null;
  /** Allowed colours shown as a badge, or null when the graph has no lists. */
  listBadge: number[] | null;
  /** 1-based index of this vertex in the play order. */
  playOrder: number;
  role: Role;
  isNext: boolean;
}

export interface PaletteEntry {
  colour: number;
  enabled: boolean;
}

export interface BoardView {
  vertices: VertexView[];
  edges: [number, number][];
  /** Whose move it is, or null when the game is over. */
  turn: Role | null;
  humanTurn: boolean;
  status: Status;
  outcomeBanner: string | null;
  palette: PaletteEntry[];
}

export function outcomeBanner(status: Status): string | null {
  switch (status) {
    case "ExistentialWon":
      return "Existential wins: every vertex is coloured.";
    case "UniversalWon":
      return "Universal wins: the colouring cannot be completed.";
    default:
      return null;
  }
}

export function buildBoard(graphText: string, view: SessionView): BoardView {
  const shape: GraphShape = parseGraphText(graphText);
  const points = forceLayout(shape, graphText);
  const colourOf = new Map(view.coloured);
  const orderIndex = new Map(view.order.map((v, i) => [v, i]));
  const humanTurn =
    view.status === "InProgress" && view.turn === view.human_role;

  const vertices: VertexView[] = [];
  for (let v = 0; v < shape.n; v++) {
    const index = orderIndex.get(v)!;
    vertices.push({
      vertex: v,
      position: points[v],
      colour: colourOf.get(v) ?? null,
      listBadge: shape.lists?.get(v) ?? null,
      playOrder: index + 1,
      role: view.roles[index],
      isNext: view.next_vertex === v,
    });
  }
  const palette: PaletteEntry[] = [];
  for (let colour = 1; colour <= view.k; colour++) {
    palette.push({
      colour,
      enabled: humanTurn && view.legal_colours.includes(colour),
    });
  }
  return {
    vertices,
    edges: shape.edges,
    turn: view.turn,
    humanTurn,
    status: view.status,
    outcomeBanner: outcomeBanner(view.status),
    palette,
  };
}
