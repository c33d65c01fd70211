/**
 * Reader for the line-oriented graph text format used for instance import:
 * `n <count>` then `e u v` edge lines and optional `l v 1,2` list lines.
 *
 * Parsed structure is used only for drawing (vertex dots, edges, list
 * badges); all game rules stay on the server, which parses the same bytes
 * authoritatively.
 */

export interface GraphShape {
  n: number;
  edges: [number, number][];
  lists: Map<number, number[]> | null;
}

export class GraphTextError extends Error {}

function int(token: string, line: number): number {
  if (!/^\d+$/.test(token)) {
    throw new GraphTextError(`line ${line}: expected an integer, got ${token!}`);
  }
  return Number(token);
}

export function parseGraphText(text: string): GraphShape {
  let n: number | null = null;
  const edges: [number, number][] = [];
  const lists = new Map<number, number[]>();
  const lines = text.split("\n");
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i].trim();
    if (line === "" || line.startsWith("#")) continue;
    const fields = line.split(/\s+/);
    const lineNo = i + 1;
    if (fields[0] === "n" && fields.length === 2) {
      n = int(fields[1], lineNo);
    } else if (fields[0] === "e" && fields.length === 3) {
      if (n === null) throw new GraphTextError("missing n line");
      edges.push([int(fields[1], lineNo), int(fields[2], lineNo)]);
    } else if (fields[0] === "l" && fields.length === 3) {
      if (n === null) throw new GraphTextError("missing n line");
      const v = int(fields[1], lineNo);
      lists.set(v, fields[2].split(",").map((c) => int(c, lineNo)));
    } else {
      throw new GraphTextError(`line ${lineNo}: unrecognised line ${line!}`);
    }
  }
  if (n === null) throw new GraphTextError("missing n line");
  for (const [u, v] of edges) {
    if (u >= n || v >= n) {
      throw new GraphTextError(`edge ${u} ${v} exceeds vertex count ${n}`);
    }
  }
  return { n, edges, lists: lists.size > 0 ? lists : null };
}
