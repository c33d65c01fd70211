/**
 * Browser wiring: one session per tab, every render follows a server
 * response (no optimistic updates).
 */

import { GameApi, Role } from "./api.js";
import { BoardView, buildBoard } from "./board.js";
import { GameController } from "./game.js";
import { refreshWhatIf, WhatIfView } from "./whatif.js";

const COLOUR_SWATCHES = [
  "#e05252", "#529de0", "#5ec05e", "#d9b23c", "#a06ad0",
  "#d07a3a", "#4cc0b0", "#c05a9a",
];

const DEFAULT_GRAPH = "n 3\ne 0 1\ne 1 2\n";

function swatch(colour: number): string {
  return COLOUR_SWATCHES[(colour - 1) % COLOUR_SWATCHES.length];
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  if (text !== undefined) node.textContent = text;
  return node;
}

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS("http://www.w3.org/2000/svg", tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  return node;
}

function renderBoard(svg: SVGSVGElement, board: BoardView): void {
  svg.replaceChildren();
  const positionOf = new Map(
    board.vertices.map((v) => [v.vertex, v.position]),
  );
  for (const [u, v] of board.edges) {
    const a = positionOf.get(u)!;
    const b = positionOf.get(v)!;
    svg.appendChild(
      svgEl("line", {
        x1: String(a.x), y1: String(a.y),
        x2: String(b.x), y2: String(b.y),
        stroke: "#888", "stroke-width": "0.6",
      }),
    );
  }
  for (const view of board.vertices) {
    const { x, y } = view.position;
    svg.appendChild(
      svgEl("circle", {
        cx: String(x), cy: String(y), r: "4",
        fill: view.colour === null ? "#fff" : swatch(view.colour),
        stroke: view.isNext ? "#000" : "#666",
        "stroke-width": view.isNext ? "1.2" : "0.5",
      }),
    );
    const label = svgEl("text", {
      x: String(x), y: String(y + 1),
      "font-size": "3", "text-anchor": "middle",
    });
    label.textContent = `${view.vertex}`;
    svg.appendChild(label);
    // play-order and role annotation
    const note = svgEl("text", {
      x: String(x), y: String(y - 5.5),
      "font-size": "2.4", "text-anchor": "middle", fill: "#444",
    });
    note.textContent = `#${view.playOrder} ${view.role[0]}`;
    svg.appendChild(note);
    if (view.listBadge !== null) {
      const badge = svgEl("text", {
        x: String(x), y: String(y + 7.5),
        "font-size": "2.4", "text-anchor": "middle", fill: "#246",
      });
      badge.textContent = `{${view.listBadge.join(",")}}`;
      svg.appendChild(badge);
    }
  }
}

function renderWhatIf(panel: HTMLElement, view: WhatIfView): void {
  panel.replaceChildren();
  if (!view.available) {
    panel.appendChild(el("p", { class: "muted" }, view.note ?? ""));
    return;
  }
  if (view.frozen) {
    panel.appendChild(el("p", {}, view.note ?? ""));
    return;
  }
  panel.appendChild(el("p", {}, `Optimal play from here: ${view.winner} wins.`));
  const line = el("p", {}, "Non-losing colours: ");
  if (view.highlighted.length === 0) {
    line.append("none");
  }
  for (const colour of view.highlighted) {
    const chip = el("span", { class: "chip" }, String(colour));
    chip.style.background = swatch(colour);
    line.appendChild(chip);
  }
  panel.appendChild(line);
}

export function mount(root: HTMLElement, baseUrl: string): void {
  const api = new GameApi(baseUrl);
  let controller = new GameController(api);
  let graphText = DEFAULT_GRAPH;

  const importBox = el("textarea", { rows: "6", cols: "32" });
  importBox.value = graphText;
  const kInput = el("input", { type: "number", value: "3", min: "1" });
  const roleSelect = el("select");
  for (const role of ["Existential", "Universal"]) {
    roleSelect.appendChild(el("option", { value: role }, role));
  }
  const startButton = el("button", {}, "Start game");
  const undoButton = el("button", {}, "Undo");
  const banner = el("p", { class: "banner" });
  const turnLine = el("p", {});
  const errorLine = el("p", { class: "error" });
  const paletteBox = el("div", { class: "palette" });
  const whatIfPanel = el("div", { class: "whatif" });
  const svg = svgEl("svg", {
    viewBox: "0 0 100 100", width: "480", height: "480",
  }) as SVGSVGElement;

  root.replaceChildren(
    el("h1", {}, "Sequential colouring game"),
    importBox, el("br"),
    el("label", {}, "colours k: "), kInput,
    el("label", {}, " play as: "), roleSelect,
    startButton, undoButton,
    banner, turnLine, errorLine, paletteBox, svg, whatIfPanel,
  );

  async function render(): Promise<void> {
    const state = controller.state;
    const board = buildBoard(graphText, state);
    renderBoard(svg, board);
    banner.textContent = board.outcomeBanner ?? "";
    turnLine.textContent =
      board.turn === null
        ? ""
        : board.humanTurn
          ? `Your move (${board.turn}).`
          : `Engine to move (${board.turn}).`;
    paletteBox.replaceChildren();
    for (const entry of board.palette) {
      const button = el("button", {}, String(entry.colour));
      button.style.background = swatch(entry.colour);
      button.disabled = !entry.enabled;
      button.addEventListener("click", () => {
        void act(() => controller.playColour(entry.colour));
      });
      paletteBox.appendChild(button);
    }
    renderWhatIf(whatIfPanel, await refreshWhatIf(api, state.id));
  }

  async function act(step: () => Promise<unknown>): Promise<void> {
    errorLine.textContent = "";
    try {
      await step();
    } catch (exc) {
      errorLine.textContent = String(exc);
      return;
    }
    await render();
  }

  startButton.addEventListener("click", () => {
    graphText = importBox.value;
    controller = new GameController(api);
    void act(() =>
      controller.start({
        graph: graphText,
        k: Number(kInput.value),
        human_role: roleSelect.value as Role,
      }),
    );
  });
  undoButton.addEventListener("click", () => {
    void act(() => controller.undo());
  });
}
