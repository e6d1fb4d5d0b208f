/** SVG staircase board.
 *
 * Pure rendering: the board draws exactly what the current service
 * state says (cells, marbles, legal destinations) and reports clicks
 * upward. Which click becomes a move request is the store's decision,
 * so no game rule ever lives here.
 */

import { Cell, LegalMoveDoc, SessionStateDoc, sameCell } from "./types.js";

export const CELL_PX = 52;
export const PAD_PX = 14;

export interface BoardSelection {
  from: Cell | null;
  /** set only while the axis popover is open for this destination */
  dest: Cell | null;
}

export interface BoardCallbacks {
  onCellClick(cell: Cell): void;
  onAxisPick(axis: string): void;
  onDismiss(): void;
}

export function movesFrom(state: SessionStateDoc, from: Cell): LegalMoveDoc[] {
  return state.legal_moves.filter((m) => sameCell(m.from, from));
}

/** Every axis the service offers for the slide from -> to, first first. */
export function axesFor(state: SessionStateDoc, from: Cell, to: Cell): string[] {
  const axes: string[] = [];
  for (const move of state.legal_moves) {
    if (!sameCell(move.from, from) || !sameCell(move.to, to)) continue;
    for (const axis of move.axes) {
      if (!axes.includes(axis)) axes.push(axis);
    }
  }
  return axes;
}

function screenX(x: number): number {
  return PAD_PX + x * CELL_PX;
}

function screenY(y: number, n: number): number {
  return PAD_PX + (n - 1 - y) * CELL_PX;
}

const SVG_NS = "http://www.w3.org/2000/svg";

function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

export function renderBoard(
  root: HTMLElement,
  state: SessionStateDoc,
  selection: BoardSelection,
  busy: boolean,
  cb: BoardCallbacks,
): void {
  const n = state.n;
  root.textContent = "";
  root.classList.toggle("busy", busy);

  const side = 2 * PAD_PX + n * CELL_PX;
  const svg = svgElement("svg", {
    viewBox: `0 0 ${side} ${side}`,
    width: String(side),
    height: String(side),
    role: "grid",
  });
  svg.classList.add("board-svg");

  const destinations = selection.from ? movesFrom(state, selection.from) : [];
  const anchorCells = destinations.map((m) => m.pivot_anchor);
  const destCells = destinations.map((m) => m.to);

  for (let y = 0; y < n; y += 1) {
    for (let x = 0; x + y < n; x += 1) {
      const rect = svgElement("rect", {
        x: String(screenX(x)),
        y: String(screenY(y, n)),
        width: String(CELL_PX),
        height: String(CELL_PX),
        "data-x": String(x),
        "data-y": String(y),
      });
      rect.classList.add("cell");
      if (destCells.some((c) => sameCell(c, [x, y]))) rect.classList.add("dest");
      if (anchorCells.some((c) => sameCell(c, [x, y]))) rect.classList.add("anchor");
      rect.addEventListener("click", () => cb.onCellClick([x, y]));
      svg.appendChild(rect);
    }
  }

  state.configuration.cells.forEach((cell, index) => {
    const [x, y] = cell;
    const group = svgElement("g", {
      "data-x": String(x),
      "data-y": String(y),
      "data-label": String(index + 1),
    });
    group.classList.add("marble");
    if (selection.from && sameCell(selection.from, cell)) {
      group.classList.add("selected");
    }
    if (movesFrom(state, cell).length > 0) group.classList.add("mobile");
    const circle = svgElement("circle", {
      cx: String(screenX(x) + CELL_PX / 2),
      cy: String(screenY(y, n) + CELL_PX / 2),
      r: String(CELL_PX * 0.34),
    });
    const text = svgElement("text", {
      x: String(screenX(x) + CELL_PX / 2),
      y: String(screenY(y, n) + CELL_PX / 2),
      "text-anchor": "middle",
      "dominant-baseline": "central",
    });
    text.textContent = String(index + 1);
    group.appendChild(circle);
    group.appendChild(text);
    group.addEventListener("click", (event) => {
      event.stopPropagation();
      cb.onCellClick([x, y]);
    });
    svg.appendChild(group);
  });

  root.appendChild(svg);

  if (selection.from && selection.dest) {
    const axes = axesFor(state, selection.from, selection.dest);
    const popover = document.createElement("div");
    popover.className = "axis-popover";
    popover.style.left = `${screenX(selection.dest[0]) + CELL_PX}px`;
    popover.style.top = `${screenY(selection.dest[1], n)}px`;
    const title = document.createElement("span");
    title.textContent = "swap along";
    popover.appendChild(title);
    axes.forEach((axis, index) => {
      const button = document.createElement("button");
      button.type = "button";
      button.dataset.axis = axis;
      button.textContent = axis;
      if (index === 0) {
        button.classList.add("default");
        button.autofocus = true;
      }
      button.addEventListener("click", () => cb.onAxisPick(axis));
      popover.appendChild(button);
    });
    const dismiss = document.createElement("button");
    dismiss.type = "button";
    dismiss.className = "dismiss";
    dismiss.textContent = "cancel";
    dismiss.addEventListener("click", () => cb.onDismiss());
    popover.appendChild(dismiss);
    root.appendChild(popover);
  }
}
