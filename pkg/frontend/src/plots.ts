/** Dot plots of the two permutation words.
 *
 * One panel per word, position on the horizontal axis and value on the
 * vertical axis, both one-based. The pair of positions exchanged by the
 * most recent slide is ringed in both panels and the axis of that slide
 * is written under the plots.
 */

import { SessionStateDoc } from "./types.js";

const STEP = 34;
const PAD = 20;

const SVG_NS = "http://www.w3.org/2000/svg";

function panel(title: string, word: number[], touched: number[]): SVGSVGElement {
  const n = word.length;
  const side = 2 * PAD + n * STEP;
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${side} ${side + 18}`);
  svg.setAttribute("width", String(side));
  svg.setAttribute("height", String(side + 18));
  svg.classList.add("plot-svg");
  svg.dataset.word = title;

  const caption = document.createElementNS(SVG_NS, "text");
  caption.setAttribute("x", String(side / 2));
  caption.setAttribute("y", "14");
  caption.setAttribute("text-anchor", "middle");
  caption.classList.add("plot-title");
  caption.textContent = title;
  svg.appendChild(caption);

  for (let i = 1; i <= n; i += 1) {
    const cx = PAD + (i - 1) * STEP + STEP / 2;
    const cy = 18 + PAD + (n - word[i - 1]) * STEP + STEP / 2;
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("cx", String(cx));
    dot.setAttribute("cy", String(cy));
    dot.setAttribute("r", "6");
    dot.setAttribute("data-position", String(i));
    dot.setAttribute("data-value", String(word[i - 1]));
    dot.classList.add("dot");
    if (touched.includes(i)) dot.classList.add("touched");
    svg.appendChild(dot);
  }
  return svg;
}

export function renderPlots(root: HTMLElement, state: SessionStateDoc): void {
  root.textContent = "";
  const touched = state.last_move ? state.last_move.pair : [];
  const row = document.createElement("div");
  row.className = "plot-row";
  row.appendChild(panel("sigma", state.permutation.sigma, touched));
  row.appendChild(panel("tau", state.permutation.tau, touched));
  root.appendChild(row);

  const note = document.createElement("p");
  note.className = "plot-note";
  if (state.last_move) {
    const [i, j] = state.last_move.pair;
    note.textContent = `last slide swapped positions ${i} and ${j} along the ${state.last_move.axis} axis`;
  } else {
    note.textContent = "no slides yet";
  }
  root.appendChild(note);
}
