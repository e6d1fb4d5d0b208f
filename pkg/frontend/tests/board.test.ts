import { beforeEach, describe, expect, it, vi } from "vitest";

import { BoardCallbacks, axesFor, renderBoard } from "../src/board.js";
import { SessionStateDoc } from "../src/types.js";
import { lineState, movedState } from "./fixtures.js";

function callbacks(): BoardCallbacks {
  return { onCellClick: vi.fn(), onAxisPick: vi.fn(), onDismiss: vi.fn() };
}

let root: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = '<div id="board"></div>';
  root = document.getElementById("board")!;
});

describe("axesFor", () => {
  it("collects the axes of every legal move matching from and to", () => {
    const state = lineState();
    expect(axesFor(state, [2, 0], [1, 1])).toEqual(["first"]);
    expect(axesFor(state, [1, 0], [1, 1])).toEqual(["third"]);
    expect(axesFor(state, [1, 0], [0, 1])).toEqual(["first"]);
    expect(axesFor(state, [2, 0], [0, 1])).toEqual([]);
  });

  it("merges axes when the service lists the same slide twice", () => {
    const state = lineState();
    const doubled: SessionStateDoc = {
      ...state,
      legal_moves: [
        ...state.legal_moves,
        { ...state.legal_moves[3], axes: ["second"] },
      ],
    };
    expect(axesFor(doubled, [2, 0], [1, 1])).toEqual(["first", "second"]);
  });
});

describe("renderBoard", () => {
  it("draws the full staircase and one labeled marble per occupied cell", () => {
    renderBoard(root, lineState(), { from: null, dest: null }, false, callbacks());
    expect(root.querySelectorAll("rect.cell")).toHaveLength(6);
    const marbles = root.querySelectorAll("g.marble");
    expect(marbles).toHaveLength(3);
    const labels = Array.from(marbles).map((m) => ({
      x: m.getAttribute("data-x"),
      y: m.getAttribute("data-y"),
      label: m.getAttribute("data-label"),
    }));
    expect(labels).toContainEqual({ x: "2", y: "0", label: "1" });
    expect(labels).toContainEqual({ x: "1", y: "0", label: "2" });
    expect(labels).toContainEqual({ x: "0", y: "0", label: "3" });
  });

  it("places rows bottom up: (0,0) sits below (0,1)", () => {
    renderBoard(root, lineState(), { from: null, dest: null }, false, callbacks());
    const rects = Array.from(root.querySelectorAll("rect.cell"));
    const at = (x: number, y: number) =>
      rects.find(
        (r) => r.getAttribute("data-x") === String(x) && r.getAttribute("data-y") === String(y),
      )!;
    const yOf = (r: Element) => Number(r.getAttribute("y"));
    expect(yOf(at(0, 0))).toBeGreaterThan(yOf(at(0, 1)));
    expect(yOf(at(0, 0))).toBe(yOf(at(2, 0)));
  });

  it("marks destinations and anchors once a marble is selected", () => {
    renderBoard(root, lineState(), { from: [2, 0], dest: null }, false, callbacks());
    const dests = Array.from(root.querySelectorAll("rect.cell.dest"));
    expect(dests).toHaveLength(1);
    expect(dests[0].getAttribute("data-x")).toBe("1");
    expect(dests[0].getAttribute("data-y")).toBe("1");
    const anchors = Array.from(root.querySelectorAll("rect.cell.anchor"));
    expect(anchors).toHaveLength(1);
    expect(anchors[0].getAttribute("data-x")).toBe("1");
    expect(anchors[0].getAttribute("data-y")).toBe("0");
    const selected = root.querySelector("g.marble.selected")!;
    expect(selected.getAttribute("data-x")).toBe("2");
  });

  it("shows no destinations with nothing selected", () => {
    renderBoard(root, lineState(), { from: null, dest: null }, false, callbacks());
    expect(root.querySelectorAll(".dest")).toHaveLength(0);
    expect(root.querySelectorAll(".anchor")).toHaveLength(0);
  });

  it("marks movable marbles so the idle board still shows affordances", () => {
    renderBoard(root, lineState(), { from: null, dest: null }, false, callbacks());
    const mobile = Array.from(root.querySelectorAll("g.marble.mobile")).map((m) => [
      m.getAttribute("data-x"),
      m.getAttribute("data-y"),
    ]);
    expect(mobile).toHaveLength(3);
  });

  it("reports clicks on cells and marbles through the callback", () => {
    const cb = callbacks();
    renderBoard(root, lineState(), { from: null, dest: null }, false, cb);
    const rect = Array.from(root.querySelectorAll("rect.cell")).find(
      (r) => r.getAttribute("data-x") === "0" && r.getAttribute("data-y") === "1",
    )!;
    (rect as SVGRectElement).dispatchEvent(new MouseEvent("click", { bubbles: true }));
    const marble = Array.from(root.querySelectorAll("g.marble")).find(
      (m) => m.getAttribute("data-x") === "2",
    )!;
    (marble as SVGGElement).dispatchEvent(new MouseEvent("click", { bubbles: true }));
    expect(cb.onCellClick).toHaveBeenCalledTimes(2);
    expect(cb.onCellClick).toHaveBeenNthCalledWith(1, [0, 1]);
    expect(cb.onCellClick).toHaveBeenNthCalledWith(2, [2, 0]);
  });

  it("opens the axis popover with one button per axis plus cancel", () => {
    const state = lineState();
    const doubled: SessionStateDoc = {
      ...state,
      legal_moves: [
        ...state.legal_moves,
        { ...state.legal_moves[3], axes: ["second"] },
      ],
    };
    const cb = callbacks();
    renderBoard(root, doubled, { from: [2, 0], dest: [1, 1] }, false, cb);
    const popover = root.querySelector(".axis-popover")!;
    const axisButtons = Array.from(
      popover.querySelectorAll<HTMLButtonElement>("button[data-axis]"),
    );
    expect(axisButtons.map((b) => b.dataset.axis)).toEqual(["first", "second"]);
    expect(axisButtons[0].classList.contains("default")).toBe(true);
    expect(axisButtons[1].classList.contains("default")).toBe(false);
    axisButtons[1].click();
    expect(cb.onAxisPick).toHaveBeenCalledWith("second");
    popover.querySelector<HTMLButtonElement>("button.dismiss")!.click();
    expect(cb.onDismiss).toHaveBeenCalledTimes(1);
  });

  it("renders no popover without a chosen destination", () => {
    renderBoard(root, lineState(), { from: [2, 0], dest: null }, false, callbacks());
    expect(root.querySelector(".axis-popover")).toBeNull();
  });

  it("greys the board out while a request is in flight", () => {
    renderBoard(root, movedState(), { from: null, dest: null }, true, callbacks());
    expect(root.classList.contains("busy")).toBe(true);
    renderBoard(root, movedState(), { from: null, dest: null }, false, callbacks());
    expect(root.classList.contains("busy")).toBe(false);
  });
});
