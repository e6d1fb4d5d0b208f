/** Application shell: store, actions, and DOM wiring.
 *
 * The client is deliberately thin. It never fills triangles, never
 * checks legality, never recomputes the permutation. Every user action
 * maps to at most one service request and the screen always shows the
 * last state the service returned, byte for byte.
 */

import { ApiClient, ServiceError } from "./api.js";
import { BoardSelection, axesFor, renderBoard } from "./board.js";
import { renderPlots } from "./plots.js";
import { Cell, MoveRecordDoc, SessionStateDoc, StartChoice, sameCell } from "./types.js";

export interface AppStore {
  sessionId: string | null;
  seed: number | null;
  state: SessionStateDoc | null;
  /** exact response body for the current state, kept verbatim */
  raw: string;
  records: MoveRecordDoc[];
  selection: BoardSelection;
  pending: boolean;
  offline: boolean;
  notice: string | null;
}

export interface AppController {
  store: AppStore;
  /** resolves once no request is in flight; for tests and scripting */
  idle(): Promise<void>;
}

function cellText(cell: Cell): string {
  return `(${cell[0]},${cell[1]})`;
}

export function mountApp(root: HTMLElement, api: ApiClient): AppController {
  root.innerHTML = `
    <div class="app">
      <header class="topbar">
        <h1>staircase solitaire explorer</h1>
        <span id="basis-badge" class="badge" hidden></span>
      </header>
      <div id="offline-banner" class="banner" hidden>
        service unreachable; start a new session to retry
      </div>
      <div id="toast" class="toast" hidden></div>
      <section class="controls">
        <label>size
          <input id="n-input" type="number" min="1" max="12" value="4">
        </label>
        <button id="new-line" type="button">line session</button>
        <button id="new-random" type="button">random basis</button>
        <span id="seed-display" class="seed"></span>
        <button id="undo" type="button">undo</button>
        <button id="copy-state" type="button">copy state</button>
      </section>
      <main class="panes">
        <div id="board" class="board"></div>
        <div id="plots" class="plots"></div>
      </main>
      <section class="history-pane">
        <h2>history</h2>
        <ol id="history"></ol>
      </section>
    </div>`;

  const store: AppStore = {
    sessionId: null,
    seed: null,
    state: null,
    raw: "",
    records: [],
    selection: { from: null, dest: null },
    pending: false,
    offline: false,
    notice: null,
  };

  const el = {
    badge: root.querySelector<HTMLElement>("#basis-badge")!,
    banner: root.querySelector<HTMLElement>("#offline-banner")!,
    toast: root.querySelector<HTMLElement>("#toast")!,
    nInput: root.querySelector<HTMLInputElement>("#n-input")!,
    newLine: root.querySelector<HTMLButtonElement>("#new-line")!,
    newRandom: root.querySelector<HTMLButtonElement>("#new-random")!,
    seed: root.querySelector<HTMLElement>("#seed-display")!,
    undo: root.querySelector<HTMLButtonElement>("#undo")!,
    copy: root.querySelector<HTMLButtonElement>("#copy-state")!,
    board: root.querySelector<HTMLElement>("#board")!,
    plots: root.querySelector<HTMLElement>("#plots")!,
    history: root.querySelector<HTMLOListElement>("#history")!,
  };

  let settled: Promise<void> = Promise.resolve();

  function render(): void {
    const state = store.state;
    el.banner.hidden = !store.offline;
    el.toast.hidden = store.notice === null;
    el.toast.textContent = store.notice ?? "";

    el.badge.hidden = state === null;
    if (state !== null) {
      el.badge.textContent = state.is_basis ? "basis" : "not a basis";
      el.badge.classList.toggle("ok", state.is_basis);
      el.badge.classList.toggle("bad", !state.is_basis);
    }

    el.seed.textContent = store.seed === null ? "" : `seed ${store.seed}`;
    el.newLine.disabled = store.pending;
    el.newRandom.disabled = store.pending;
    el.undo.disabled =
      store.pending || store.offline || state === null || state.move_count === 0;
    el.copy.disabled = state === null;

    if (state !== null) {
      renderBoard(el.board, state, store.selection, store.pending || store.offline, {
        onCellClick: handleCellClick,
        onAxisPick: handleAxisPick,
        onDismiss: () => {
          store.selection = { from: null, dest: null };
          render();
        },
      });
      renderPlots(el.plots, state);
    } else {
      el.board.textContent = "";
      el.plots.textContent = "";
    }

    el.history.textContent = "";
    store.records.forEach((record, index) => {
      const item = document.createElement("li");
      item.textContent =
        `${index + 1}. ${cellText(record.from)} to ${cellText(record.to)}` +
        ` along ${record.axis}`;
      el.history.appendChild(item);
    });
  }

  function toast(message: string): void {
    store.notice = message;
  }

  /** Run one service call with the single-flight guard. */
  function track(task: () => Promise<void>): Promise<void> {
    if (store.pending) return settled;
    store.pending = true;
    store.notice = null;
    render();
    const run = task()
      .catch((err: unknown) => {
        if (err instanceof ServiceError) {
          toast(err.message);
        } else {
          store.offline = true;
        }
      })
      .then(() => {
        store.pending = false;
        render();
      });
    settled = run;
    return run;
  }

  function adoptState(raw: string, state: SessionStateDoc): void {
    store.raw = raw;
    store.state = state;
    store.offline = false;
    store.selection = { from: null, dest: null };
  }

  function newSession(start: StartChoice): Promise<void> {
    return track(async () => {
      const n = Math.min(12, Math.max(1, Number(el.nInput.value) || 4));
      const created = await api.createSession({ n, start });
      store.sessionId = created.id;
      store.seed = start === "random" ? created.seed : null;
      store.records = [];
      const payload = await api.getState(created.id);
      adoptState(payload.raw, payload.state);
    });
  }

  function submitMove(from: Cell, to: Cell, axis: string): void {
    const id = store.sessionId;
    if (id === null) return;
    void track(async () => {
      const payload = await api.move(id, from, to, axis);
      adoptState(payload.raw, payload.state);
      if (payload.state.last_move !== null) {
        store.records.push(payload.state.last_move);
      }
    });
  }

  function handleCellClick(cell: Cell): void {
    const state = store.state;
    if (state === null || store.pending || store.offline) return;
    const from = store.selection.from;
    if (from !== null) {
      const axes = axesFor(state, from, cell);
      if (axes.length === 1) {
        submitMove(from, cell, axes[0]);
        return;
      }
      if (axes.length > 1) {
        store.selection = { from, dest: cell };
        render();
        return;
      }
    }
    const occupied = state.configuration.cells.some((c) => sameCell(c, cell));
    if (occupied && (from === null || !sameCell(from, cell))) {
      store.selection = { from: cell, dest: null };
    } else {
      store.selection = { from: null, dest: null };
    }
    render();
  }

  function handleAxisPick(axis: string): void {
    const { from, dest } = store.selection;
    if (from === null || dest === null) return;
    store.selection = { from: null, dest: null };
    submitMove(from, dest, axis);
  }

  function undo(): void {
    const id = store.sessionId;
    if (id === null) return;
    void track(async () => {
      const payload = await api.undo(id);
      adoptState(payload.raw, payload.state);
      store.records.pop();
    });
  }

  function copyState(): void {
    if (store.raw === "") return;
    const clip = navigator.clipboard;
    if (clip !== undefined) {
      void clip.writeText(store.raw).catch(() => undefined);
    }
    toast("state copied");
    render();
  }

  el.newLine.addEventListener("click", () => void newSession("line"));
  el.newRandom.addEventListener("click", () => void newSession("random"));
  el.undo.addEventListener("click", () => undo());
  el.copy.addEventListener("click", () => copyState());

  render();

  return {
    store,
    idle: async () => {
      let previous: Promise<void>;
      do {
        previous = settled;
        await previous;
      } while (settled !== previous);
    },
  };
}
