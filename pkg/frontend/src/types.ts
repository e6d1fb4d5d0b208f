/** Shapes of the JSON documents the session service speaks.
 *
 * These mirror the wire format exactly; the client renders them and
 * never derives game facts of its own.
 */

export type Cell = [number, number];

export interface ConfigurationDoc {
  n: number;
  cells: Cell[];
  labeled: boolean;
}

export interface PermutationDoc {
  n: number;
  sigma: number[];
  tau: number[];
}

export interface LegalMoveDoc {
  pivot_anchor: Cell;
  from: Cell;
  to: Cell;
  axes: string[];
  pair: [number, number];
}

export interface MoveRecordDoc {
  pivot_anchor: Cell;
  from: Cell;
  to: Cell;
  axis: string;
  pair: [number, number];
}

export interface SessionStateDoc {
  id: string;
  n: number;
  configuration: ConfigurationDoc;
  permutation: PermutationDoc;
  is_basis: boolean;
  legal_moves: LegalMoveDoc[];
  last_move: MoveRecordDoc | null;
  move_count: number;
}

export interface CreateResponseDoc {
  id: string;
  seed: number | null;
  state: SessionStateDoc;
}

export interface HistoryDoc {
  id: string;
  moves: MoveRecordDoc[];
  move_count: number;
}

export type StartChoice =
  | "line"
  | "random"
  | { cells: Cell[] }
  | { sigma: number[]; tau: number[] };

export function sameCell(a: Cell, b: Cell): boolean {
  return a[0] === b[0] && a[1] === b[1];
}
