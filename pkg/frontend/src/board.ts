/**
 * Board rendering.
 *
 * Two-heap games render as a quarter-board with the goal cell in the upper
 * left, x growing rightward and y downward; the piece sits on the current
 * position and exactly the legal targets are clickable.  Positions beyond
 * the 30x30 view cap, and games with three or more heaps, get a heap-list
 * editor instead.
 */

import type { UiGameState } from "./state.js";
import type { PositionPayload } from "./types.js";
import { samePosition } from "./types.js";

export const BOARD_CAP = 30;
export const MIN_VIEW = 12;

export type HeatmapMode = "off" | "outcome" | "grundy";

export interface HeatmapData {
  mode: HeatmapMode;
  /** Grundy values indexed rows[y][x], straight from the service. */
  rows: number[][];
}

export interface BoardCallbacks {
  onCellClick: (target: PositionPayload) => void;
  onPass: () => void;
  onHeapMove: (coords: number[]) => void;
}

export function fitsBoard(state: UiGameState): boolean {
  return (
    state.current.coords.length === 2 &&
    state.current.coords.every((c) => c <= BOARD_CAP)
  );
}

function heatColor(value: number, max: number): string {
  if (max <= 0) return "hsl(210, 60%, 85%)";
  const hue = 210 - Math.round((value / max) * 180);
  return `hsl(${hue}, 65%, ${78 - Math.round((value / max) * 28)}%)`;
}

function renderGrid(
  root: HTMLElement,
  state: UiGameState,
  heat: HeatmapData | null,
  callbacks: BoardCallbacks,
): void {
  const doc = root.ownerDocument;
  const [px, py] = state.current.coords;
  const historyMax = Math.max(
    ...state.history.flatMap((h) => h.coords), MIN_VIEW);
  const size = Math.min(Math.max(historyMax, px, py), BOARD_CAP) + 1;

  const grid = doc.createElement("div");
  grid.className = "board-grid";
  grid.style.gridTemplateColumns = `repeat(${size}, 1.6em)`;

  const values = heat && heat.mode !== "off" ? heat.rows : null;
  const maxValue = values
    ? Math.max(...values.flatMap((row) => row))
    : 0;

  for (let y = 0; y < size; y++) {
    for (let x = 0; x < size; x++) {
      const cell = doc.createElement("div");
      cell.className = "cell";
      cell.dataset.x = String(x);
      cell.dataset.y = String(y);
      const target: PositionPayload =
        state.current.pass === undefined
          ? { coords: [x, y] }
          : { coords: [x, y], pass: state.current.pass };
      const legal = state.legalTargets.some((t) => samePosition(t, target));
      if (legal) {
        cell.classList.add("target");
        cell.addEventListener("click", () => callbacks.onCellClick(target));
      }
      if (x === px && y === py) {
        cell.classList.add("piece");
        cell.textContent = "●";
      }
      if (values && y < values.length && x < values[y].length) {
        const value = values[y][x];
        if (heat!.mode === "outcome") {
          cell.classList.add(value === 0 ? "p-cell" : "n-cell");
        } else {
          cell.style.backgroundColor = heatColor(value, maxValue);
          if (value === 0) cell.classList.add("p-cell");
        }
        if (!cell.textContent) cell.textContent = String(value);
      }
      grid.appendChild(cell);
    }
  }
  root.appendChild(grid);
}

function renderHeapEditor(
  root: HTMLElement,
  state: UiGameState,
  callbacks: BoardCallbacks,
): void {
  const doc = root.ownerDocument;
  const editor = doc.createElement("div");
  editor.className = "heap-editor";
  const inputs: HTMLInputElement[] = [];
  state.current.coords.forEach((value, index) => {
    const label = doc.createElement("label");
    label.textContent = `heap ${index + 1}`;
    const input = doc.createElement("input");
    input.type = "number";
    input.min = "0";
    input.max = String(value);
    input.value = String(value);
    input.className = "heap-input";
    label.appendChild(input);
    editor.appendChild(label);
    inputs.push(input);
  });
  const button = doc.createElement("button");
  button.textContent = "play move";
  button.className = "heap-move";
  button.addEventListener("click", () => {
    callbacks.onHeapMove(inputs.map((input) => Number(input.value)));
  });
  editor.appendChild(button);
  root.appendChild(editor);
}

export function renderBoard(
  root: HTMLElement,
  state: UiGameState,
  heat: HeatmapData | null,
  callbacks: BoardCallbacks,
): void {
  root.textContent = "";
  const doc = root.ownerDocument;

  if (fitsBoard(state)) {
    renderGrid(root, state, heat, callbacks);
  } else {
    renderHeapEditor(root, state, callbacks);
  }

  if (state.current.pass !== undefined) {
    const passButton = doc.createElement("button");
    passButton.className = "pass-button";
    passButton.textContent = "Pass";
    const passTarget: PositionPayload = {
      coords: [...state.current.coords],
      pass: false,
    };
    const passLegal =
      state.humanToMove &&
      state.legalTargets.some((t) => samePosition(t, passTarget));
    passButton.disabled = !passLegal;
    if (passLegal) {
      passButton.addEventListener("click", () => callbacks.onPass());
    }
    root.appendChild(passButton);
  }
}
