/**
 * Application wiring: variant picker, board, engine opponent, heatmap.
 *
 * All game state lives in the browser; the service is consulted per move.
 * With dev checks enabled, heatmap loads cross-check a sample of cells
 * against single-position evaluations (a zero cell must be a P-position).
 */

import { ApiClient, DEFAULT_BASE_URL } from "./api.js";
import type { HeatmapData, HeatmapMode } from "./board.js";
import { BOARD_CAP, MIN_VIEW, fitsBoard, renderBoard } from "./board.js";
import { GameController } from "./state.js";
import type { UiGameState } from "./state.js";
import type { GameDescriptor, PositionPayload, VariantName } from "./types.js";
import { describePosition } from "./types.js";

export interface AppConfig {
  baseUrl?: string;
  devChecks?: boolean;
}

const VARIANT_PARAMS: Record<VariantName, string[]> = {
  "ryuo": ["p"],
  "pass-ryuo": ["p"],
  "restricted-side": ["p", "q"],
  "restricted-hv": ["p", "q", "r"],
  "3dim": [],
  "3dim-modified": [],
  "ndim": ["p", "n"],
};

const PAGE = `
  <h1>dragon-king nim</h1>
  <div class="controls">
    <label>game
      <select id="variant">
        ${Object.keys(VARIANT_PARAMS).map((v) => `<option>${v}</option>`).join("")}
      </select>
    </label>
    <label>p <input id="param-p" type="number" min="1" value="3"></label>
    <label>q <input id="param-q" type="number" min="2" value="4"></label>
    <label>r <input id="param-r" type="number" min="2" value="4"></label>
    <label>n <input id="param-n" type="number" min="2" value="3"></label>
    <label>start <input id="start-coords" value="12, 9"></label>
    <label id="start-pass-label">pass available
      <input id="start-pass" type="checkbox" checked>
    </label>
    <button id="new-game">new game</button>
    <button id="engine-start" disabled>let engine start</button>
    <label>heatmap
      <select id="heatmap-mode">
        <option>off</option>
        <option>outcome</option>
        <option>grundy</option>
      </select>
    </label>
  </div>
  <div id="status">pick a game and start</div>
  <div id="board"></div>
  <ol id="history"></ol>
`;

export class App {
  readonly api: ApiClient;
  readonly controller: GameController;
  private heat: HeatmapData | null = null;
  private heatKey = "";
  private mode: HeatmapMode = "off";

  constructor(private doc: Document, private config: AppConfig = {}) {
    this.api = new ApiClient(config.baseUrl ?? DEFAULT_BASE_URL);
    this.controller = new GameController(this.api);
    const root = doc.createElement("div");
    root.id = "app";
    root.innerHTML = PAGE;
    doc.body.appendChild(root);
    this.controller.onChange(() => {
      void this.refreshHeat().then(() => this.render());
    });
    this.element<HTMLSelectElement>("variant").addEventListener("change",
      () => this.syncForm());
    this.element<HTMLButtonElement>("new-game").addEventListener("click",
      () => void this.newGameFromForm());
    this.element<HTMLButtonElement>("engine-start").addEventListener("click",
      () => void this.controller.engineMoveNow());
    this.element<HTMLSelectElement>("heatmap-mode").addEventListener("change",
      () => void this.setHeatmap());
    this.syncForm();
  }

  element<T extends HTMLElement>(id: string): T {
    const found = this.doc.getElementById(id);
    if (!found) throw new Error(`missing element #${id}`);
    return found as T;
  }

  private formVariant(): VariantName {
    return this.element<HTMLSelectElement>("variant").value as VariantName;
  }

  private syncForm(): void {
    const variant = this.formVariant();
    const wanted = VARIANT_PARAMS[variant];
    for (const name of ["p", "q", "r", "n"]) {
      const input = this.element<HTMLInputElement>(`param-${name}`);
      (input.parentElement as HTMLElement).style.display =
        wanted.includes(name) ? "" : "none";
    }
    this.element<HTMLElement>("start-pass-label").style.display =
      variant === "pass-ryuo" ? "" : "none";
  }

  descriptorFromForm(): GameDescriptor {
    const variant = this.formVariant();
    const params: Record<string, number> = {};
    for (const name of VARIANT_PARAMS[variant]) {
      params[name] = Number(this.element<HTMLInputElement>(`param-${name}`).value);
    }
    return { variant, params };
  }

  startFromForm(): PositionPayload {
    const text = this.element<HTMLInputElement>("start-coords").value;
    const coords = text.split(",").map((part) => Number(part.trim()));
    if (this.formVariant() === "pass-ryuo") {
      return { coords, pass: this.element<HTMLInputElement>("start-pass").checked };
    }
    return { coords };
  }

  async newGameFromForm(): Promise<void> {
    const status = this.element<HTMLElement>("status");
    try {
      await this.controller.newGame(this.descriptorFromForm(), this.startFromForm());
      this.element<HTMLButtonElement>("engine-start").disabled = false;
    } catch (error) {
      status.textContent = `cannot start: ${(error as Error).message}`;
    }
  }

  async setHeatmap(mode?: HeatmapMode): Promise<void> {
    this.mode = mode ??
      (this.element<HTMLSelectElement>("heatmap-mode").value as HeatmapMode);
    if (mode) this.element<HTMLSelectElement>("heatmap-mode").value = this.mode;
    this.heatKey = "";  // force refetch
    if (this.controller.hasGame()) {
      await this.refreshHeat();
      this.render();
    }
  }

  heatmap(): HeatmapData | null {
    return this.heat;
  }

  private async refreshHeat(): Promise<void> {
    if (this.mode === "off" || !this.controller.hasGame()) {
      this.heat = null;
      return;
    }
    const state = this.controller.current();
    if (!fitsBoard(state)) {
      this.heat = null;
      return;
    }
    const size = Math.min(
      Math.max(...state.history.flatMap((h) => h.coords), MIN_VIEW),
      BOARD_CAP);
    const layer = state.current.pass === undefined
      ? undefined
      : state.current.pass ? "pass" : "nopass";
    const key = JSON.stringify([state.descriptor, size, layer]);
    if (key === this.heatKey && this.heat) {
      this.heat = { ...this.heat, mode: this.mode };
      return;
    }
    const table = await this.api.table(state.descriptor, size, layer);
    this.heat = { mode: this.mode, rows: table.rows };
    this.heatKey = key;
    if (this.config.devChecks) {
      await this.checkHeatConsistency(state, table.rows);
    }
  }

  /** Dev-build assertion: zero cells are exactly the P-cells. */
  private async checkHeatConsistency(
    state: UiGameState, rows: number[][],
  ): Promise<void> {
    const size = rows.length;
    const step = Math.max(1, Math.floor(size / 3));
    for (let y = 0; y < size; y += step) {
      for (let x = 0; x < size; x += step) {
        const position: PositionPayload = state.current.pass === undefined
          ? { coords: [x, y] }
          : { coords: [x, y], pass: state.current.pass };
        const verdict = await this.api.evaluate(state.descriptor, position);
        const zero = rows[y][x] === 0;
        if (zero !== (verdict.outcome === "P")) {
          throw new Error(
            `heatmap inconsistency at (${x}, ${y}): value ${rows[y][x]} ` +
            `but outcome ${verdict.outcome}`);
        }
      }
    }
  }

  render(): void {
    const state = this.controller.current();
    renderBoard(this.element<HTMLElement>("board"), state, this.heat, {
      onCellClick: (target) => void this.controller.humanMove(target),
      onPass: () => {
        const passTarget: PositionPayload = {
          coords: [...state.current.coords],
          pass: false,
        };
        void this.controller.humanMove(passTarget);
      },
      onHeapMove: (coords) => void this.controller.humanMove({ coords }),
    });

    const status = this.element<HTMLElement>("status");
    if (state.finished) {
      status.textContent = state.winner === "human"
        ? "you win"
        : state.winner === "engine" ? "engine wins" : "game over";
    } else {
      status.textContent = state.humanToMove
        ? `your move from ${describePosition(state.current)}`
        : "engine thinking";
    }

    const history = this.element<HTMLOListElement>("history");
    history.textContent = "";
    for (const step of state.history) {
      const item = this.doc.createElement("li");
      item.textContent = describePosition(step);
      history.appendChild(item);
    }
  }
}

export function createApp(doc: Document, config: AppConfig = {}): App {
  return new App(doc, config);
}
