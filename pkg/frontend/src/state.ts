/**
 * Game-state machine: one human versus the engine.
 *
 * The controller owns all game state (the service is stateless) and
 * enforces the client-side contract: a move is only ever submitted if it
 * appeared in the last legal-move response, and after every committed
 * human move the engine's reply is requested and applied automatically.
 */

import type { GameApi } from "./api.js";
import type { GameDescriptor, PositionPayload } from "./types.js";
import { fromWire, isTerminal, samePosition } from "./types.js";

export type Winner = "human" | "engine" | null;

export interface UiGameState {
  descriptor: GameDescriptor;
  current: PositionPayload;
  history: PositionPayload[];
  humanToMove: boolean;
  finished: boolean;
  winner: Winner;
  /** Options of `current` per the last legal-move fetch; empty iff finished. */
  legalTargets: PositionPayload[];
}

export type StateListener = (state: UiGameState) => void;

export class GameController {
  private state: UiGameState | null = null;
  private listeners: StateListener[] = [];
  private busy = false;

  constructor(private api: GameApi) {}

  onChange(listener: StateListener): void {
    this.listeners.push(listener);
  }

  current(): UiGameState {
    if (!this.state) throw new Error("no game in progress");
    return this.state;
  }

  hasGame(): boolean {
    return this.state !== null;
  }

  /** Validate the start position with the service and set up the board. */
  async newGame(descriptor: GameDescriptor, start: PositionPayload): Promise<UiGameState> {
    const verdict = await this.api.evaluate(descriptor, start);
    const targets = verdict.terminal ? [] : await this.fetchTargets(descriptor, start);
    this.state = {
      descriptor,
      current: start,
      history: [start],
      humanToMove: !verdict.terminal,
      finished: verdict.terminal,
      winner: null,
      legalTargets: targets,
    };
    this.emit();
    return this.state;
  }

  /**
   * Commit a human move.  Targets not in the last legal-move response are
   * inert: the state is returned unchanged and nothing is sent.
   */
  async humanMove(target: PositionPayload): Promise<UiGameState> {
    const state = this.current();
    if (this.busy || state.finished || !state.humanToMove) return state;
    if (!state.legalTargets.some((t) => samePosition(t, target))) {
      return state;
    }
    this.busy = true;
    try {
      this.apply(target, "human");
      if (!this.state!.finished) {
        await this.engineReply();
      }
    } finally {
      this.busy = false;
    }
    this.emit();
    return this.state!;
  }

  /** Ask the engine to move now (also used by "let engine start"). */
  async engineMoveNow(): Promise<UiGameState> {
    const state = this.current();
    if (state.finished) return state;
    await this.engineReply();
    this.emit();
    return this.state!;
  }

  private async engineReply(): Promise<void> {
    const state = this.current();
    const best = await this.api.best(state.descriptor, state.current);
    if (best.engineMove === null) return;
    this.apply(fromWire(best.engineMove), "engine");
    if (!this.state!.finished) {
      this.state!.legalTargets = await this.fetchTargets(
        this.state!.descriptor, this.state!.current);
      this.state!.humanToMove = true;
    }
  }

  private apply(target: PositionPayload, mover: "human" | "engine"): void {
    const state = this.current();
    const finished = isTerminal(target);
    this.state = {
      ...state,
      current: target,
      history: [...state.history, target],
      humanToMove: false,
      finished,
      winner: finished ? mover : null,
      legalTargets: [],
    };
  }

  private async fetchTargets(
    descriptor: GameDescriptor, pos: PositionPayload,
  ): Promise<PositionPayload[]> {
    const response = await this.api.moves(descriptor, pos);
    return response.moves.map(fromWire);
  }

  private emit(): void {
    if (!this.state) return;
    for (const listener of this.listeners) listener(this.state);
  }
}
