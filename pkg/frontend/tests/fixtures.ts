/**
 * Scripted service responses for unit tests, frozen from the engine's own
 * oracle output (two-heap game with p = 3, and its pass variant).
 */

import type { GameApi } from "../src/api.js";
import type {
  BestResponse,
  EvalResponse,
  GameDescriptor,
  MovesResponse,
  PositionPayload,
  WirePosition,
} from "../src/types.js";

interface Scripted {
  eval: EvalResponse;
  moves: WirePosition[];
  best: BestResponse;
}

const RYUO_P3: Record<string, Scripted> = {
  "2,2": {
    eval: { grundy: 1, outcome: "N", terminal: false },
    moves: [[0, 2], [1, 1], [1, 2], [2, 0], [2, 1]],
    best: { winning: [[1, 2], [2, 1]], engineMove: [1, 2] },
  },
  "1,1": {
    eval: { grundy: 2, outcome: "N", terminal: false },
    moves: [[0, 0], [0, 1], [1, 0]],
    best: { winning: [[0, 0]], engineMove: [0, 0] },
  },
  "2,1": {
    eval: { grundy: 0, outcome: "P", terminal: false },
    moves: [[0, 1], [1, 0], [1, 1], [2, 0]],
    best: { winning: [], engineMove: [0, 1] },
  },
  "1,2": {
    eval: { grundy: 0, outcome: "P", terminal: false },
    moves: [[0, 1], [0, 2], [1, 0], [1, 1]],
    best: { winning: [], engineMove: [0, 1] },
  },
  "1,0": {
    eval: { grundy: 1, outcome: "N", terminal: false },
    moves: [[0, 0]],
    best: { winning: [[0, 0]], engineMove: [0, 0] },
  },
  "0,1": {
    eval: { grundy: 1, outcome: "N", terminal: false },
    moves: [[0, 0]],
    best: { winning: [[0, 0]], engineMove: [0, 0] },
  },
  "0,0": {
    eval: { grundy: 0, outcome: "P", terminal: true },
    moves: [],
    best: { winning: [], engineMove: null },
  },
};

const PASS_P3: Record<string, Scripted> = {
  "1,1,true": {
    eval: { grundy: null, outcome: "N", terminal: false },
    moves: [[0, 0, true], [0, 1, true], [1, 0, true], [1, 1, false]],
    best: { winning: [[0, 0, true]], engineMove: [0, 0, true] },
  },
  "0,1,true": {
    eval: { grundy: null, outcome: "N", terminal: false },
    moves: [[0, 0, true], [0, 1, false]],
    best: { winning: [[0, 0, true]], engineMove: [0, 0, true] },
  },
  "0,0,true": {
    eval: { grundy: null, outcome: "P", terminal: true },
    moves: [],
    best: { winning: [], engineMove: null },
  },
};

function key(position: PositionPayload): string {
  const parts: string[] = position.coords.map(String);
  if (position.pass !== undefined) parts.push(String(position.pass));
  return parts.join(",");
}

export class FakeApi implements GameApi {
  calls: { method: string; position: string }[] = [];

  private lookup(game: GameDescriptor, position: PositionPayload): Scripted {
    const table = game.variant === "pass-ryuo" ? PASS_P3 : RYUO_P3;
    const scripted = table[key(position)];
    if (!scripted) throw new Error(`no fixture for ${key(position)}`);
    return scripted;
  }

  async evaluate(game: GameDescriptor, position: PositionPayload) {
    this.calls.push({ method: "eval", position: key(position) });
    return this.lookup(game, position).eval;
  }

  async moves(game: GameDescriptor, position: PositionPayload): Promise<MovesResponse> {
    this.calls.push({ method: "moves", position: key(position) });
    return { moves: this.lookup(game, position).moves };
  }

  async best(game: GameDescriptor, position: PositionPayload): Promise<BestResponse> {
    this.calls.push({ method: "best", position: key(position) });
    return this.lookup(game, position).best;
  }

  legalMovesOf(game: GameDescriptor, position: PositionPayload): WirePosition[] {
    return this.lookup(game, position).moves;
  }
}

export const RYUO3: GameDescriptor = { variant: "ryuo", params: { p: 3 } };
export const PASS3: GameDescriptor = { variant: "pass-ryuo", params: { p: 3 } };
