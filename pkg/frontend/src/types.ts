/**
 * Wire types for the ryuo-nim HTTP service.
 *
 * Requests carry positions as `{coords, pass?}` objects; responses encode
 * them as flat arrays with the pass flag appended for the pass variant
 * (`[x, y, true]`).
 */

export type VariantName =
  | "ryuo"
  | "pass-ryuo"
  | "restricted-side"
  | "restricted-hv"
  | "3dim"
  | "3dim-modified"
  | "ndim";

export interface GameDescriptor {
  variant: VariantName;
  params: Record<string, number>;
}

export interface PositionPayload {
  coords: number[];
  pass?: boolean;
}

/** Response-side position: coordinates, plus a trailing pass flag. */
export type WirePosition = (number | boolean)[];

export interface VariantInfo {
  variant: string;
  params: string[];
  closedForm: boolean;
  ppositionFormula?: boolean;
  closedFormWhen?: string;
}

export interface EvalResponse {
  grundy: number | null;
  outcome: "P" | "N";
  terminal: boolean;
}

export interface MovesResponse {
  moves: WirePosition[];
}

export interface BestResponse {
  winning: WirePosition[];
  engineMove: WirePosition | null;
}

export interface TableResponse {
  rows: number[][];
}

export function fromWire(wire: WirePosition): PositionPayload {
  const coords: number[] = [];
  let pass: boolean | undefined;
  for (const part of wire) {
    if (typeof part === "boolean") {
      pass = part;
    } else {
      coords.push(part);
    }
  }
  return pass === undefined ? { coords } : { coords, pass };
}

export function samePosition(a: PositionPayload, b: PositionPayload): boolean {
  return (
    a.coords.length === b.coords.length &&
    a.coords.every((c, i) => c === b.coords[i]) &&
    (a.pass ?? null) === (b.pass ?? null)
  );
}

export function isTerminal(pos: PositionPayload): boolean {
  return pos.coords.every((c) => c === 0);
}

export function describePosition(pos: PositionPayload): string {
  const parts: string[] = pos.coords.map(String);
  if (pos.pass !== undefined) parts.push(pos.pass ? "pass" : "no-pass");
  return `(${parts.join(", ")})`;
}
