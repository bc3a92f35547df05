/** Thin fetch client for the ryuo-nim service. */

import type {
  BestResponse,
  EvalResponse,
  GameDescriptor,
  MovesResponse,
  PositionPayload,
  TableResponse,
  VariantInfo,
} from "./types.js";

export const DEFAULT_BASE_URL = "http://127.0.0.1:8642";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

/** What the game controller needs from the service. */
export interface GameApi {
  evaluate(game: GameDescriptor, position: PositionPayload): Promise<EvalResponse>;
  moves(game: GameDescriptor, position: PositionPayload): Promise<MovesResponse>;
  best(game: GameDescriptor, position: PositionPayload): Promise<BestResponse>;
}

export class ApiClient implements GameApi {
  constructor(private baseUrl: string = DEFAULT_BASE_URL) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, payload.error ?? "request failed");
    }
    return payload as T;
  }

  async variants(): Promise<VariantInfo[]> {
    const response = await fetch(`${this.baseUrl}/api/variants`);
    if (!response.ok) throw new ApiError(response.status, "variants failed");
    return (await response.json()) as VariantInfo[];
  }

  evaluate(game: GameDescriptor, position: PositionPayload): Promise<EvalResponse> {
    return this.post("/api/eval", { game, position });
  }

  moves(game: GameDescriptor, position: PositionPayload): Promise<MovesResponse> {
    return this.post("/api/moves", { game, position });
  }

  best(game: GameDescriptor, position: PositionPayload): Promise<BestResponse> {
    return this.post("/api/best", { game, position });
  }

  table(game: GameDescriptor, max: number, layer?: string): Promise<TableResponse> {
    const body: Record<string, unknown> = { game, max };
    if (layer !== undefined) body.layer = layer;
    return this.post("/api/table", body);
  }
}
