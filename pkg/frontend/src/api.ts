import type {
  ApiError,
  GameStateJson,
  MoveOutcomeJson,
  OverlayJson,
} from "./types.js";

export class RequestFailed extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: ApiError,
  ) {
    super(`${detail.code}: ${detail.message}`);
  }
}

async function parse<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let detail: ApiError = { code: "http_error", message: response.statusText };
  try {
    detail = (await response.json()) as ApiError;
  } catch {
    // non-JSON error body: keep the generic detail
  }
  throw new RequestFailed(response.status, detail);
}

export class ApiClient {
  constructor(private readonly base: string) {}

  async createGame(variant: string, mode: string): Promise<string> {
    const r = await fetch(`${this.base}/games`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ variant, mode }),
    });
    const body = await parse<{ id: string }>(r);
    return body.id;
  }

  async getGame(id: string): Promise<GameStateJson> {
    return parse(await fetch(`${this.base}/games/${id}`));
  }

  async postMove(id: string, x: string, y: string): Promise<MoveOutcomeJson> {
    const r = await fetch(`${this.base}/games/${id}/moves`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ x, y }),
    });
    return parse(r);
  }

  async getOverlay(id: string): Promise<OverlayJson> {
    return parse(await fetch(`${this.base}/games/${id}/overlay`));
  }

  async deleteGame(id: string): Promise<void> {
    await fetch(`${this.base}/games/${id}`, { method: "DELETE" });
  }
}
