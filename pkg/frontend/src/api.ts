/** Typed client for the play service. HTTP errors carry the service's
 * detail message; transport failures surface with status 0 so the UI can
 * offer a retry instead of guessing at state.
 */

import type {
  CreateSessionRequest,
  GameInfo,
  LeaderboardView,
  SessionView,
} from "./types.js";

export class ApiError extends Error {
  readonly status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(base: string, fetchFn?: FetchLike) {
    this.base = base.replace(/\/+$/, "");
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  async listGames(): Promise<GameInfo[]> {
    const data = await this.request<{ games: GameInfo[] }>("GET", "/games");
    return data.games;
  }

  createSession(request: CreateSessionRequest): Promise<SessionView> {
    return this.request<SessionView>("POST", "/sessions", request);
  }

  getSession(sessionId: string): Promise<SessionView> {
    return this.request<SessionView>("GET", `/sessions/${sessionId}`);
  }

  submitMove(sessionId: string, cell: string): Promise<SessionView> {
    return this.request<SessionView>("POST", `/sessions/${sessionId}/moves`, { cell });
  }

  resign(sessionId: string): Promise<SessionView> {
    return this.request<SessionView>("POST", `/sessions/${sessionId}/resign`);
  }

  leaderboard(excludeHumans = false): Promise<LeaderboardView> {
    const query = excludeHumans ? "?exclude_humans=true" : "";
    return this.request<LeaderboardView>("GET", `/leaderboard${query}`);
  }

  /** ws:// or wss:// address of the live feed for one match. */
  feedUrl(matchId: string): string {
    return `${this.base.replace(/^http/, "ws")}/live/${matchId}`;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    let response: Response;
    try {
      response = await this.fetchFn(`${this.base}${path}`, init);
    } catch (err) {
      throw new ApiError(0, `service unreachable: ${String(err)}`);
    }
    if (!response.ok) {
      throw new ApiError(response.status, await detailOf(response));
    }
    return (await response.json()) as T;
  }
}

async function detailOf(response: Response): Promise<string> {
  try {
    const data = (await response.json()) as { detail?: unknown };
    if (typeof data.detail === "string") return data.detail;
  } catch {
    // non-JSON error body; fall through to the status line
  }
  return `request failed with status ${response.status}`;
}
