/** Payload shapes of the play service, mirrored field for field. */

export interface GameInfo {
  id: string;
  name: string;
  players: number;
  family: "hex" | "square";
  side: number;
  cells: number;
}

export interface SessionView {
  session_id: string;
  game_id: string;
  name: string;
  family: "hex" | "square";
  side: number;
  cells: number;
  players: number;
  human_seat: number;
  handle: string;
  agent: string | null;
  occupancy: number[];
  mover: number;
  moves: string[];
  last_move: string | null;
  legal: string[];
  terminal: boolean;
  outcomes: string[] | null;
  rule_index: number;
  resigned: boolean;
  termination: string | null;
}

export interface CreateSessionRequest {
  game_id: string;
  agent?: string;
  human_seat?: number;
  handle?: string;
  seed?: number;
}

export interface TallyView {
  played: number;
  wins: number;
  draws: number;
  losses: number;
  win_pct: number;
}

export interface LeaderboardRow {
  competitor: string;
  played: number;
  wins: number;
  draws: number;
  losses: number;
  win_pct: number;
  rating: number;
  rd: number;
  per_game: Record<string, TallyView>;
  per_category: Record<string, TallyView>;
}

export interface LeaderboardView {
  rows: LeaderboardRow[];
  quarantined: number;
}

export type FeedKind = "snapshot" | "move" | "clock" | "result";

export interface LiveFeedEvent {
  match_id: string;
  kind: FeedKind;
  seq: number;
  payload: Record<string, unknown>;
}

export interface MovePayload {
  seat: number;
  label: string;
  cell: number;
  move_number: number;
}

export interface ResultPayload {
  outcomes: string[];
  rule_index: number;
  termination: string;
  reason: string;
}
