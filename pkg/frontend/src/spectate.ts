/** Live-feed reducer for spectating.
 *
 * The socket delivers one snapshot, then events in sequence order. The
 * reducer applies them strictly by seq: stale or repeated events are
 * dropped, and nothing is shown that the service did not send.
 */

import type { LiveFeedEvent, MovePayload, ResultPayload, SessionView } from "./types.js";

export interface SpectateState {
  ready: boolean;
  seq: number;
  name: string;
  family: "hex" | "square";
  side: number;
  players: number;
  handle: string;
  agent: string | null;
  occupancy: number[];
  moves: string[];
  lastMove: string | null;
  mover: number;
  terminal: boolean;
  outcomes: string[] | null;
  termination: string | null;
  reason: string;
  lastSpentMs: number | null;
}

export function initialSpectate(): SpectateState {
  return {
    ready: false,
    seq: -1,
    name: "",
    family: "hex",
    side: 0,
    players: 2,
    handle: "",
    agent: null,
    occupancy: [],
    moves: [],
    lastMove: null,
    mover: 1,
    terminal: false,
    outcomes: null,
    termination: null,
    reason: "",
    lastSpentMs: null,
  };
}

export function applyEvent(state: SpectateState, event: LiveFeedEvent): SpectateState {
  if (event.kind === "snapshot") {
    const view = event.payload as unknown as SessionView;
    return {
      ready: true,
      seq: event.seq,
      name: view.name,
      family: view.family,
      side: view.side,
      players: view.players,
      handle: view.handle,
      agent: view.agent,
      occupancy: [...view.occupancy],
      moves: [...view.moves],
      lastMove: view.last_move,
      mover: view.mover,
      terminal: view.terminal,
      outcomes: view.outcomes ? [...view.outcomes] : null,
      termination: view.termination,
      reason: "",
      lastSpentMs: null,
    };
  }
  if (!state.ready || event.seq <= state.seq) {
    return state;
  }
  if (event.kind === "move") {
    const move = event.payload as unknown as MovePayload;
    const occupancy = [...state.occupancy];
    occupancy[move.cell] = move.seat;
    return {
      ...state,
      seq: event.seq,
      occupancy,
      moves: [...state.moves, move.label],
      lastMove: move.label,
      mover: (move.seat % state.players) + 1,
    };
  }
  if (event.kind === "clock") {
    const spent = event.payload["spent_ms"];
    return { ...state, seq: event.seq, lastSpentMs: typeof spent === "number" ? spent : null };
  }
  if (event.kind === "result") {
    const result = event.payload as unknown as ResultPayload;
    return {
      ...state,
      seq: event.seq,
      terminal: true,
      outcomes: [...result.outcomes],
      termination: result.termination,
      reason: result.reason,
    };
  }
  return { ...state, seq: event.seq };
}
