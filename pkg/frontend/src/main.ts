/** Page wiring: play, leaderboard, and spectate views over one ApiClient.
 *
 * The server is the only source of truth. Every render follows a
 * confirmed response or feed event; a failed call leaves the board
 * untouched and shows a notice instead.
 */

import { ApiClient, ApiError } from "./api.js";
import { renderBoard } from "./board.js";
import { DEFAULT_SORT, nextSort, renderLeaderboard } from "./leaderboard.js";
import type { SortKey, SortState } from "./leaderboard.js";
import { applyEvent, initialSpectate } from "./spectate.js";
import type { SpectateState } from "./spectate.js";
import type { LeaderboardView, LiveFeedEvent, SessionView } from "./types.js";

const api = new ApiClient(
  new URLSearchParams(window.location.search).get("api") ?? window.location.origin,
);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

// -- notices ----------------------------------------------------------------

const noticeBox = el<HTMLDivElement>("notice");
let noticeTimer: number | undefined;

function showNotice(message: string, retry?: () => void): void {
  window.clearTimeout(noticeTimer);
  noticeBox.textContent = message;
  if (retry) {
    const button = document.createElement("button");
    button.textContent = "retry";
    button.addEventListener("click", () => {
      hideNotice();
      retry();
    });
    noticeBox.appendChild(button);
  } else {
    noticeTimer = window.setTimeout(hideNotice, 4000);
  }
  noticeBox.classList.remove("hidden");
}

function hideNotice(): void {
  noticeBox.classList.add("hidden");
}

function describeError(err: unknown): string {
  return err instanceof ApiError ? err.message : String(err);
}

/** Transport failures get a retry prompt; rejections just get a notice. */
function reportError(err: unknown, retry: () => void): void {
  if (err instanceof ApiError && err.status === 0) {
    showNotice(describeError(err), retry);
  } else {
    showNotice(describeError(err));
  }
}

// -- tabs -------------------------------------------------------------------

const pages = {
  play: el<HTMLElement>("page-play"),
  leaderboard: el<HTMLElement>("page-leaderboard"),
  spectate: el<HTMLElement>("page-spectate"),
};

function activate(which: keyof typeof pages): void {
  for (const [name, page] of Object.entries(pages)) {
    page.classList.toggle("hidden", name !== which);
    el(`tab-${name}`).classList.toggle("active", name === which);
  }
  if (which === "leaderboard") void refreshLeaderboard();
}

el("tab-play").addEventListener("click", () => activate("play"));
el("tab-leaderboard").addEventListener("click", () => activate("leaderboard"));
el("tab-spectate").addEventListener("click", () => activate("spectate"));

// -- play -------------------------------------------------------------------

const boardBox = el<HTMLDivElement>("board");
const banner = el<HTMLDivElement>("banner");
const sessionBar = el<HTMLDivElement>("session-bar");
const moveList = el<HTMLDivElement>("move-list");
let session: SessionView | null = null;
let moveInFlight = false;

async function loadGames(): Promise<void> {
  const select = el<HTMLSelectElement>("game-select");
  try {
    const games = await api.listGames();
    select.textContent = "";
    for (const game of games) {
      const option = document.createElement("option");
      option.value = game.id;
      option.textContent = `${game.name} (${game.family} ${game.side}, ${game.players}p)`;
      select.appendChild(option);
    }
  } catch (err) {
    reportError(err, () => void loadGames());
  }
}

function outcomeBanner(view: SessionView): string {
  if (!view.outcomes) return "game over";
  const mine = view.outcomes[view.human_seat - 1];
  const how = view.termination && view.termination !== "natural" ? ` (${view.termination})` : "";
  if (mine === "Win") return `you win${how}`;
  if (mine === "Loss") return `you lose${how}`;
  return `draw${how}`;
}

function renderSession(): void {
  if (!session) return;
  sessionBar.classList.remove("hidden");
  el("session-id").textContent = session.session_id;
  const yourTurn = !session.terminal && session.mover === session.human_seat;
  el("session-status").textContent = session.terminal
    ? "finished"
    : yourTurn
      ? `your move (${session.handle}, seat ${session.human_seat})`
      : "waiting for opponent";
  banner.classList.toggle("hidden", !session.terminal);
  if (session.terminal) banner.textContent = outcomeBanner(session);
  (el("resign") as HTMLButtonElement).disabled = session.terminal;
  renderBoard(boardBox, {
    family: session.family,
    side: session.side,
    occupancy: session.occupancy,
    legal: session.legal,
    lastMove: session.last_move,
    locked: session.terminal || !yourTurn || moveInFlight,
    onCellClick: (label) => void playMove(label),
  });
  moveList.textContent = session.moves.length ? `moves: ${session.moves.join(" ")}` : "";
}

async function resyncSession(): Promise<void> {
  if (!session) return;
  try {
    session = await api.getSession(session.session_id);
    renderSession();
  } catch (err) {
    reportError(err, () => void resyncSession());
  }
}

async function playMove(label: string): Promise<void> {
  if (!session || moveInFlight) return;
  moveInFlight = true;
  try {
    session = await api.submitMove(session.session_id, label);
    hideNotice();
  } catch (err) {
    if (err instanceof ApiError && err.status === 0) {
      // the move may or may not have landed; re-sync rather than guess
      showNotice(describeError(err), () => void resyncSession());
    } else {
      showNotice(describeError(err));
    }
  } finally {
    moveInFlight = false;
    renderSession();
  }
}

el<HTMLFormElement>("setup").addEventListener("submit", (event) => {
  event.preventDefault();
  void startSession();
});

async function startSession(): Promise<void> {
  const request = {
    game_id: el<HTMLSelectElement>("game-select").value,
    agent: el<HTMLInputElement>("agent").value,
    handle: el<HTMLInputElement>("handle").value,
    human_seat: Number(el<HTMLSelectElement>("seat").value),
  };
  try {
    session = await api.createSession(request);
    hideNotice();
    renderSession();
  } catch (err) {
    reportError(err, () => void startSession());
  }
}

el("resign").addEventListener("click", () => {
  if (!session || session.terminal) return;
  void (async () => {
    try {
      session = await api.resign(session!.session_id);
      renderSession();
    } catch (err) {
      reportError(err, () => void resyncSession());
    }
  })();
});

// -- leaderboard ------------------------------------------------------------

let sort: SortState = DEFAULT_SORT;
let lastBoard: LeaderboardView = { rows: [], quarantined: 0 };

function paintLeaderboard(): void {
  renderLeaderboard(el("leaderboard"), lastBoard.rows, lastBoard.quarantined, sort, onSort);
}

function onSort(key: SortKey): void {
  sort = nextSort(sort, key);
  paintLeaderboard();
}

async function refreshLeaderboard(): Promise<void> {
  try {
    lastBoard = await api.leaderboard(el<HTMLInputElement>("exclude-humans").checked);
    paintLeaderboard();
  } catch (err) {
    reportError(err, () => void refreshLeaderboard());
  }
}

el("refresh-leaderboard").addEventListener("click", () => void refreshLeaderboard());
el("exclude-humans").addEventListener("change", () => void refreshLeaderboard());

// -- spectate ---------------------------------------------------------------

let spectateState: SpectateState = initialSpectate();
let socket: WebSocket | null = null;

function renderSpectate(): void {
  const status = el("spectate-status");
  const spectateBanner = el<HTMLDivElement>("spectate-banner");
  if (!spectateState.ready) {
    status.textContent = "not connected";
    spectateBanner.classList.add("hidden");
    return;
  }
  const players = spectateState.agent
    ? `${spectateState.handle} vs ${spectateState.agent}`
    : spectateState.handle;
  status.textContent =
    `${spectateState.name}: ${players}, ${spectateState.moves.length} moves` +
    (spectateState.terminal ? "" : `, seat ${spectateState.mover} to move`);
  spectateBanner.classList.toggle("hidden", !spectateState.terminal);
  if (spectateState.terminal && spectateState.outcomes) {
    const verdict = spectateState.outcomes
      .map((outcome, seat) => `seat ${seat + 1}: ${outcome}`)
      .join(", ");
    spectateBanner.textContent = spectateState.reason
      ? `${verdict} (${spectateState.reason})`
      : verdict;
  }
  renderBoard(el("spectate-board"), {
    family: spectateState.family,
    side: spectateState.side,
    occupancy: spectateState.occupancy,
    legal: [],
    lastMove: spectateState.lastMove,
    locked: true,
  });
}

el<HTMLFormElement>("spectate-form").addEventListener("submit", (event) => {
  event.preventDefault();
  const matchId = el<HTMLInputElement>("spectate-id").value.trim();
  if (!matchId) return;
  socket?.close();
  spectateState = initialSpectate();
  renderSpectate();
  socket = new WebSocket(api.feedUrl(matchId));
  socket.addEventListener("message", (message) => {
    const data = JSON.parse(message.data as string) as LiveFeedEvent & { error?: string };
    if (data.error) {
      showNotice(data.error);
      return;
    }
    spectateState = applyEvent(spectateState, data);
    renderSpectate();
  });
  socket.addEventListener("close", () => {
    if (spectateState.ready && !spectateState.terminal) {
      showNotice("feed disconnected");
    }
  });
});

// -- boot -------------------------------------------------------------------

activate("play");
void loadGames();
