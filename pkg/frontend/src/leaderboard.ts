/** Leaderboard table: pure sorting plus a plain-DOM renderer. */

import type { LeaderboardRow } from "./types.js";

export type SortKey =
  | "competitor"
  | "played"
  | "wins"
  | "draws"
  | "losses"
  | "win_pct"
  | "rating"
  | "rd";

export interface SortState {
  key: SortKey;
  descending: boolean;
}

export const DEFAULT_SORT: SortState = { key: "rating", descending: true };

export const COLUMNS: { key: SortKey; title: string }[] = [
  { key: "competitor", title: "competitor" },
  { key: "rating", title: "rating" },
  { key: "rd", title: "rd" },
  { key: "played", title: "played" },
  { key: "wins", title: "wins" },
  { key: "draws", title: "draws" },
  { key: "losses", title: "losses" },
  { key: "win_pct", title: "win %" },
];

/** Click behaviour: a new column starts numeric-descending (strings
 * ascending); clicking the active column flips the direction. */
export function nextSort(current: SortState, key: SortKey): SortState {
  if (current.key === key) {
    return { key, descending: !current.descending };
  }
  return { key, descending: key !== "competitor" };
}

export function sortRows(rows: LeaderboardRow[], sort: SortState): LeaderboardRow[] {
  const indexed = rows.map((row, i) => ({ row, i }));
  indexed.sort((a, b) => {
    const va = a.row[sort.key];
    const vb = b.row[sort.key];
    let cmp: number;
    if (typeof va === "string" && typeof vb === "string") {
      cmp = va < vb ? -1 : va > vb ? 1 : 0;
    } else {
      cmp = (va as number) - (vb as number);
    }
    if (sort.descending) cmp = -cmp;
    return cmp !== 0 ? cmp : a.i - b.i;
  });
  return indexed.map((entry) => entry.row);
}

export function renderLeaderboard(
  container: HTMLElement,
  rows: LeaderboardRow[],
  quarantined: number,
  sort: SortState,
  onSort: (key: SortKey) => void,
): void {
  container.textContent = "";
  const table = document.createElement("table");
  table.className = "leaderboard";
  const head = table.createTHead().insertRow();
  for (const column of COLUMNS) {
    const th = document.createElement("th");
    th.textContent =
      column.key === sort.key ? `${column.title} ${sort.descending ? "▼" : "▲"}` : column.title;
    th.addEventListener("click", () => onSort(column.key));
    head.appendChild(th);
  }
  const body = table.createTBody();
  for (const row of sortRows(rows, sort)) {
    const tr = body.insertRow();
    tr.insertCell().textContent = row.competitor;
    tr.insertCell().textContent = row.rating.toFixed(1);
    tr.insertCell().textContent = row.rd.toFixed(1);
    tr.insertCell().textContent = String(row.played);
    tr.insertCell().textContent = String(row.wins);
    tr.insertCell().textContent = String(row.draws);
    tr.insertCell().textContent = String(row.losses);
    tr.insertCell().textContent = row.win_pct.toFixed(1);
  }
  container.appendChild(table);
  const note = document.createElement("p");
  note.className = "muted";
  note.textContent = rows.length
    ? `${rows.length} competitors, ${quarantined} quarantined records`
    : "no rated matches yet";
  container.appendChild(note);
}
