"""Leaderboard: win percentages and Glicko-2 ratings over match records.

Records are audited first when the game specs are available; any record
whose replay does not reproduce its result is quarantined and ignored.
Ratings update per period (the record's round number; records without a
round share period 0), and competitors idle during a period get the RD
inflation step. Draws count as non-wins in the percentage. Humans (ids
starting "human:") share the table with agents unless excluded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from ..engine import GameSpec
from ..engine.state import DRAW, WIN
from .glicko2 import DEFAULT_TAU, Rating, glicko2_update
from .records import MatchRecord, audit

HUMAN_PREFIX = "human:"


@dataclass
class Tally:
    played: int = 0
    wins: int = 0
    draws: int = 0
    losses: int = 0

    def add(self, outcome: str) -> None:
        self.played += 1
        if outcome == WIN:
            self.wins += 1
        elif outcome == DRAW:
            self.draws += 1
        else:
            self.losses += 1

    @property
    def win_pct(self) -> float:
        return 100.0 * self.wins / self.played if self.played else 0.0


@dataclass
class RatingRow:
    competitor: str
    overall: Tally = field(default_factory=Tally)
    per_game: dict[str, Tally] = field(default_factory=dict)
    per_category: dict[str, Tally] = field(default_factory=dict)
    rating: Rating = field(default_factory=Rating)

    @property
    def win_pct(self) -> float:
        return self.overall.win_pct


@dataclass
class Leaderboard:
    rows: list[RatingRow] = field(default_factory=list)
    quarantined: list = field(default_factory=list)  # (record, reason)

    def row(self, competitor: str) -> Optional[RatingRow]:
        for r in self.rows:
            if r.competitor == competitor:
                return r
        return None


def update_leaderboard(records: Iterable[MatchRecord],
                       games: Optional[Mapping[str, GameSpec]] = None,
                       tau: float = DEFAULT_TAU,
                       exclude_humans: bool = False) -> Leaderboard:
    records = list(records)
    board = Leaderboard()
    if games is not None:
        report = audit(records, games)
        board.quarantined = report.failures
        records = report.ok
    if exclude_humans:
        records = [r for r in records
                   if not any(a.startswith(HUMAN_PREFIX) for a in r.agents)]

    rows: dict[str, RatingRow] = {}

    def row(competitor: str) -> RatingRow:
        if competitor not in rows:
            rows[competitor] = RatingRow(competitor)
        return rows[competitor]

    for record in records:
        category = None
        if games is not None and record.game_id in games:
            category = games[record.game_id].board.family
        for seat, competitor in enumerate(record.agents):
            r = row(competitor)
            outcome = record.result[seat]
            r.overall.add(outcome)
            r.per_game.setdefault(record.game_id, Tally()).add(outcome)
            if category is not None:
                r.per_category.setdefault(category, Tally()).add(outcome)

    # Glicko-2 per period; two-player records only (puzzles have no opponent)
    scores = {WIN: 1.0, DRAW: 0.5}
    periods: dict[int, list[MatchRecord]] = {}
    first_period: dict[str, int] = {}
    for record in records:
        if len(record.agents) == 2:
            period = record.round if record.round is not None else 0
            periods.setdefault(period, []).append(record)
            for competitor in record.agents:
                if competitor not in first_period or period < first_period[competitor]:
                    first_period[competitor] = period
    for period in sorted(periods):
        pre = {competitor: rows[competitor].rating for competitor in rows}
        results: dict[str, list[tuple[Rating, float]]] = {}
        for record in periods[period]:
            a, b = record.agents
            results.setdefault(a, []).append((pre[b], scores.get(record.result[0], 0.0)))
            results.setdefault(b, []).append((pre[a], scores.get(record.result[1], 0.0)))
        for competitor, joined in first_period.items():
            if joined > period:
                continue  # idle-period inflation starts once they have played
            rows[competitor].rating = glicko2_update(
                pre[competitor], results.get(competitor, []), tau=tau)

    board.rows = sorted(rows.values(),
                        key=lambda r: (-r.rating.rating, r.rating.rd, r.competitor))
    return board
