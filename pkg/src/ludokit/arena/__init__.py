"""Competition platform: timed matches, tournament formats, ratings."""

from .clock import LogicalClock, TimeControl, WallClock
from .glicko2 import DEFAULT_TAU, Rating, glicko2_update
from .leaderboard import HUMAN_PREFIX, Leaderboard, RatingRow, Tally, update_leaderboard
from .match import run_match
from .records import (
    CAPPED,
    FORFEIT,
    NATURAL,
    RESIGNATION,
    TERMINATIONS,
    AuditReport,
    MatchRecord,
    RecordStore,
    audit,
    replay_record,
)
from .formats import (
    EliminationResult,
    LeagueResult,
    LeagueRound,
    Pairing,
    RoundRobinResult,
    Standings,
    StandingRow,
    league_fixtures,
    run_elimination,
    run_league,
    run_round_robin,
    standings_from_results,
    unique_ids,
)

__all__ = [
    "AuditReport",
    "CAPPED",
    "DEFAULT_TAU",
    "EliminationResult",
    "FORFEIT",
    "HUMAN_PREFIX",
    "Leaderboard",
    "LeagueResult",
    "LeagueRound",
    "LogicalClock",
    "MatchRecord",
    "NATURAL",
    "Pairing",
    "Rating",
    "RatingRow",
    "RecordStore",
    "RESIGNATION",
    "RoundRobinResult",
    "StandingRow",
    "Standings",
    "Tally",
    "TERMINATIONS",
    "TimeControl",
    "WallClock",
    "audit",
    "glicko2_update",
    "league_fixtures",
    "replay_record",
    "run_elimination",
    "run_league",
    "run_match",
    "run_round_robin",
    "standings_from_results",
    "unique_ids",
    "update_leaderboard",
]
