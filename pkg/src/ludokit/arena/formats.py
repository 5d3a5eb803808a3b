"""Competition formats: round-robin, elimination, league.

All formats share the three-points-for-a-win scoring and write records
through run_match, so a seeded run is reproducible byte for byte. Agents
are identified by their config name (or spec string), deduplicated with
a #k suffix when the same spec enters twice.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence, Union

from ..agents import FORWARD_MODEL, AgentConfig
from ..engine import GameSpec
from ..engine.state import DRAW, LOSS, WIN
from .clock import LogicalClock, TimeControl
from .match import AgentLike, _as_config, run_match
from .records import FORFEIT, MatchRecord, RecordStore


@dataclass
class StandingRow:
    competitor: str
    played: int = 0
    wins: int = 0
    draws: int = 0
    losses: int = 0

    @property
    def points(self) -> int:
        return 3 * self.wins + self.draws


class Standings:
    """Per-competitor tallies under the three-points rule."""

    def __init__(self):
        self.rows: dict[str, StandingRow] = {}

    def ensure(self, competitor: str) -> StandingRow:
        if competitor not in self.rows:
            self.rows[competitor] = StandingRow(competitor)
        return self.rows[competitor]

    def record(self, a: str, b: str, outcome_a: str,
               outcome_b: Optional[str] = None) -> None:
        if outcome_b is None:
            outcome_b = {WIN: LOSS, LOSS: WIN, DRAW: DRAW}[outcome_a]
        for competitor, outcome in ((a, outcome_a), (b, outcome_b)):
            row = self.ensure(competitor)
            row.played += 1
            if outcome == WIN:
                row.wins += 1
            elif outcome == DRAW:
                row.draws += 1
            else:
                row.losses += 1

    def table(self) -> list[StandingRow]:
        return sorted(self.rows.values(),
                      key=lambda r: (-r.points, -r.wins, r.competitor))

    def points(self, competitor: str) -> int:
        row = self.rows.get(competitor)
        return row.points if row else 0


GameSet = Union[Mapping[str, GameSpec], Sequence[tuple[str, GameSpec]]]


def _game_list(games: GameSet) -> list[tuple[str, GameSpec]]:
    items = list(games.items()) if isinstance(games, Mapping) else list(games)
    if not items:
        raise ValueError("at least one game is required")
    return items


def standings_from_results(results: Iterable[tuple[str, str, str]]) -> Standings:
    """results: (competitor_a, competitor_b, outcome for a) triples."""
    standings = Standings()
    for a, b, outcome_a in results:
        standings.record(a, b, outcome_a)
    return standings


def unique_ids(configs: Sequence[AgentConfig]) -> list[str]:
    ids = []
    seen: dict[str, int] = {}
    for c in configs:
        base = c.name or c.spec_string
        n = seen.get(base, 0)
        seen[base] = n + 1
        ids.append(base if n == 0 else f"{base}#{n + 1}")
    return ids


def _version(competitor: str, spec_string: str, generation: int) -> str:
    key = f"{competitor}:{spec_string}:g{generation}"
    return hashlib.sha1(key.encode()).hexdigest()[:12]


# -- round-robin --------------------------------------------------------


@dataclass
class RoundRobinResult:
    standings: Standings
    records: list[MatchRecord] = field(default_factory=list)


def run_round_robin(games: GameSet, agents: Sequence[AgentLike],
                    repeats: int = 1, regime: str = FORWARD_MODEL,
                    time_control: Optional[TimeControl] = None, seed: int = 0,
                    store: Optional[RecordStore] = None, clock=None,
                    round: Optional[int] = None) -> RoundRobinResult:
    """Every unordered pair plays every game `repeats` times per color."""
    games = _game_list(games)
    configs = [_as_config(a) for a in agents]
    if len(configs) < 2:
        raise ValueError("round-robin needs at least 2 agents")
    ids = unique_ids(configs)
    clock = clock or LogicalClock()
    result = RoundRobinResult(Standings())
    for cid in ids:
        result.standings.ensure(cid)

    k = 0
    for i, j in combinations(range(len(configs)), 2):
        for game_id, spec in games:
            for _rep in range(repeats):
                for a, b in ((i, j), (j, i)):
                    record = run_match(
                        spec, (configs[a], configs[b]), regime,
                        time_control=time_control, seed=seed + k, store=store,
                        clock=clock, game_id=game_id,
                        match_id=f"rr{seed}-{k:05d}",
                        agent_ids=(ids[a], ids[b]), round=round)
                    result.records.append(record)
                    result.standings.record(ids[a], ids[b],
                                            record.result[0], record.result[1])
                    k += 1
    return result


# -- single elimination -------------------------------------------------


@dataclass
class Pairing:
    a: str
    b: str
    winner: str
    records: list[MatchRecord] = field(default_factory=list)


@dataclass
class EliminationResult:
    champion: str
    rounds: list[list[Pairing]] = field(default_factory=list)
    qualifying: Optional[Standings] = None
    records: list[MatchRecord] = field(default_factory=list)


def run_elimination(games: GameSet, agents: Sequence[AgentLike],
                    mini_match: int = 3, bracket_size: Optional[int] = None,
                    regime: str = FORWARD_MODEL,
                    time_control: Optional[TimeControl] = None, seed: int = 0,
                    store: Optional[RecordStore] = None, clock=None) -> EliminationResult:
    """Knockout rounds of odd-length mini-matches; one champion.

    When more agents enter than the bracket holds, a benchmark
    round-robin over the same games picks the qualifiers.
    """
    games = _game_list(games)
    configs = [_as_config(a) for a in agents]
    if len(configs) < 2:
        raise ValueError("elimination needs at least 2 agents")
    if mini_match % 2 == 0:
        raise ValueError("mini-match length must be odd")
    ids = unique_ids(configs)
    by_id = dict(zip(ids, configs))
    clock = clock or LogicalClock()
    result = EliminationResult(champion="")

    if bracket_size is None:
        bracket_size = 1 << (len(configs).bit_length() - 1)
    if bracket_size < 2 or bracket_size & (bracket_size - 1):
        raise ValueError("bracket size must be a power of two, at least 2")

    entrants = list(ids)
    if len(entrants) > bracket_size:
        qualifying = run_round_robin(games, configs, regime=regime,
                                     time_control=time_control, seed=seed,
                                     store=store, clock=clock)
        result.qualifying = qualifying.standings
        result.records.extend(qualifying.records)
        # points first; input order breaks ties
        order = sorted(range(len(entrants)),
                       key=lambda i: (-qualifying.standings.points(entrants[i]), i))
        entrants = [entrants[i] for i in order[:bracket_size]]

    match_seed = seed + 1_000
    round_idx = 0
    while len(entrants) > 1:
        # best remaining seed meets worst remaining seed
        pairs = [(entrants[i], entrants[len(entrants) - 1 - i])
                 for i in range(len(entrants) // 2)]
        this_round: list[Pairing] = []
        survivors: list[str] = []
        for pair_idx, (a, b) in enumerate(pairs):
            wins = {a: 0, b: 0}
            points = {a: 0, b: 0}
            records: list[MatchRecord] = []
            for g in range(mini_match):
                game_id, spec = games[(round_idx * mini_match + g) % len(games)]
                home, away = (a, b) if g % 2 == 0 else (b, a)
                record = run_match(
                    spec, (by_id[home], by_id[away]), regime,
                    time_control=time_control, seed=match_seed, store=store,
                    clock=clock, game_id=game_id,
                    match_id=f"ko{seed}-r{round_idx}-p{pair_idx}-g{g}",
                    agent_ids=(home, away), round=round_idx)
                match_seed += 1
                records.append(record)
                for side, outcome in ((home, record.result[0]),
                                      (away, record.result[1])):
                    if outcome == WIN:
                        wins[side] += 1
                        points[side] += 3
                    elif outcome == DRAW:
                        points[side] += 1
            if (wins[a], points[a]) >= (wins[b], points[b]):
                winner = a  # residual tie falls back to the better seed
            else:
                winner = b
            this_round.append(Pairing(a, b, winner, records))
            result.records.extend(records)
            survivors.append(winner)
        result.rounds.append(this_round)
        entrants = survivors
        round_idx += 1

    result.champion = entrants[0]
    return result


# -- league -------------------------------------------------------------


def league_fixtures(ids: Sequence[str], double: bool = True) -> list[list[tuple[str, str]]]:
    """Circle-method schedule; each round pairs everyone (odd count sits one out)."""
    ring: list[Optional[str]] = list(ids)
    if len(ring) % 2:
        ring.append(None)
    n = len(ring)
    rounds: list[list[tuple[str, str]]] = []
    order = ring[:]
    for r in range(n - 1):
        pairs = []
        for i in range(n // 2):
            a, b = order[i], order[n - 1 - i]
            if a is None or b is None:
                continue
            # alternate colors so nobody is always first player
            pairs.append((a, b) if (r + i) % 2 == 0 else (b, a))
        rounds.append(pairs)
        order = [order[0]] + [order[-1]] + order[1:-1]
    if double:
        rounds += [[(b, a) for a, b in round_pairs] for round_pairs in rounds]
    return rounds


@dataclass
class LeagueRound:
    number: int
    fixtures: list[MatchRecord] = field(default_factory=list)


@dataclass
class LeagueResult:
    standings: Standings
    rounds: list[LeagueRound] = field(default_factory=list)
    records: list[MatchRecord] = field(default_factory=list)


def run_league(games: GameSet, agents: Sequence[AgentLike],
               double: bool = True, regime: str = FORWARD_MODEL,
               time_control: Optional[TimeControl] = None, seed: int = 0,
               store: Optional[RecordStore] = None, clock=None,
               replacements: Optional[dict[int, dict[str, AgentLike]]] = None,
               absences: Optional[set[tuple[int, str]]] = None) -> LeagueResult:
    """Scheduled rounds of round-robin fixtures with agent re-upload.

    `replacements[r][name]` swaps in a new config from round r (1-based),
    bumping that competitor's version hash. `(r, name)` in `absences`
    forfeits that competitor's round-r fixtures.
    """
    games = _game_list(games)
    configs = [_as_config(a) for a in agents]
    if len(configs) < 2:
        raise ValueError("league needs at least 2 agents")
    ids = unique_ids(configs)
    current = dict(zip(ids, configs))
    generation = {cid: 0 for cid in ids}
    replacements = replacements or {}
    absences = absences or set()
    clock = clock or LogicalClock()

    result = LeagueResult(Standings())
    for cid in ids:
        result.standings.ensure(cid)

    schedule = league_fixtures(ids, double=double)
    match_seed = seed
    for round_no, pairs in enumerate(schedule, start=1):
        for name, replacement in (replacements.get(round_no) or {}).items():
            if name not in current:
                raise ValueError(f"replacement for unknown competitor {name!r}")
            current[name] = _as_config(replacement)
            generation[name] += 1
        game_id, spec = games[(round_no - 1) % len(games)]
        this_round = LeagueRound(round_no)
        for a, b in pairs:
            versions = (_version(a, current[a].spec_string, generation[a]),
                        _version(b, current[b].spec_string, generation[b]))
            absent_a = (round_no, a) in absences
            absent_b = (round_no, b) in absences
            if absent_a or absent_b:
                record = _absence_record(spec, game_id, (a, b), regime,
                                         absent_a, absent_b, match_seed, clock,
                                         round_no, versions, store)
            else:
                record = run_match(
                    spec, (current[a], current[b]), regime,
                    time_control=time_control, seed=match_seed, store=store,
                    clock=clock, game_id=game_id,
                    match_id=f"lg{seed}-r{round_no}-{a}-{b}",
                    agent_ids=(a, b), round=round_no, versions=versions)
            match_seed += 1
            this_round.fixtures.append(record)
            result.records.append(record)
            result.standings.record(a, b, record.result[0], record.result[1])
        result.rounds.append(this_round)
    return result


def _absence_record(spec: GameSpec, game_id: str, ids: tuple[str, str], regime: str,
                    absent_a: bool, absent_b: bool, seed: int, clock,
                    round_no: int, versions: tuple[str, str],
                    store: Optional[RecordStore]) -> MatchRecord:
    if absent_a and absent_b:
        result = (LOSS, LOSS)  # double forfeit: nobody gets the win
        reason = "both agents absent"
    elif absent_a:
        result = (LOSS, WIN)
        reason = f"{ids[0]} absent"
    else:
        result = (WIN, LOSS)
        reason = f"{ids[1]} absent"
    started = clock.now()
    record = MatchRecord(
        match_id=f"lg-r{round_no}-{ids[0]}-{ids[1]}-forfeit",
        game_id=game_id, agents=ids, regime=regime, moves=(),
        result=result, rule_index=-1, seed=seed, violations=(0, 0),
        started=started, ended=clock.now(), termination=FORFEIT,
        reason=reason, round=round_no, versions=versions)
    if store is not None:
        store.append(record)
    return record
