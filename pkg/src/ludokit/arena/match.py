"""Single match execution with clock enforcement.

Agents run in a worker thread per move so a stuck agent cannot hang the
match: past the allowance the arena substitutes a seeded random legal
move and records a violation; the third violation forfeits the match
(the substitute is still played first, and the forfeit takes precedence
over anything that move completed on the board). A crashing agent or an
illegal returned move forfeits immediately.
"""

from __future__ import annotations

import hashlib
import random
import threading
from typing import Optional, Sequence, Union

from ..agents import Agent, AgentConfig, Budget, make_observation, parse_agent
from ..engine import GameSpec, Move, apply_move, initial_state, status
from ..engine.state import DRAW, LOSS, WIN
from ..engine.simulate import DEFAULT_MOVE_CAP
from .clock import LogicalClock, TimeControl
from .records import CAPPED, FORFEIT, NATURAL, MatchRecord, RecordStore

# generous ceiling used when no wall-clock control is requested
_UNTIMED_MS = 3_600_000
_TIMEOUT_SLACK = 1.5

AgentLike = Union[AgentConfig, str, Agent]


def _as_config(agent: Union[AgentConfig, str]) -> AgentConfig:
    return parse_agent(agent) if isinstance(agent, str) else agent


def _derive_seed(match_seed: int, config_seed: int, seat: int) -> int:
    return (match_seed * 1_000_003 + config_seed * 97 + seat) & 0x7FFFFFFF


def _timed_select(agent: Agent, obs, budget: Budget,
                  timeout_s: Optional[float]):
    """Returns (move, error): error is "timeout" or an exception message."""
    if timeout_s is None:
        try:
            return agent.select_move(obs, budget), None
        except Exception as e:
            return None, f"crash: {e}"
    box: dict = {}

    def work():
        try:
            box["move"] = agent.select_move(obs, budget)
        except Exception as e:
            box["error"] = f"crash: {e}"

    worker = threading.Thread(target=work, daemon=True)
    worker.start()
    worker.join(timeout_s)
    if worker.is_alive():
        return None, "timeout"
    if "error" in box:
        return None, box["error"]
    return box.get("move"), None


def run_match(spec: GameSpec, agents: Sequence[AgentLike], regime: str,
              time_control: Optional[TimeControl] = None, seed: int = 0,
              store: Optional[RecordStore] = None, clock=None,
              game_id: Optional[str] = None, match_id: Optional[str] = None,
              round: Optional[int] = None,
              versions: Optional[tuple[str, ...]] = None,
              move_cap: int = DEFAULT_MOVE_CAP,
              agent_ids: Optional[Sequence[str]] = None) -> MatchRecord:
    if len(agents) != spec.players:
        raise ValueError(f"game needs {spec.players} agents, got {len(agents)}")
    players: list[Agent] = []
    default_ids: list[str] = []
    for i, entry in enumerate(agents):
        if isinstance(entry, Agent):
            # pre-built instance: caller owns its seeding
            players.append(entry)
            default_ids.append(type(entry).__name__)
        else:
            config = _as_config(entry)
            agent = config.build()
            agent.rng = random.Random(_derive_seed(seed, config.seed, i + 1))
            players.append(agent)
            default_ids.append(config.name or config.spec_string)
    for agent in players:
        agent.check_regime(regime)  # fail fast before any move

    ids = tuple(agent_ids) if agent_ids else tuple(default_ids)
    game_id = game_id or spec.name
    clock = clock or LogicalClock()
    if match_id is None:
        key = "|".join((game_id, *ids, str(seed), str(round)))
        match_id = hashlib.sha1(key.encode()).hexdigest()[:12]

    sub_rng = random.Random(seed ^ 0x5EED)
    budget = Budget(move_ms=time_control.move_ms if time_control else _UNTIMED_MS)
    timeout_s = (time_control.move_ms * _TIMEOUT_SLACK / 1000.0) if time_control else None

    started = clock.now()
    state = initial_state(spec)
    labels: list[str] = []
    violations = [0] * spec.players
    termination = NATURAL
    reason = ""
    result: tuple[str, ...] = ()
    rule_index = -1

    while True:
        st = status(spec, state)
        if st.terminal:
            result = st.outcomes
            rule_index = st.rule_index
            break
        if len(labels) >= move_cap:
            termination = CAPPED
            reason = f"move cap {move_cap} reached"
            result = (DRAW,) * spec.players
            break
        seat = state.mover
        obs = make_observation(spec, state, regime, seat)
        move, error = _timed_select(players[seat - 1], obs, budget, timeout_s)

        if error == "timeout":
            violations[seat - 1] += 1
            move = obs.legal[sub_rng.randrange(len(obs.legal))]
            state = apply_move(spec, state, move)
            labels.append(move.label(spec))
            if violations[seat - 1] >= (time_control.max_violations if time_control else 3):
                termination = FORFEIT
                reason = f"seat {seat} exceeded the violation limit"
                result = _forfeit_result(spec.players, seat)
                break
            continue
        if error is not None:
            termination = FORFEIT
            reason = f"seat {seat} {error}"
            result = _forfeit_result(spec.players, seat)
            break
        if move is None or not 0 <= move.cell < spec.cell_count \
                or state.occupancy[move.cell] != 0:
            termination = FORFEIT
            reason = f"seat {seat} returned an illegal move"
            result = _forfeit_result(spec.players, seat)
            break
        state = apply_move(spec, state, move)
        labels.append(move.label(spec))

    record = MatchRecord(
        match_id=match_id,
        game_id=game_id,
        agents=ids,
        regime=regime,
        moves=tuple(labels),
        result=result,
        rule_index=rule_index,
        seed=seed,
        violations=tuple(violations),
        started=started,
        ended=clock.now(),
        termination=termination,
        reason=reason,
        round=round,
        versions=versions,
    )
    if store is not None:
        store.append(record)
    return record


def _forfeit_result(players: int, loser_seat: int) -> tuple[str, ...]:
    if players == 1:
        return (LOSS,)
    return tuple(LOSS if p == loser_seat else WIN for p in range(1, players + 1))
