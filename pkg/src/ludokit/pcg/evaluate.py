"""Agent-based evaluation metrics for a compiled game.

The profile aggregates seeded playouts under two policies: uniform
random self-play and UCT self-play. Outcome rates partition into first
player wins, second player wins (a solo player's loss lands here, the
house won), draws, and capped runs, so they always sum to one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..agents import Budget, SimulateCapability
from ..agents.uct import DEFAULT_C, UctSearch
from ..engine import GameSpec, apply_move, initial_state, status
from ..engine.simulate import DEFAULT_MOVE_CAP, Simulator
from ..engine.state import DRAW, WIN


@dataclass(frozen=True)
class EvalProfile:
    playouts: int
    p1_win_rate: float
    p2_win_rate: float
    draw_rate: float
    cap_rate: float
    mean_length: float
    balance: float
    decisiveness: float
    # the same draw statistic split by policy: drawishness under strong
    # play reads very differently from drawishness under random play
    random_draw_rate: float = 0.0
    uct_draw_rate: float = 0.0


def evaluate_game(spec: GameSpec, n: int = 20, seed: int = 0,
                  uct_iterations: int = 1000, c: float = DEFAULT_C,
                  cap: int = DEFAULT_MOVE_CAP) -> EvalProfile:
    """n random-vs-random plus n UCT-vs-UCT seeded games, aggregated."""
    if n < 1:
        raise ValueError("need at least one playout per policy")
    counts = {"p1": 0, "p2": 0, "draw": 0, "cap": 0}
    total_length = 0

    sim = Simulator(spec)
    for i in range(n):
        sim.reset()
        rng = random.Random(seed * 7_919 + i)
        trajectory = sim.run_playout(rng, cap=cap, record=True)
        total_length += len(trajectory.moves)
        _tally(counts, trajectory.capped, trajectory.status.outcomes)
    random_draws = counts["draw"]

    capability = SimulateCapability(spec)
    budget = Budget(iterations=uct_iterations)
    for i in range(n):
        game_rng = random.Random(seed * 104_729 + i)
        state = initial_state(spec)
        length = 0
        while True:
            st = status(spec, state)
            if st.terminal:
                _tally(counts, False, st.outcomes)
                break
            if length >= cap:
                _tally(counts, True, ())
                break
            search = UctSearch(capability, c=c,
                               seed=game_rng.randrange(1 << 31), cap=cap)
            state = apply_move(spec, state, search.search(state, budget))
            length += 1
        total_length += length
    uct_draws = counts["draw"] - random_draws

    total = 2 * n
    p1 = counts["p1"] / total
    p2 = counts["p2"] / total
    draw = counts["draw"] / total
    decisive = counts["p1"] + counts["p2"]
    balance = 1.0 if decisive == 0 else 1.0 - abs(counts["p1"] - counts["p2"]) / decisive
    return EvalProfile(
        playouts=total,
        p1_win_rate=p1,
        p2_win_rate=p2,
        draw_rate=draw,
        cap_rate=counts["cap"] / total,
        mean_length=total_length / total,
        balance=balance,
        decisiveness=1.0 - draw,
        random_draw_rate=random_draws / n,
        uct_draw_rate=uct_draws / n,
    )


def _tally(counts: dict, capped: bool, outcomes: tuple[str, ...]) -> None:
    if capped:
        counts["cap"] += 1
    elif outcomes and outcomes[0] == WIN:
        counts["p1"] += 1
    elif len(outcomes) > 1 and outcomes[1] == WIN:
        counts["p2"] += 1
    elif outcomes and all(o == DRAW for o in outcomes):
        counts["draw"] += 1
    else:
        counts["p2"] += 1  # a solo loss: the house took it
