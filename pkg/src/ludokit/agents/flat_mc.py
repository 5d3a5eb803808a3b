"""Flat Monte Carlo: equal random playouts per root move, pick the best mean.

Playouts are dealt round-robin across the root moves (ascending cell id)
until the budget runs out, so every move gets within one playout of
every other. Ties on the mean break toward the lowest cell id.
"""

from __future__ import annotations

import random
import time

from ..engine import GameState, Move
from ..engine.simulate import DEFAULT_MOVE_CAP
from ..engine.state import ONGOING
from .base import Agent, AgentConfigError, Budget, Observation, SimulateCapability


def flat_mc(state: GameState, capability: SimulateCapability, budget: Budget,
            seed: int = 0, cap: int = DEFAULT_MOVE_CAP, seat: int | None = None) -> Move:
    rng = random.Random(seed)
    return _search(state, capability, budget, rng, cap, seat)


def _search(state: GameState, capability: SimulateCapability, budget: Budget,
            rng: random.Random, cap: int, seat: int | None) -> Move:
    moves = sorted(capability.legal_moves(state), key=lambda m: m.cell)
    if len(moves) == 1:
        return moves[0]
    me = state.mover if seat is None else seat
    sim = capability.simulator()

    deadline = None
    if budget.move_ms is not None:
        deadline = time.monotonic() + budget.move_ms / 1000.0
    total = budget.iterations if budget.iterations is not None else None

    sums = [0.0] * len(moves)
    counts = [0] * len(moves)
    ran = 0
    while True:
        if total is not None and ran >= total:
            break
        if deadline is not None and time.monotonic() >= deadline:
            break
        i = ran % len(moves)
        sim.load(state, ONGOING)
        sim.play(moves[i].cell)
        if not sim.terminal:
            sim.run_playout(rng, cap=cap)
        sums[i] += sim.scores()[me - 1]
        counts[i] += 1
        ran += 1

    best, best_mean = 0, -1.0
    for i in range(len(moves)):
        mean = sums[i] / counts[i] if counts[i] else -1.0
        if mean > best_mean:
            best, best_mean = i, mean
    return moves[best]


class FlatMonteCarloAgent(Agent):
    kind = "flat-mc"
    needs_simulate = True

    def __init__(self, seed: int = 0, playouts: int | None = None,
                 cap: int = DEFAULT_MOVE_CAP):
        super().__init__(seed)
        self.playouts = playouts
        self.cap = cap

    def select_move(self, obs: Observation, budget: Budget) -> Move:
        if obs.simulate is None:
            raise AgentConfigError("flat-mc needs a forward-model observation")
        if self.playouts is not None:
            budget = Budget(move_ms=budget.move_ms, iterations=self.playouts)
        return _search(obs.state, obs.simulate, budget, self.rng, self.cap, obs.seat)
