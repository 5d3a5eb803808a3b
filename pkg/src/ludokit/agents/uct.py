"""UCT search: UCB1 selection, one expansion per iteration, random rollouts.

Node values are stored from the perspective of the player who moved into
the node, so the mean value at a child is directly the quantity its
parent wants to maximize. Backpropagation adds 1 for a win, 0.5 for a
draw (cap-hit rollouts count as draws), 0 for a loss. The returned move
is the root child with the most visits; ties break toward the lowest
cell id, which is also the expansion order.
"""

from __future__ import annotations

import math
import random
import time

from ..engine import GameState, Move
from ..engine.simulate import DEFAULT_MOVE_CAP
from ..engine.state import ONGOING
from .base import Agent, AgentConfigError, Budget, Observation, SimulateCapability

DEFAULT_C = 1.41
DEFAULT_ITERATIONS = 10_000


class UctSearch:
    """One search tree over a fixed game; reusable across moves."""

    def __init__(self, capability: SimulateCapability, c: float = DEFAULT_C,
                 seed: int = 0, cap: int = DEFAULT_MOVE_CAP):
        if c <= 0:
            raise AgentConfigError("exploration constant c must be positive")
        self.capability = capability
        self.c = c
        self.cap = cap
        self.rng = random.Random(seed)
        self.root_visits = 0
        self.iterations_run = 0

    def search(self, state: GameState, budget: Budget) -> Move:
        legal = sorted(m.cell for m in self.capability.legal_moves(state))
        self.root_visits = 0
        self.iterations_run = 0
        if len(legal) == 1:
            return Move(legal[0])

        sim = self.capability.simulator()
        players = self.capability.players
        rng = self.rng
        c = self.c
        cap = self.cap

        # flat node arrays; node 0 is the root
        visits = [0]
        sums = [0.0]
        children: list[list[int]] = [[]]
        move_in = [-1]  # cell played to enter the node
        who_in = [0]  # player who made that move
        untried: list[list[int]] = [sorted(legal, reverse=True)]
        final: list[tuple[float, ...] | None] = [None]  # cached terminal scores

        deadline = None
        if budget.move_ms is not None:
            deadline = time.monotonic() + budget.move_ms / 1000.0
        max_iters = budget.iterations

        iters = 0
        while True:
            if max_iters is not None and iters >= max_iters:
                break
            if deadline is not None and time.monotonic() >= deadline:
                break
            iters += 1

            sim.load(state, ONGOING)
            node = 0
            path = [0]
            while True:
                cached = final[node]
                if cached is not None:
                    scores = cached
                    break
                bag = untried[node]
                if bag:
                    cell = bag.pop()
                    mover = sim.mover
                    sim.play(cell)
                    child = len(visits)
                    visits.append(0)
                    sums.append(0.0)
                    children.append([])
                    move_in.append(cell)
                    who_in.append(mover)
                    untried.append([])
                    final.append(None)
                    children[node].append(child)
                    path.append(child)
                    if sim.terminal:
                        scores = sim.scores()
                        final[child] = scores
                    else:
                        untried[child] = sorted(sim.legal_cells(), reverse=True)
                        sim.run_playout(rng, cap=cap)
                        scores = sim.scores()
                    break
                # all children expanded: UCB1 descent
                log_n = math.log(visits[node])
                best = -1
                best_ucb = -1.0
                for ch in children[node]:
                    n = visits[ch]
                    ucb = sums[ch] / n + c * math.sqrt(log_n / n)
                    if ucb > best_ucb:
                        best, best_ucb = ch, ucb
                node = best
                sim.play(move_in[node])
                path.append(node)

            for nd in path:
                visits[nd] += 1
                if nd:
                    sums[nd] += scores[who_in[nd] - 1]

        self.root_visits = visits[0]
        self.iterations_run = iters

        best_cell = legal[0]
        best_visits = -1
        for ch in children[0]:
            if visits[ch] > best_visits:
                best_cell, best_visits = move_in[ch], visits[ch]
        return Move(best_cell)


def uct_search(state: GameState, capability: SimulateCapability, budget: Budget,
               c: float = DEFAULT_C, seed: int = 0,
               cap: int = DEFAULT_MOVE_CAP) -> Move:
    return UctSearch(capability, c=c, seed=seed, cap=cap).search(state, budget)


class UctAgent(Agent):
    kind = "uct"
    needs_simulate = True

    def __init__(self, seed: int = 0, c: float = DEFAULT_C,
                 iterations: int | None = DEFAULT_ITERATIONS,
                 cap: int = DEFAULT_MOVE_CAP):
        super().__init__(seed)
        if c <= 0:
            raise AgentConfigError("exploration constant c must be positive")
        self.c = c
        self.iterations = iterations
        self.cap = cap
        self.last_search: UctSearch | None = None

    def select_move(self, obs: Observation, budget: Budget) -> Move:
        if obs.simulate is None:
            raise AgentConfigError("uct needs a forward-model observation")
        if self.iterations is not None:
            budget = Budget(move_ms=budget.move_ms, iterations=self.iterations)
        search = UctSearch(obs.simulate, c=self.c, cap=self.cap)
        search.rng = self.rng  # one stream across the whole game
        move = search.search(obs.state, budget)
        self.last_search = search
        return move
