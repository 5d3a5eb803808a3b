"""Agent contract: observations, budgets, regimes, and the base class.

An agent sees only its Observation. What the observation carries depends
on the information regime: "forward-model" adds a simulate capability,
"description-only" adds the game's description tree, "blind" adds
nothing beyond the state and the legal moves. The legal move list is
always present so that play stays possible even blind.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..engine import GameSpec, GameState, Move, Simulator, Status
from ..engine.state import apply_move, legal_moves, status
from ..grammar import LudemeNode

FORWARD_MODEL = "forward-model"
DESCRIPTION_ONLY = "description-only"
BLIND = "blind"
REGIMES = (FORWARD_MODEL, DESCRIPTION_ONLY, BLIND)


class AgentConfigError(Exception):
    pass


class SimulateCapability:
    """Forward model handed to agents: pure ops plus a fast simulator."""

    def __init__(self, spec: GameSpec):
        self._spec = spec
        self.players = spec.players
        self.cell_count = spec.cell_count

    def legal_moves(self, state: GameState) -> list[Move]:
        return legal_moves(self._spec, state)

    def apply(self, state: GameState, move: Move) -> GameState:
        return apply_move(self._spec, state, move)

    def status(self, state: GameState) -> Status:
        return status(self._spec, state)

    def simulator(self) -> Simulator:
        return Simulator(self._spec)


@dataclass
class Observation:
    """What one agent is shown before choosing a move."""

    state: GameState
    legal: list[Move]
    seat: int  # the observing player's number; equals state.mover
    player_count: int
    simulate: Optional[SimulateCapability] = None
    tree: Optional[LudemeNode] = None


def make_observation(spec: GameSpec, state: GameState, regime: str, seat: int) -> Observation:
    if regime not in REGIMES:
        raise AgentConfigError(f"unknown regime {regime!r}")
    obs = Observation(
        state=state,
        legal=legal_moves(spec, state),
        seat=seat,
        player_count=spec.players,
    )
    if regime == FORWARD_MODEL:
        obs.simulate = SimulateCapability(spec)
    elif regime == DESCRIPTION_ONLY:
        obs.tree = spec.tree
    return obs


@dataclass(frozen=True)
class Budget:
    """Per-move limits; at least one of the two must be set."""

    move_ms: Optional[int] = None
    iterations: Optional[int] = None

    def __post_init__(self):
        if self.move_ms is None and self.iterations is None:
            raise ValueError("budget needs a wall-clock or an iteration limit")
        if self.move_ms is not None and self.move_ms <= 0:
            raise ValueError("move_ms must be positive")
        if self.iterations is not None and self.iterations <= 0:
            raise ValueError("iterations must be positive")


@dataclass(frozen=True)
class TrainingPhase:
    """Scaffolding for the pre-competition learning window.

    Carries the training games (which may be variants of the evaluation
    games) and a wall-clock allowance in milliseconds.
    """

    games: tuple[tuple[GameSpec, Optional[LudemeNode]], ...] = ()
    budget_ms: int = 0


class Agent:
    """Base agent: subclasses override select_move; train is a no-op hook."""

    kind = "base"
    needs_simulate = False

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.rng = random.Random(seed)

    def check_regime(self, regime: str) -> None:
        if regime not in REGIMES:
            raise AgentConfigError(f"unknown regime {regime!r}")
        if self.needs_simulate and regime != FORWARD_MODEL:
            raise AgentConfigError(
                f"agent {self.kind!r} needs the forward model and cannot run under {regime!r}")

    def select_move(self, obs: Observation, budget: Budget) -> Move:
        raise NotImplementedError

    def train(self, phase: TrainingPhase) -> "Agent":
        """Default: ignore the phase and return self unchanged."""
        return self
