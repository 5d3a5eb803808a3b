"""Uniform random baseline; runs under every information regime."""

from __future__ import annotations

from ..engine import Move
from .base import Agent, Budget, Observation


class RandomAgent(Agent):
    kind = "random"
    needs_simulate = False

    def select_move(self, obs: Observation, budget: Budget) -> Move:
        return obs.legal[self.rng.randrange(len(obs.legal))]
