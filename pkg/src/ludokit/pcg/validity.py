"""Validity screen for candidate game trees.

A tree is valid when it validates and compiles, twenty seeded random
playouts all terminate under the move cap, and none of those playouts
ends before every player has completed two turns (a game decided on a
first placement is degenerate, not playable).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from ..engine import CompileError, GameSpec, compile_game
from ..engine.simulate import DEFAULT_MOVE_CAP, Simulator
from ..grammar import LudemeNode, Registry, validate


@dataclass(frozen=True)
class Verdict:
    valid: bool
    reasons: tuple[str, ...] = ()
    spec: Optional[GameSpec] = field(default=None, compare=False, repr=False)


def filter_valid(tree: LudemeNode, playouts: int = 20,
                 cap: int = DEFAULT_MOVE_CAP, seed: int = 0,
                 registry: Optional[Registry] = None) -> Verdict:
    """Screen one tree; invalid is a verdict with reasons, never an error."""
    errors = validate(tree, registry)
    if errors:
        return Verdict(False, tuple(e.message for e in errors))
    try:
        spec = compile_game(tree, registry, check=False)
    except CompileError as e:
        return Verdict(False, (str(e),))

    sim = Simulator(spec)
    shortest = None
    for i in range(playouts):
        sim.reset()
        rng = random.Random(seed * 1_000_003 + i)
        trajectory = sim.run_playout(rng, cap=cap, record=True)
        if trajectory.capped:
            return Verdict(False, (f"playout {i} hit the {cap}-move cap",), spec)
        length = len(trajectory.moves)
        if shortest is None or length < shortest:
            shortest = length
    # everyone gets a second placement before anything may end
    if shortest is not None and shortest <= 2 * spec.players - 1:
        return Verdict(
            False,
            (f"degenerate: shortest of {playouts} screening playouts "
             f"lasted {shortest} moves",),
            spec)
    return Verdict(True, (), spec)
