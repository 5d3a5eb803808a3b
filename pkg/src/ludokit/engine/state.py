"""Immutable game state and the functional forward model.

States are values: `apply_move` returns a new state and never touches
its input. `status` re-evaluates the end rules from scratch; the
Simulator in simulate.py is the fast incremental twin used by search.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compile import EACH, MOVER, Condition, GameSpec
from .goals import connected, line_exists

WIN = "Win"
LOSS = "Loss"
DRAW = "Draw"


class IllegalMove(Exception):
    def __init__(self, message: str, cell: int = -1):
        super().__init__(message)
        self.cell = cell


@dataclass(frozen=True)
class Move:
    cell: int

    def label(self, spec: GameSpec) -> str:
        return spec.board.labels[self.cell]


@dataclass(frozen=True)
class Status:
    """Ongoing, or terminal with one outcome per player.

    rule_index is the deciding end rule's position in the description,
    or -1 for the implicit draw when no rule fires and no moves remain.
    """

    ongoing: bool
    outcomes: tuple[str, ...] = ()
    rule_index: int = -1

    @property
    def terminal(self) -> bool:
        return not self.ongoing

    def scores(self) -> tuple[float, ...]:
        """Per-player scalar result: win 1, draw 0.5, loss 0."""
        return tuple({WIN: 1.0, DRAW: 0.5, LOSS: 0.0}[o] for o in self.outcomes)


ONGOING = Status(True)


@dataclass(frozen=True)
class GameState:
    occupancy: tuple[int, ...]  # 0 empty, else player number
    mover: int
    move_count: int


def initial_state(spec: GameSpec) -> GameState:
    return GameState((0,) * spec.cell_count, 1, 0)


def legal_moves(spec: GameSpec, state: GameState) -> list[Move]:
    """Empty cells in ascending cell-id order; raises on a terminal state."""
    if not status(spec, state).ongoing:
        raise IllegalMove("legal_moves called on a terminal state")
    return [Move(c) for c, v in enumerate(state.occupancy) if v == 0]


def apply_move(spec: GameSpec, state: GameState, move: Move) -> GameState:
    cell = move.cell
    if not 0 <= cell < spec.cell_count:
        raise IllegalMove(f"cell {cell} out of range", cell)
    if state.occupancy[cell] != 0:
        raise IllegalMove(f"cell {spec.board.labels[cell]} is occupied", cell)
    occupancy = list(state.occupancy)
    occupancy[cell] = state.mover
    count = state.move_count + 1
    mover = 1 if spec.players == 1 else (1 if count % 2 == 0 else 2)
    return GameState(tuple(occupancy), mover, count)


def last_mover(spec: GameSpec, state: GameState) -> int:
    """The player who made the last move; 1 before any move."""
    if spec.players == 1 or state.move_count == 0:
        return 1
    return 1 if state.move_count % 2 == 1 else 2


def status(spec: GameSpec, state: GameState) -> Status:
    mover = last_mover(spec, state)
    for index, rule in enumerate(spec.end_rules):
        if state.move_count == 0 and rule.condition.kind not in ("full", "noMoves"):
            continue  # piece conditions cannot hold on an empty board
        if _condition_holds(spec, state, rule.condition, mover):
            return Status(False, _resolve(spec, rule.who, rule.outcome, mover), index)
    if all(state.occupancy):
        return Status(False, (DRAW,) * spec.players, -1)
    return ONGOING


def _condition_holds(spec: GameSpec, state: GameState, cond: Condition, mover: int) -> bool:
    if cond.kind == "full" or cond.kind == "noMoves":
        # placement-only games: out of moves exactly when the board fills
        return all(state.occupancy)
    players = _resolve_players(spec, cond.role, mover)
    if cond.kind == "connect":
        return any(connected(spec.board, state.occupancy, p) for p in players)
    if cond.kind == "line":
        return any(line_exists(spec.board, state.occupancy, p, cond.length) for p in players)
    raise ValueError(f"unknown condition kind {cond.kind!r}")


def _resolve_players(spec: GameSpec, role: int, mover: int) -> tuple[int, ...]:
    if role == MOVER:
        return (mover,)
    if role == EACH:
        return tuple(range(1, spec.players + 1))
    return (role,)


def _resolve(spec: GameSpec, who: int, outcome: str, mover: int) -> tuple[str, ...]:
    if outcome == DRAW:
        return (DRAW,) * spec.players
    subjects = _resolve_players(spec, who, mover)
    inverse = LOSS if outcome == WIN else WIN
    return tuple(outcome if p in subjects else inverse for p in range(1, spec.players + 1))
