"""Board games compiled from description trees, with a forward model."""

from .board import BoardGraph, Region, build_board, cell_label, parse_label
from .compile import CompileError, Condition, EndRule, GameSpec, compile_game
from .state import (
    GameState,
    IllegalMove,
    Move,
    Status,
    apply_move,
    initial_state,
    legal_moves,
    status,
)
from .goals import connected, line_exists
from .simulate import Simulator, Trajectory, playout
