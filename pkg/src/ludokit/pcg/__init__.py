"""Game generation, validity filtering, evaluation, and ranking."""

from .evaluate import EvalProfile, evaluate_game
from .generate import GenConstraints, GenError, generate_game
from .rank import (
    Candidate,
    EvalParams,
    Weights,
    assess_candidates,
    depth_proxy,
    length_score,
    node_count,
    rank_games,
)
from .validity import Verdict, filter_valid

__all__ = [
    "Candidate",
    "EvalParams",
    "EvalProfile",
    "GenConstraints",
    "GenError",
    "Verdict",
    "Weights",
    "assess_candidates",
    "depth_proxy",
    "evaluate_game",
    "filter_valid",
    "generate_game",
    "length_score",
    "node_count",
    "rank_games",
]
