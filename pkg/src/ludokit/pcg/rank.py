"""Rank many candidate games: filter, evaluate, score, sort.

Scores combine balance, decisiveness, a trapezoid over mean game length
(full credit between 10 and 60 moves), and a strategic-depth proxy (how
hard UCT beats uniform random). Every candidate's evaluation is seeded
from its own rendered text, so identical trees score identically and a
bigger time budget refines scores without changing the valid set.
"""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from ..agents import Budget, SimulateCapability
from ..agents.uct import DEFAULT_C, UctSearch
from ..engine import GameSpec, apply_move, initial_state, legal_moves, status
from ..engine.simulate import DEFAULT_MOVE_CAP
from ..engine.state import DRAW, WIN
from ..grammar import LudemeNode, NodeList, Registry, Symbol, parse_text, render
from .evaluate import EvalProfile, evaluate_game
from .validity import Verdict, filter_valid

# trapezoid feet and plateau for the length score, in moves
LENGTH_FEET = (0.0, 120.0)
LENGTH_PLATEAU = (10.0, 60.0)


@dataclass(frozen=True)
class Weights:
    balance: float = 0.25
    decisiveness: float = 0.25
    length: float = 0.25
    depth: float = 0.25


@dataclass(frozen=True)
class EvalParams:
    """Per-candidate effort, derived from the total time budget."""
    eval_n: int
    uct_iterations: int
    depth_games: int
    depth_iterations: int


# (per-candidate seconds, effort); the last tier is the design target
_TIERS = (
    (0.05, EvalParams(2, 25, 2, 50)),
    (0.5, EvalParams(4, 50, 4, 100)),
    (2.0, EvalParams(8, 100, 8, 200)),
    (10.0, EvalParams(20, 400, 20, 1000)),
    (30.0, EvalParams(20, 1000, 20, 1000)),
)


@dataclass
class Candidate:
    index: int
    tree: LudemeNode
    valid: bool
    reasons: tuple[str, ...]
    profile: Optional[EvalProfile] = None
    depth_proxy: Optional[float] = None
    complexity: int = 0  # tree node count; a crude rule-complexity proxy
    score: Optional[float] = None


def length_score(mean_length: float) -> float:
    """Trapezoid membership of the mean game length."""
    foot_lo, foot_hi = LENGTH_FEET
    lo, hi = LENGTH_PLATEAU
    if mean_length <= foot_lo or mean_length >= foot_hi:
        return 0.0
    if mean_length < lo:
        return (mean_length - foot_lo) / (lo - foot_lo)
    if mean_length <= hi:
        return 1.0
    return (foot_hi - mean_length) / (foot_hi - hi)


def node_count(tree) -> int:
    if isinstance(tree, LudemeNode):
        return 1 + sum(node_count(a) for a in tree.args)
    if isinstance(tree, NodeList):
        return sum(node_count(a) for a in tree)
    return 1 if isinstance(tree, Symbol) else 0


def depth_proxy(spec: GameSpec, games: int = 20, iterations: int = 1000,
                seed: int = 0, c: float = DEFAULT_C,
                cap: int = DEFAULT_MOVE_CAP) -> float:
    """UCT's score rate against uniform random, alternating colors."""
    if spec.players == 1:
        # no opponent: compare solo success rates, centered at an even 0.5
        uct = _solo_rate(spec, games, iterations, seed, c, cap, use_uct=True)
        rnd = _solo_rate(spec, games, iterations, seed, c, cap, use_uct=False)
        return min(1.0, max(0.0, 0.5 + (uct - rnd) / 2))
    capability = SimulateCapability(spec)
    budget = Budget(iterations=iterations)
    total = 0.0
    for g in range(games):
        uct_seat = 1 if g % 2 == 0 else 2
        rng = random.Random(seed * 31_337 + g)
        state = initial_state(spec)
        length = 0
        while True:
            st = status(spec, state)
            if st.terminal:
                total += {WIN: 1.0, DRAW: 0.5}.get(st.outcomes[uct_seat - 1], 0.0)
                break
            if length >= cap:
                total += 0.5
                break
            if state.mover == uct_seat:
                search = UctSearch(capability, c=c,
                                   seed=rng.randrange(1 << 31), cap=cap)
                move = search.search(state, budget)
            else:
                legal = legal_moves(spec, state)
                move = legal[rng.randrange(len(legal))]
            state = apply_move(spec, state, move)
            length += 1
    return total / games


def _solo_rate(spec: GameSpec, games: int, iterations: int, seed: int,
               c: float, cap: int, use_uct: bool) -> float:
    capability = SimulateCapability(spec)
    budget = Budget(iterations=iterations)
    total = 0.0
    for g in range(games):
        rng = random.Random(seed * 48_271 + g)
        state = initial_state(spec)
        length = 0
        while True:
            st = status(spec, state)
            if st.terminal:
                total += {WIN: 1.0, DRAW: 0.5}.get(st.outcomes[0], 0.0)
                break
            if length >= cap:
                break
            if use_uct:
                search = UctSearch(capability, c=c,
                                   seed=rng.randrange(1 << 31), cap=cap)
                move = search.search(state, budget)
            else:
                legal = legal_moves(spec, state)
                move = legal[rng.randrange(len(legal))]
            state = apply_move(spec, state, move)
            length += 1
    return total / games


def _budget_params(time_budget_s: Optional[float], count: int) -> EvalParams:
    if time_budget_s is None:
        return _TIERS[-1][1]
    per_candidate = time_budget_s / max(count, 1)
    chosen = None
    for threshold, params in _TIERS:
        if per_candidate >= threshold:
            chosen = params
    if chosen is None:
        raise ValueError("time budget too small to evaluate any candidate")
    return chosen


def _candidate_seed(base_seed: int, text: str) -> int:
    digest = hashlib.sha1(f"{base_seed}|{text}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _assess_text(job, registry: Optional[Registry] = None):
    index, text, base_seed, params, weights, cap = job
    tree = parse_text(text)
    cand_seed = _candidate_seed(base_seed, text)
    verdict = filter_valid(tree, cap=cap, seed=cand_seed, registry=registry)
    complexity = node_count(tree)
    if not verdict.valid:
        return index, False, verdict.reasons, None, None, complexity, None
    profile = evaluate_game(verdict.spec, n=params.eval_n, seed=cand_seed + 1,
                            uct_iterations=params.uct_iterations, cap=cap)
    depth = depth_proxy(verdict.spec, games=params.depth_games,
                        iterations=params.depth_iterations,
                        seed=cand_seed + 2, cap=cap)
    score = (weights.balance * profile.balance
             + weights.decisiveness * profile.decisiveness
             + weights.length * length_score(profile.mean_length)
             + weights.depth * depth)
    return index, True, (), profile, depth, complexity, score


def assess_candidates(trees: Iterable[LudemeNode], time_budget_s: Optional[float] = None,
                      weights: Optional[Weights] = None, seed: int = 0,
                      workers: int = 0, cap: int = DEFAULT_MOVE_CAP,
                      registry: Optional[Registry] = None) -> list[Candidate]:
    """Filter and score every candidate, in input order."""
    trees = list(trees)
    if not trees:
        return []
    params = _budget_params(time_budget_s, len(trees))
    weights = weights or Weights()
    jobs = [(i, render(tree), seed, params, weights, cap)
            for i, tree in enumerate(trees)]
    if workers > 1 and registry is None:
        try:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                rows = list(pool.map(_assess_text, jobs,
                                     chunksize=max(1, len(jobs) // (workers * 4))))
        except (OSError, PermissionError):  # constrained environments
            rows = [_assess_text(job) for job in jobs]
    else:
        rows = [_assess_text(job, registry) for job in jobs]
    candidates = []
    for (index, valid, reasons, profile, depth, complexity, score), tree in zip(rows, trees):
        candidates.append(Candidate(index=index, tree=tree, valid=valid,
                                    reasons=reasons, profile=profile,
                                    depth_proxy=depth, complexity=complexity,
                                    score=score))
    return candidates


def rank_games(trees: Iterable[LudemeNode], top: Optional[int] = None,
               time_budget_s: Optional[float] = None,
               weights: Optional[Weights] = None, seed: int = 0,
               workers: int = 0, cap: int = DEFAULT_MOVE_CAP,
               registry: Optional[Registry] = None) -> list[Candidate]:
    """Ordered valid candidates, best first; `top` keeps the head."""
    trees = list(trees)
    if top is not None and not 0 <= top <= len(trees):
        raise ValueError("top must be between 0 and the candidate count")
    candidates = assess_candidates(trees, time_budget_s=time_budget_s,
                                   weights=weights, seed=seed, workers=workers,
                                   cap=cap, registry=registry)
    ranked = [c for c in candidates if c.valid]
    ranked.sort(key=lambda c: -c.score)  # stable: ties keep input order
    return ranked if top is None else ranked[:top]
