"""Goal predicates over a board and an occupancy vector.

Occupancy is indexed by cell id: 0 empty, otherwise the player number.
These are the reference implementations; the Simulator keeps faster
incremental equivalents and is tested against these.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .board import BoardGraph


def connected(board: BoardGraph, occupancy: Sequence[int], player: int) -> bool:
    """True iff one component of the player's pieces touches every region."""
    regions = board.region_sets(player)
    if not regions:
        return False
    seen = [False] * board.cell_count
    for seed in sorted(regions[0]):
        if occupancy[seed] != player or seen[seed]:
            continue
        component = _component(board, occupancy, player, seed, seen)
        if all(component & region for region in regions):
            return True
    return False


def _component(board: BoardGraph, occupancy: Sequence[int], player: int,
               seed: int, seen: list[bool]) -> set[int]:
    component = {seed}
    seen[seed] = True
    queue = deque([seed])
    while queue:
        cell = queue.popleft()
        for nb in board.neighbors[cell]:
            if not seen[nb] and occupancy[nb] == player:
                seen[nb] = True
                component.add(nb)
                queue.append(nb)
    return component


def line_exists(board: BoardGraph, occupancy: Sequence[int], player: int, n: int) -> bool:
    """True iff n consecutive pieces of the player lie along one line ray."""
    need = n - 1
    for cell in range(board.cell_count):
        if occupancy[cell] != player:
            continue
        for ray in board.rays[cell]:
            if len(ray) < need:
                continue
            if all(occupancy[ray[i]] == player for i in range(need)):
                return True
    return False
