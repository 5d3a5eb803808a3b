"""Mutable fast-path simulator and seeded playouts.

The Simulator mirrors the functional forward model but mutates one
buffer in place and keeps incremental structures: a union-find with one
virtual node per region for `connect`, and direction step tables for
`line`. Both exploit that end rules are checked after every move, so at
any live position no condition already holds and a new win must pass
through the cell just placed. The equivalence with state.status is
property-tested.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .board import line_axes
from .compile import EACH, MOVER, GameSpec
from .state import DRAW, LOSS, WIN, GameState, IllegalMove, Status, status as eval_status

DEFAULT_MOVE_CAP = 1000

_CONNECT, _LINE, _FULL = 0, 1, 2
_SCORE = {"Win": 1.0, "Draw": 0.5, "Loss": 0.0}

Policy = Callable[[Sequence[int], random.Random], int]


@dataclass(frozen=True)
class Trajectory:
    """A playout: moves made (cell ids), final status, cap flag.

    A capped playout is scored as an all-Draw but `capped` keeps it
    distinguishable from a natural draw.
    """

    moves: tuple[int, ...]
    status: Status
    capped: bool = False


class Simulator:
    """One game's forward model over a reusable mutable buffer."""

    def __init__(self, spec: GameSpec):
        self.spec = spec
        board = spec.board
        n = board.cell_count
        self.cell_count = n
        self.players = spec.players
        self._neighbors = board.neighbors

        self._rules = []
        need_uf = False
        need_steps = False
        for rule in spec.end_rules:
            cond = rule.condition
            if cond.kind == "connect":
                kind = _CONNECT
                need_uf = True
            elif cond.kind == "line":
                kind = _LINE
                need_steps = True
            else:
                kind = _FULL
            self._rules.append((kind, cond.role, cond.length, rule.who, rule.outcome))

        self._steps: list[list[int]] = []
        if need_steps:
            side = board.side
            for dr, dc in line_axes(board.family):
                for sr, sc in ((dr, dc), (-dr, -dc)):
                    step = [-1] * n
                    for cell in range(n):
                        r, c = board.coords(cell)
                        rr, cc = r + sr, c + sc
                        if 1 <= rr <= side and 1 <= cc <= side:
                            step[cell] = (rr - 1) * side + (cc - 1)
                    self._steps.append(step)

        self._uf_size = 0
        if need_uf:
            self._cell_virtuals: list[tuple[tuple[int, int], ...]] = [() for _ in range(n)]
            self._player_virtuals: dict[int, list[int]] = {p: [] for p in range(1, spec.players + 1)}
            vid = n
            for region in board.regions:
                self._player_virtuals.setdefault(region.player, []).append(vid)
                for cell in region.cells:
                    self._cell_virtuals[cell] = self._cell_virtuals[cell] + ((region.player, vid),)
                vid += 1
            self._uf_size = vid
            self._iota = list(range(vid))
            self._uf = list(self._iota)
            self._sizes = [1] * vid

        self.board = [0] * n
        self._empties = list(range(n))
        self._where = list(range(n))  # cell -> index in _empties
        self.count = 0
        self.terminal = False
        self.outcomes: tuple[str, ...] = ()
        self.rule_index = -1
        self.last_cell = -1

    # -- state management ------------------------------------------------

    @property
    def mover(self) -> int:
        if self.players == 1:
            return 1
        return 1 if self.count % 2 == 0 else 2

    def reset(self) -> None:
        n = self.cell_count
        for i in range(n):
            self.board[i] = 0
        self._empties[:] = range(n)
        self._where[:] = range(n)
        self.count = 0
        self.terminal = False
        self.outcomes = ()
        self.rule_index = -1
        self.last_cell = -1
        if self._uf_size:
            self._uf[:] = self._iota
            for i in range(self._uf_size):
                self._sizes[i] = 1

    def load(self, state: GameState, known_status: Status | None = None) -> None:
        """Adopt an arbitrary state.

        Terminality is evaluated from scratch unless the caller already
        knows it (search reloads the same live root thousands of times).
        """
        self.reset()
        board = self.board
        empties = self._empties
        where = self._where
        del empties[:]
        for cell, value in enumerate(state.occupancy):
            board[cell] = value
            if value == 0:
                where[cell] = len(empties)
                empties.append(cell)
            elif self._uf_size:
                for nb in self._neighbors[cell]:
                    if nb < cell and board[nb] == value:
                        self._union(cell, nb)
                for player, vid in self._cell_virtuals[cell]:
                    if player == value:
                        self._union(cell, vid)
        self.count = state.move_count
        st = known_status if known_status is not None else eval_status(self.spec, state)
        self.terminal = st.terminal
        self.outcomes = st.outcomes
        self.rule_index = st.rule_index

    def snapshot(self) -> GameState:
        return GameState(tuple(self.board), self.mover, self.count)

    def legal_cells(self) -> list[int]:
        """Live view of the empty cells; callers must not mutate it."""
        return self._empties

    # -- moves -----------------------------------------------------------

    def play(self, cell: int) -> None:
        if self.terminal:
            raise IllegalMove("play called on a terminal state", cell)
        board = self.board
        if not 0 <= cell < self.cell_count:
            raise IllegalMove(f"cell {cell} out of range", cell)
        if board[cell] != 0:
            raise IllegalMove(f"cell {self.spec.board.labels[cell]} is occupied", cell)
        p = self.mover
        board[cell] = p
        empties = self._empties
        where = self._where
        last = empties[-1]
        idx = where[cell]
        empties[idx] = last
        where[last] = idx
        empties.pop()
        self.count += 1
        self.last_cell = cell

        if self._uf_size:
            for nb in self._neighbors[cell]:
                if board[nb] == p:
                    self._union(cell, nb)
            for player, vid in self._cell_virtuals[cell]:
                if player == p:
                    self._union(cell, vid)

        full = not empties
        for index, (kind, role, length, who, outcome) in enumerate(self._rules):
            if kind == _FULL:
                if not full:
                    continue
            elif role != MOVER and role != EACH and role != p:
                continue  # a condition on the idle player cannot newly hold
            elif kind == _CONNECT:
                if not self._connected_through(cell, p):
                    continue
            elif not self._line_through(cell, p, length):
                continue
            self.terminal = True
            self.rule_index = index
            self.outcomes = self._resolve(who, outcome, p)
            return
        if full:
            self.terminal = True
            self.rule_index = -1
            self.outcomes = (DRAW,) * self.players

    def scores(self) -> tuple[float, ...]:
        """Per-player scalar result: win 1, draw 0.5, loss 0; capped counts 0.5."""
        if not self.outcomes:
            return (0.5,) * self.players
        return tuple(_SCORE[o] for o in self.outcomes)

    # -- incremental goal checks ----------------------------------------

    def _find(self, x: int) -> int:
        uf = self._uf
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def _union(self, a: int, b: int) -> None:
        ra, rb = self._find(a), self._find(b)
        if ra == rb:
            return
        sizes = self._sizes
        if sizes[ra] < sizes[rb]:
            ra, rb = rb, ra
        self._uf[rb] = ra
        sizes[ra] += sizes[rb]

    def _connected_through(self, cell: int, p: int) -> bool:
        vids = self._player_virtuals.get(p, ())
        if not vids:
            return False
        root = self._find(cell)
        return all(self._find(v) == root for v in vids)

    def _line_through(self, cell: int, p: int, length: int) -> bool:
        board = self.board
        steps = self._steps
        for d in range(0, len(steps), 2):
            run = 1
            fwd = steps[d]
            x = fwd[cell]
            while x >= 0 and board[x] == p:
                run += 1
                x = fwd[x]
            back = steps[d + 1]
            x = back[cell]
            while x >= 0 and board[x] == p:
                run += 1
                x = back[x]
            if run >= length:
                return True
        return False

    def _resolve(self, who: int, outcome: str, mover: int) -> tuple[str, ...]:
        players = self.players
        if outcome == DRAW:
            return (DRAW,) * players
        if who == MOVER:
            subjects = (mover,)
        elif who == EACH:
            subjects = tuple(range(1, players + 1))
        else:
            subjects = (who,)
        inverse = LOSS if outcome == WIN else WIN
        return tuple(outcome if p in subjects else inverse for p in range(1, players + 1))

    # -- playouts --------------------------------------------------------

    def run_playout(self, rng: random.Random, cap: int = DEFAULT_MOVE_CAP,
                    policy: Optional[Policy] = None, record: bool = False) -> Trajectory:
        """Continue from the current position until terminal or cap."""
        moves: list[int] = []
        empties = self._empties
        played = 0
        while not self.terminal and played < cap:
            if policy is None:
                cell = empties[rng.randrange(len(empties))]
            else:
                cell = policy(empties, rng)
            self.play(cell)
            if record:
                moves.append(cell)
            played += 1
        if self.terminal:
            st = Status(False, self.outcomes, self.rule_index)
            return Trajectory(tuple(moves), st, False)
        st = Status(False, (DRAW,) * self.players, -1)
        return Trajectory(tuple(moves), st, True)


def playout(spec: GameSpec, state: GameState | None = None,
            policy: Optional[Policy] = None, seed: int = 0,
            cap: int = DEFAULT_MOVE_CAP) -> Trajectory:
    """Seeded playout from `state` (or the initial position) to the end."""
    if cap < 1:
        raise ValueError("move cap must be at least 1")
    sim = Simulator(spec)
    if state is None:
        sim.reset()
    else:
        sim.load(state)
    rng = random.Random(seed)
    return sim.run_playout(rng, cap=cap, policy=policy, record=True)
