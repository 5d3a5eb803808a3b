"""Independent oracles used by the tests.

Everything here is deliberately written from scratch against the rules
of the games themselves (line enumeration, BFS reachability, minimax),
not against the package's engine, so the two implementations can check
each other.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Optional

# ---------------------------------------------------------------------------
# Tic-Tac-Toe: exhaustive enumeration and minimax
# ---------------------------------------------------------------------------

TTT_LINES = (
    (0, 1, 2), (3, 4, 5), (6, 7, 8),  # rows
    (0, 3, 6), (1, 4, 7), (2, 5, 8),  # columns
    (0, 4, 8), (2, 4, 6),             # diagonals
)


def ttt_winner(board: tuple[int, ...]) -> Optional[int]:
    for a, b, c in TTT_LINES:
        if board[a] and board[a] == board[b] == board[c]:
            return board[a]
    return None


def ttt_mover(board: tuple[int, ...]) -> int:
    # player 1 moves first, so counts differ by at most one
    return 1 if board.count(1) == board.count(2) else 2


def enumerate_ttt() -> dict[tuple[int, ...], Optional[int]]:
    """All positions reachable by legal play, mapped to their winner.

    Winner is 1 or 2 for decided positions, 0 for the full drawn board,
    None for live positions. Play stops at a win, so positions with a
    line are never expanded further.
    """
    start = (0,) * 9
    seen: dict[tuple[int, ...], Optional[int]] = {}
    frontier = [start]
    while frontier:
        board = frontier.pop()
        if board in seen:
            continue
        winner = ttt_winner(board)
        if winner is not None:
            seen[board] = winner
            continue
        if 0 not in board:
            seen[board] = 0
            continue
        seen[board] = None
        mover = ttt_mover(board)
        for i in range(9):
            if board[i] == 0:
                child = board[:i] + (mover,) + board[i + 1:]
                if child not in seen:
                    frontier.append(child)
    return seen


@lru_cache(maxsize=None)
def ttt_minimax(board: tuple[int, ...]) -> int:
    """Game value for the player to move: 1 win, 0 draw, -1 loss."""
    winner = ttt_winner(board)
    if winner is not None:
        # previous player just completed a line
        return -1
    if 0 not in board:
        return 0
    mover = ttt_mover(board)
    best = -1
    for i in range(9):
        if board[i] == 0:
            child = board[:i] + (mover,) + board[i + 1:]
            best = max(best, -ttt_minimax(child))
            if best == 1:
                break
    return best


def ttt_winning_moves(board: tuple[int, ...]) -> list[int]:
    """Cells whose play gives the mover a won game by minimax."""
    mover = ttt_mover(board)
    winning = []
    for i in range(9):
        if board[i] == 0:
            child = board[:i] + (mover,) + board[i + 1:]
            if -ttt_minimax(child) == 1:
                winning.append(i)
    return winning


# ---------------------------------------------------------------------------
# Hex: independent adjacency and BFS connection oracle
# ---------------------------------------------------------------------------


def hex_neighbors(n: int, r: int, c: int) -> list[tuple[int, int]]:
    candidates = (
        (r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1),
        (r + 1, c - 1), (r - 1, c + 1),
    )
    return [(a, b) for a, b in candidates if 1 <= a <= n and 1 <= b <= n]


def hex_connected(n: int, owner: dict[tuple[int, int], int], player: int) -> bool:
    """BFS over the player's stones between their two opposite edges.

    Player 1 joins row 1 to row n, player 2 joins column 1 to column n.
    """
    if player == 1:
        sources = [(1, c) for c in range(1, n + 1)]
        def done(cell): return cell[0] == n
    else:
        sources = [(r, 1) for r in range(1, n + 1)]
        def done(cell): return cell[1] == n
    frontier = [cell for cell in sources if owner.get(cell) == player]
    visited = set(frontier)
    while frontier:
        cell = frontier.pop()
        if done(cell):
            return True
        for nb in hex_neighbors(n, *cell):
            if nb not in visited and owner.get(nb) == player:
                visited.add(nb)
                frontier.append(nb)
    return False


def random_full_hex(n: int, rng: random.Random) -> dict[tuple[int, int], int]:
    cells = [(r, c) for r in range(1, n + 1) for c in range(1, n + 1)]
    colors = [1, 2] * (len(cells) // 2) + [1] * (len(cells) % 2)
    rng.shuffle(colors)
    return dict(zip(cells, colors))


# ---------------------------------------------------------------------------
# EBNF recognizer driven purely by emitted grammar text
# ---------------------------------------------------------------------------


class _Lit:
    def __init__(self, text): self.text = text


class _IntClass:
    def __init__(self, lo, hi): self.lo, self.hi = lo, hi


class _StrClass:
    pass


class _Ref:
    def __init__(self, name): self.name = name


class _Repeat:
    def __init__(self, item, at_least_one): self.item, self.at_least_one = item, at_least_one


def _parse_symbol(text: str):
    if text.endswith("*") or text.endswith("+"):
        return _Repeat(_parse_symbol(text[:-1]), text.endswith("+"))
    if text.startswith("'") and text.endswith("'"):
        return _Lit(text[1:-1])
    if text == "string":
        return _StrClass()
    if text.startswith("int(") and text.endswith(")"):
        lo_text, _, hi_text = text[4:-1].partition("..")
        return _IntClass(int(lo_text), int(hi_text) if hi_text else None)
    return _Ref(text)


def parse_ebnf(grammar_text: str) -> dict[str, list[list]]:
    productions: dict[str, list[list]] = {}
    for line in grammar_text.splitlines():
        line = line.strip()
        if not line:
            continue
        name, _, rhs = line.partition("::=")
        alternatives = []
        for alt in rhs.split("|"):
            alternatives.append([_parse_symbol(s) for s in alt.split()])
        productions[name.strip()] = alternatives
    return productions


class EbnfRecognizer:
    """Checks token-stream derivability from an emitted grammar.

    Built only from the grammar text; shares nothing with the validator.
    """

    def __init__(self, grammar_text: str):
        self.productions = parse_ebnf(grammar_text)

    def accepts(self, tokens, start: str = "game") -> bool:
        self._tokens = [(t.kind, t.text) for t in tokens]
        self._memo: dict = {}
        return len(self._tokens) in self._match_ref(start, 0)

    def _match_ref(self, name: str, pos: int) -> set[int]:
        key = (name, pos)
        if key in self._memo:
            return self._memo[key]
        self._memo[key] = set()  # grammar is non-recursive; guards reentry
        ends = set()
        for alternative in self.productions[name]:
            ends |= self._match_seq(alternative, pos)
        self._memo[key] = ends
        return ends

    def _match_seq(self, symbols, pos: int) -> set[int]:
        positions = {pos}
        for symbol in symbols:
            positions = {e for p in positions for e in self._match_one(symbol, p)}
            if not positions:
                break
        return positions

    def _match_one(self, symbol, pos: int) -> set[int]:
        if isinstance(symbol, _Repeat):
            ends = set() if symbol.at_least_one else {pos}
            frontier = {pos}
            while frontier:
                step = {e for p in frontier for e in self._match_one(symbol.item, p)}
                step -= ends
                ends |= step
                frontier = step
            return ends
        if pos >= len(self._tokens):
            return set()
        kind, text = self._tokens[pos]
        if isinstance(symbol, _Lit):
            return {pos + 1} if text == symbol.text and kind != "string" else set()
        if isinstance(symbol, _StrClass):
            return {pos + 1} if kind == "string" else set()
        if isinstance(symbol, _IntClass):
            if kind != "integer":
                return set()
            value = int(text)
            if value < symbol.lo or (symbol.hi is not None and value > symbol.hi):
                return set()
            return {pos + 1}
        return self._match_ref(symbol.name, pos)


# ---------------------------------------------------------------------------
# Random registry-conforming game trees
# ---------------------------------------------------------------------------


def random_conforming_tree(registry, rng: random.Random):
    """Build a random tree straight from registry signatures.

    Role atoms are restricted to the declared player count, the one
    constraint the context-free grammar cannot carry.
    """
    from ludokit.grammar import LudemeNode, NodeList, Symbol

    players = rng.randint(1, 2)

    def build(keyword: str):
        sig = registry.signature(keyword)
        if sig.atom:
            return Symbol(keyword) if rng.random() < 0.5 else LudemeNode(keyword)
        args = []
        for param in sig.params:
            if param.kind == "string":
                args.append(rng.choice(("Hex", "Demo", "G1", "a b")))
            elif param.kind == "int":
                if param.name == "players":
                    args.append(players)
                else:
                    hi = param.max_value if param.max_value is not None else param.min_value + 7
                    args.append(rng.randint(param.min_value, hi))
            elif param.kind == "term":
                args.append(Symbol(rng.choice(registry.terminal(param.ref))))
            elif param.repeat == "braced":
                count = rng.randint(1, 3)
                args.append(NodeList(tuple(build(pick(param.ref)) for _ in range(count))))
            elif param.repeat == "plus":
                for _ in range(rng.randint(1, 2)):
                    args.append(build(pick(param.ref)))
            else:
                args.append(build(pick(param.ref)))
        return LudemeNode(keyword, tuple(args))

    def pick(ref: str) -> str:
        members = registry.categories().get(ref) if callable(registry.categories) else registry.categories.get(ref)
        if members is None:
            return ref
        members = [m for m in members if not (players == 1 and m == "P2")]
        return rng.choice(members)

    return build("game")


def mutate_unknown_keyword(tree, rng: random.Random):
    """Replace one node keyword (or atom symbol) with an unknown name."""
    from ludokit.grammar import LudemeNode, NodeList, Symbol

    spots = []

    def walk(node, path):
        if isinstance(node, LudemeNode):
            spots.append(path)
            for i, arg in enumerate(node.args):
                walk(arg, path + (i,))
        elif isinstance(node, NodeList):
            for i, item in enumerate(node.items):
                walk(item, path + (i,))
        elif isinstance(node, Symbol):
            spots.append(path)

    walk(tree, ())
    target = rng.choice(spots)
    bogus = f"zz{rng.randrange(10_000)}"

    def rebuild(node, path):
        if path == target:
            if isinstance(node, Symbol):
                return Symbol(bogus)
            return LudemeNode(bogus, node.args)
        if isinstance(node, LudemeNode):
            return LudemeNode(
                node.keyword,
                tuple(rebuild(a, path + (i,)) if isinstance(a, (LudemeNode, NodeList, Symbol)) else a
                      for i, a in enumerate(node.args)),
            )
        if isinstance(node, NodeList):
            return NodeList(tuple(rebuild(item, path + (i,)) for i, item in enumerate(node.items)))
        return node

    return rebuild(tree, ())
