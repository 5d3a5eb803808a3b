"""Turn a validated description tree into a playable GameSpec.

Compilation resolves the board, attaches regions as cell sets, fixes the
piece policy and freezes the end rules in description order. Checks that
need the whole game (a `connect` role without two regions, a region
assigned to a non-player role) live here rather than in the validator.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..grammar import LudemeNode, NodeList, Symbol, validate
from ..grammar.registry import Registry
from .board import BoardGraph, Region, build_board

_BOARD_FAMILIES = {"HexBoard": "hex", "SquareBoard": "square"}

# role codes used throughout the engine
MOVER = 0
EACH = -1


class CompileError(Exception):
    pass


@dataclass(frozen=True)
class Condition:
    """End condition: kind is connect | line | full | noMoves.

    `role` uses player numbers, with MOVER (0) for the player who just
    moved and EACH (-1) for any player. `length` is the line length.
    """

    kind: str
    role: int = MOVER
    length: int = 0


@dataclass(frozen=True)
class EndRule:
    condition: Condition
    who: int  # result role, same coding as Condition.role
    outcome: str  # "Win" | "Loss" | "Draw"


@dataclass(frozen=True)
class GameSpec:
    name: str
    players: int
    board: BoardGraph
    end_rules: tuple[EndRule, ...]
    tree: LudemeNode = field(compare=False, default=None)

    @property
    def cell_count(self) -> int:
        return self.board.cell_count


def compile_game(tree: LudemeNode, registry: Registry | None = None,
                 check: bool = True) -> GameSpec:
    """Compile `tree`; with check=True the tree is validated first."""
    if check:
        errors = validate(tree, registry)
        if errors:
            raise CompileError(str(errors[0]))
    if tree.keyword != "game":
        raise CompileError(f"root must be a game, found {tree.keyword!r}")

    name = tree.args[0]
    mode = _child(tree, "mode")
    players = next(a for a in mode.args if isinstance(a, int))
    equipment = _child(tree, "equipment")
    rules = _child(tree, "rules")

    board = None
    region_edges: list[tuple[int, str]] = []
    saw_ball = False
    items = next(a for a in equipment.args if isinstance(a, NodeList))
    for item in items:
        if item.keyword in _BOARD_FAMILIES:
            if board is not None:
                raise CompileError("equipment declares more than one board")
            board = build_board(_BOARD_FAMILIES[item.keyword], item.args[0])
        elif item.keyword == "ball":
            owner = _role_name(item.args[0])
            if owner != "Each":
                raise CompileError(f"only (ball Each) is supported, found (ball {owner})")
            saw_ball = True
        elif item.keyword == "region":
            owner = _role_name(item.args[0])
            player = _player_number(owner, players)
            if player is None:
                raise CompileError(f"region role must be a declared player, found {owner}")
            edge = _child(item, "edge")
            region_edges.append((player, edge.args[0].name))
    if board is None:
        raise CompileError("equipment declares no board")
    if not saw_ball:
        raise CompileError("equipment declares no pieces: (ball Each) required")
    board = board.with_regions(tuple(
        Region(player, board.edge_cells(direction)) for player, direction in region_edges))

    end_rules = []
    for end in (a for a in rules.args if isinstance(a, LudemeNode) and a.keyword == "end"):
        end_rules.append(_end_rule(end, players))
    if not end_rules:
        raise CompileError("rules declare no end rule")

    spec = GameSpec(name, players, board, tuple(end_rules), tree)
    _check_connect_regions(spec)
    return spec


def _end_rule(end: LudemeNode, players: int) -> EndRule:
    cond_node, result_node = end.args
    kind = cond_node.keyword
    if kind == "connect":
        condition = Condition("connect", _role_code(cond_node.args[0], players))
    elif kind == "line":
        condition = Condition("line", _role_code(cond_node.args[1], players),
                              length=cond_node.args[0])
    else:
        condition = Condition(kind)
    who = _role_code(result_node.args[0], players)
    outcome = _role_name(result_node.args[1])
    if players == 2 and who == EACH and outcome != "Draw":
        raise CompileError("result for Each must be Draw in a 2-player game")
    return EndRule(condition, who, outcome)


def _check_connect_regions(spec: GameSpec) -> None:
    for rule in spec.end_rules:
        if rule.condition.kind != "connect":
            continue
        role = rule.condition.role
        if role in (MOVER, EACH):
            players = range(1, spec.players + 1)
        else:
            players = (role,)
        for p in players:
            if len(spec.board.region_sets(p)) < 2:
                raise CompileError(f"connect requires two regions for P{p}")


def _child(node: LudemeNode, keyword: str) -> LudemeNode:
    for a in node.args:
        if isinstance(a, LudemeNode) and a.keyword == keyword:
            return a
    raise CompileError(f"{node.keyword!r} is missing its {keyword!r} part")


def _role_name(arg) -> str:
    """Roles and outcomes appear either bare or parenthesized."""
    if isinstance(arg, Symbol):
        return arg.name
    if isinstance(arg, LudemeNode):
        return arg.keyword
    raise CompileError(f"expected a role, found {arg!r}")


def _player_number(name: str, players: int) -> int | None:
    if name.startswith("P") and name[1:].isdigit():
        n = int(name[1:])
        if 1 <= n <= players:
            return n
    return None


def _role_code(arg, players: int) -> int:
    name = _role_name(arg)
    if name == "mover":
        return MOVER
    if name == "Each":
        return EACH
    player = _player_number(name, players)
    if player is None:
        raise CompileError(f"unknown role {name!r}")
    return player
