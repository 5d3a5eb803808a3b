"""Baseline game and rule generation over the ludeme registry.

The generator assembles complete game trees by sampling equipment and
end rules under explicit constraints, or regenerates only the `rules`
subtree of a fixed base game. Output is deterministic in the seed; no
search or learning is involved, which is the point: it supplies the
haystack the ranking pipeline digs through.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from ..grammar import LudemeNode, NodeList, Registry, Symbol, builtin_registry

_BOARDS = {"HexBoard": "hex", "SquareBoard": "square"}
_BOARD_FOR = {family: kw for kw, family in _BOARDS.items()}
_CONDITIONS = ("connect", "full", "line", "noMoves")
# keywords present in every generated game regardless of sampling
_ALWAYS = frozenset({"game", "mode", "addToEmpty", "equipment", "ball", "Each",
                     "rules", "play", "to", "empty", "end", "result"})
# the standard edge ownership: first player joins top to bottom
_REGION_EDGES = (("P1", "N"), ("P1", "S"), ("P2", "W"), ("P2", "E"))

# a complete game is game > rules > play > to > empty: five levels
_MIN_DEPTH = 5


class GenError(ValueError):
    """Constraints that no generated game can satisfy."""


@dataclass(frozen=True)
class GenConstraints:
    """Bounds on what generate_game may produce.

    `require` lists ludeme keywords the output must contain; `base`
    switches to rule generation: the output is `base` with a freshly
    generated `rules` subtree and nothing else changed.
    """

    require: frozenset[str] = frozenset()
    families: tuple[str, ...] = ("hex", "square")
    min_side: int = 2
    max_side: int = 9
    players: int = 2
    max_depth: int = 6
    base: Optional[LudemeNode] = None

    def __post_init__(self):
        object.__setattr__(self, "require", frozenset(self.require))
        if self.players not in (1, 2):
            raise GenError("players must be 1 or 2")
        if self.min_side < 2 or self.max_side < self.min_side:
            raise GenError("side bounds must satisfy 2 <= min <= max")
        for family in self.families:
            if family not in _BOARD_FOR:
                raise GenError(f"unknown board family {family!r}")
        if not self.families:
            raise GenError("board family allow-list is empty")


def generate_game(registry: Optional[Registry] = None,
                  constraints: Optional[GenConstraints] = None,
                  seed: int = 0) -> LudemeNode:
    """One constraint-satisfying game tree, deterministic in `seed`."""
    registry = registry or builtin_registry()
    cons = constraints or GenConstraints()
    _check_satisfiable(cons, registry)
    rng = random.Random(seed)

    if cons.base is not None:
        return _regenerate_rules(cons, rng)

    board_kw = _required_board(cons)
    if board_kw is None:
        family = cons.families[rng.randrange(len(cons.families))]
        board_kw = _BOARD_FOR[family]
    side = rng.randint(cons.min_side, cons.max_side)

    rules, wants_regions = _gen_rules(cons, rng, side, cons.players,
                                      allow_connect=True)
    items = [_node(board_kw, side), _node("ball", Symbol("Each"))]
    if wants_regions:
        for role, direction in _REGION_EDGES[: 2 * cons.players]:
            items.append(_node("region", Symbol(role), _node("edge", Symbol(direction))))
    equipment = _node("equipment", NodeList(tuple(items)))
    mode = _node("mode", cons.players, _node("addToEmpty"))
    return _node("game", f"gen-{seed}", mode, equipment, rules)


def _regenerate_rules(cons: GenConstraints, rng: random.Random) -> LudemeNode:
    base = cons.base
    if not isinstance(base, LudemeNode) or base.keyword != "game" or len(base.args) != 4:
        raise GenError("rule generation needs a complete (game ...) base tree")
    name, mode, equipment, _old_rules = base.args
    side = _base_side(equipment)
    players = _base_players(mode)
    rules, wants_regions = _gen_rules(cons, rng, side, players,
                                      allow_connect=_has_region_pairs(equipment, players))
    if wants_regions and not _has_region_pairs(equipment, players):
        raise GenError("connect requires region pairs in the fixed equipment")
    return LudemeNode("game", (name, mode, equipment, rules), base.position)


def _check_satisfiable(cons: GenConstraints, registry: Registry) -> None:
    for keyword in cons.require:
        if registry.signature(keyword) is None:
            raise GenError(f"required keyword {keyword!r} is not in the registry")
    boards = cons.require & set(_BOARDS)
    if len(boards) > 1:
        raise GenError("a game has one board; cannot require two board kinds")
    for board in boards:
        if cons.base is not None:
            if _board_keyword(_game_equipment(cons.base)) != board:
                raise GenError(f"base equipment does not use {board}")
        elif _BOARDS[board] not in cons.families:
            raise GenError(f"required {board} excluded by the family allow-list")
    reachable = _ALWAYS | set(_BOARDS) | set(_CONDITIONS) | {"region", "edge"}
    for keyword in cons.require - reachable:
        raise GenError(f"required keyword {keyword!r} is not reachable by this generator")
    if cons.max_depth < _MIN_DEPTH:
        raise GenError(f"a complete game needs tree depth {_MIN_DEPTH}")
    if cons.base is not None and (cons.require & ({"region", "edge", "connect"})):
        if not _has_region_pairs(_game_equipment(cons.base), _base_players(cons.base.args[1])):
            raise GenError("connect requires region pairs in the fixed equipment")


def _gen_rules(cons: GenConstraints, rng: random.Random, side: int,
               players: int, allow_connect: bool) -> tuple[LudemeNode, bool]:
    """(rules ...) subtree plus whether the equipment needs edge regions."""
    kinds = sorted(cons.require & set(_CONDITIONS))
    if cons.require & {"region", "edge"} and "connect" not in kinds:
        kinds.append("connect")
    pool = [k for k in _CONDITIONS if k not in kinds and (k != "connect" or allow_connect)]
    rng.shuffle(pool)
    target = max(len(kinds), rng.randint(1, 3))
    while len(kinds) < target and pool:
        kinds.append(pool.pop())
    rng.shuffle(kinds)

    ends = []
    for kind in kinds:
        if kind == "connect":
            ends.append(_node("end", _node("connect", Symbol("mover")),
                              _node("result", Symbol("mover"), Symbol("Win"))))
        elif kind == "line":
            n = rng.randint(2, max(2, min(side, 5)))
            outcome = "Loss" if rng.random() < 0.25 else "Win"
            ends.append(_node("end", _node("line", n, Symbol("mover")),
                              _node("result", Symbol("mover"), Symbol(outcome))))
        elif kind == "full":
            if players == 1:
                ends.append(_node("end", _node("full"),
                                  _node("result", Symbol("P1"), Symbol("Win"))))
            else:
                ends.append(_node("end", _node("full"),
                                  _node("result", Symbol("Each"), Symbol("Draw"))))
        else:  # noMoves: the player left without a move loses
            ends.append(_node("end", _node("noMoves"),
                              _node("result", Symbol("mover"), Symbol("Loss"))))
    play = _node("play", _node("to", _node("empty")))
    return _node("rules", play, *ends), "connect" in kinds


def _node(keyword: str, *args) -> LudemeNode:
    return LudemeNode(keyword, tuple(args))


def _required_board(cons: GenConstraints) -> Optional[str]:
    for keyword in _BOARDS:
        if keyword in cons.require:
            return keyword
    return None


def _game_equipment(base: LudemeNode) -> NodeList:
    if base.keyword != "game" or len(base.args) != 4:
        raise GenError("rule generation needs a complete (game ...) base tree")
    equipment = base.args[2]
    if not (isinstance(equipment, LudemeNode) and equipment.keyword == "equipment"):
        raise GenError("base tree has no equipment")
    return equipment.args[0]


def _board_keyword(items: NodeList) -> Optional[str]:
    for item in items:
        if isinstance(item, LudemeNode) and item.keyword in _BOARDS:
            return item.keyword
    return None


def _base_side(equipment: LudemeNode) -> int:
    for item in equipment.args[0]:
        if isinstance(item, LudemeNode) and item.keyword in _BOARDS:
            return item.args[0]
    raise GenError("base equipment declares no board")


def _base_players(mode: LudemeNode) -> int:
    if not (isinstance(mode, LudemeNode) and mode.keyword == "mode"):
        raise GenError("base tree has no mode")
    return mode.args[0]


def _has_region_pairs(items, players: int) -> bool:
    if isinstance(items, LudemeNode):
        items = items.args[0]
    counts: dict[str, int] = {}
    for item in items:
        if isinstance(item, LudemeNode) and item.keyword == "region":
            role = item.args[0]
            name = role.name if isinstance(role, Symbol) else role.keyword
            counts[name] = counts.get(name, 0) + 1
    return all(counts.get(f"P{p}", 0) >= 2 for p in range(1, players + 1))
