"""Ludeme registry: one signature per keyword, grouped into categories.

The registry is the single source both the validator and the grammar
emitter read from, so the accepted language and the emitted grammar
cannot drift apart. A signature describes the ordered parameters of one
ludeme; a category groups alternative ludemes under one grammar
nonterminal (e.g. `connect`, `line`, `full` and `noMoves` are the
`condition` alternatives).
"""

from __future__ import annotations

from dataclasses import dataclass, field

INT = "int"
STRING = "string"
REF = "ref"
TERM = "term"


@dataclass(frozen=True)
class Param:
    """One parameter slot of a signature.

    kind INT/STRING match literal tokens; REF matches a nested ludeme,
    by keyword or by category name; TERM matches a bare identifier drawn
    from a named terminal class. repeat "" is a single slot, "braced" a
    brace-delimited list of zero or more, "plus" one-or-more filling the
    remaining argument positions.
    """

    name: str
    kind: str
    ref: str = ""
    min_value: int | None = None
    max_value: int | None = None
    repeat: str = ""


@dataclass(frozen=True)
class Signature:
    """Parameter schema for one ludeme keyword.

    `category` names the alternatives group this ludeme belongs to, or
    None when other signatures reference it directly by keyword. `atom`
    marks a zero-parameter ludeme that may also be written as a bare
    identifier (roles and outcomes).
    """

    keyword: str
    params: tuple[Param, ...] = ()
    category: str | None = None
    atom: bool = False

    def __post_init__(self):
        if self.atom and self.params:
            raise ValueError(f"atom ludeme {self.keyword!r} cannot take parameters")
        # a "plus" repeat swallows every remaining argument, so it only
        # makes sense in the final slot
        for p in self.params[:-1]:
            if p.repeat == "plus":
                raise ValueError(f"{self.keyword!r}: repeated parameter {p.name!r} must come last")


class Registry:
    """Keyword -> Signature table with derived categories and terminal classes."""

    def __init__(self):
        self._signatures: dict[str, Signature] = {}
        self._terminals: dict[str, tuple[str, ...]] = {}

    def add(self, sig: Signature) -> None:
        if sig.keyword in self._signatures:
            raise ValueError(f"duplicate signature for {sig.keyword!r}")
        self._signatures[sig.keyword] = sig

    def add_terminal(self, name: str, values: tuple[str, ...]) -> None:
        if name in self._terminals:
            raise ValueError(f"duplicate terminal class {name!r}")
        self._terminals[name] = tuple(values)

    def signature(self, keyword: str) -> Signature | None:
        return self._signatures.get(keyword)

    def terminal(self, name: str) -> tuple[str, ...] | None:
        return self._terminals.get(name)

    @property
    def signatures(self) -> tuple[Signature, ...]:
        return tuple(self._signatures.values())

    def categories(self) -> dict[str, tuple[str, ...]]:
        """Category name -> member keywords, in first-appearance order."""
        out: dict[str, list[str]] = {}
        for sig in self._signatures.values():
            if sig.category is not None:
                out.setdefault(sig.category, []).append(sig.keyword)
        return {name: tuple(members) for name, members in out.items()}

    def check(self) -> None:
        """Verify every parameter reference resolves inside this registry."""
        categories = self.categories()
        for sig in self._signatures.values():
            for p in sig.params:
                if p.kind == REF:
                    known = (p.ref in self._signatures) or (p.ref in categories)
                    if not known:
                        raise ValueError(f"{sig.keyword!r}: unresolved reference {p.ref!r}")
                elif p.kind == TERM and p.ref not in self._terminals:
                    raise ValueError(f"{sig.keyword!r}: unknown terminal class {p.ref!r}")


def builtin_registry() -> Registry:
    """The stock game-description language."""
    r = Registry()
    r.add(Signature("game", (
        Param("name", STRING),
        Param("mode", REF, "mode"),
        Param("equipment", REF, "equipment"),
        Param("rules", REF, "rules"),
    )))
    r.add(Signature("mode", (
        Param("players", INT, min_value=1, max_value=2),
        Param("moveKind", REF, "addToEmpty"),
    )))
    r.add(Signature("addToEmpty"))
    r.add(Signature("equipment", (
        Param("items", REF, "item", repeat="braced"),
    )))
    r.add(Signature("HexBoard", (Param("side", INT, min_value=2),), category="item"))
    r.add(Signature("SquareBoard", (Param("side", INT, min_value=2),), category="item"))
    r.add(Signature("ball", (Param("owner", REF, "role"),), category="item"))
    r.add(Signature("region", (
        Param("owner", REF, "role"),
        Param("edge", REF, "edge"),
    ), category="item"))
    r.add(Signature("edge", (Param("dir", TERM, "direction"),)))
    r.add(Signature("rules", (
        Param("play", REF, "play"),
        Param("end", REF, "end", repeat="plus"),
    )))
    r.add(Signature("play", (Param("rule", REF, "play-rule"),)))
    r.add(Signature("to", (Param("target", REF, "target"),), category="play-rule"))
    r.add(Signature("empty", category="target"))
    r.add(Signature("end", (
        Param("condition", REF, "condition"),
        Param("result", REF, "result"),
    )))
    r.add(Signature("connect", (Param("who", REF, "role"),), category="condition"))
    r.add(Signature("line", (
        Param("length", INT, min_value=2),
        Param("who", REF, "role"),
    ), category="condition"))
    r.add(Signature("full", category="condition"))
    r.add(Signature("noMoves", category="condition"))
    r.add(Signature("result", (
        Param("who", REF, "role"),
        Param("outcome", REF, "outcome"),
    )))
    for name in ("P1", "P2", "mover", "Each"):
        r.add(Signature(name, category="role", atom=True))
    for name in ("Win", "Loss", "Draw"):
        r.add(Signature(name, category="outcome", atom=True))
    r.add_terminal("direction", ("N", "S", "E", "W", "NE", "NW", "SE", "SW"))
    r.check()
    return r
