"""Description trees: parse tokens into ludeme nodes and print them back.

A node is `(keyword arg ...)`. Arguments are nested nodes, integers,
strings, bare identifiers (`Symbol`, used for roles/outcomes/directions)
or brace-delimited node lists (`NodeList`). Node positions are carried for
error reporting but ignored by structural equality, so
`parse(render(t)) == t` holds for any tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .tokens import (
    CLOSE_BRACE,
    CLOSE_PAREN,
    IDENTIFIER,
    INTEGER,
    OPEN_BRACE,
    OPEN_PAREN,
    STRING,
    LexError,
    Token,
    tokenize,
)


class ParseError(Exception):
    """Lex, parse or validation failure at a position in the input text."""

    def __init__(self, message: str, position: tuple[int, int] = (0, 0), lexeme: str = ""):
        super().__init__(f"{position[0]}:{position[1]}: {message}")
        self.message = message
        self.position = position
        self.lexeme = lexeme


@dataclass(frozen=True)
class Symbol:
    """A bare identifier argument, e.g. the role `P1` or the outcome `Win`."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class NodeList:
    """A brace-delimited, order-preserving list of nodes."""

    items: tuple["LudemeNode", ...]

    def __iter__(self):
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)


Argument = Union["LudemeNode", int, str, Symbol, NodeList]


@dataclass(frozen=True)
class LudemeNode:
    keyword: str
    args: tuple[Argument, ...] = ()
    position: tuple[int, int] = field(default=(0, 0), compare=False)

    def __post_init__(self):
        if not self.keyword:
            raise ValueError("ludeme keyword must be non-empty")

    def __str__(self) -> str:
        return render(self)


def parse(tokens: list[Token]) -> LudemeNode:
    """Parse a token list into a single root node.

    Raises ParseError on unbalanced delimiters, trailing tokens after the
    root, or a non-identifier in keyword position.
    """
    node, i = _parse_node(tokens, 0)
    if i != len(tokens):
        t = tokens[i]
        raise ParseError(f"trailing tokens after root node: {t.text!r}", t.position, t.text)
    return node


def parse_text(text: str) -> LudemeNode:
    """Tokenize and parse `text`; lex errors are re-raised as ParseError."""
    try:
        return parse(tokenize(text))
    except LexError as e:
        raise ParseError(e.message, e.position, e.lexeme) from None


def _end_position(tokens: list[Token]) -> tuple[int, int]:
    if not tokens:
        return (1, 1)
    t = tokens[-1]
    return (t.line, t.col + len(t.text))


def _parse_node(tokens: list[Token], i: int) -> tuple[LudemeNode, int]:
    if i >= len(tokens):
        raise ParseError("unbalanced delimiter: unexpected end of input", _end_position(tokens))
    t = tokens[i]
    if t.kind != OPEN_PAREN:
        raise ParseError(f"expected '(' but found {t.text!r}", t.position, t.text)
    i += 1
    if i >= len(tokens):
        raise ParseError("unbalanced delimiter: unexpected end of input", _end_position(tokens))
    kw = tokens[i]
    if kw.kind != IDENTIFIER:
        raise ParseError(f"expected a ludeme keyword but found {kw.text!r}", kw.position, kw.text)
    i += 1
    args: list[Argument] = []
    while True:
        if i >= len(tokens):
            raise ParseError("unbalanced delimiter: unexpected end of input", _end_position(tokens))
        t = tokens[i]
        if t.kind == CLOSE_PAREN:
            return LudemeNode(kw.text, tuple(args), kw.position), i + 1
        arg, i = _parse_argument(tokens, i)
        args.append(arg)


def _parse_argument(tokens: list[Token], i: int) -> tuple[Argument, int]:
    t = tokens[i]
    if t.kind == OPEN_PAREN:
        return _parse_node(tokens, i)
    if t.kind == OPEN_BRACE:
        i += 1
        items: list[LudemeNode] = []
        while True:
            if i >= len(tokens):
                raise ParseError("unbalanced delimiter: unexpected end of input", _end_position(tokens))
            t = tokens[i]
            if t.kind == CLOSE_BRACE:
                return NodeList(tuple(items)), i + 1
            node, i = _parse_node(tokens, i)
            items.append(node)
    if t.kind == INTEGER:
        return int(t.text), i + 1
    if t.kind == STRING:
        return t.text[1:-1], i + 1
    if t.kind == IDENTIFIER:
        return Symbol(t.text), i + 1
    raise ParseError(f"unexpected {t.text!r} in argument position", t.position, t.text)


_INLINE_WIDTH = 72


def render(tree: LudemeNode) -> str:
    """Deterministic canonical layout; `parse_text(render(t)) == t`."""
    return _render(tree, 0)


def _compact(arg: Argument) -> str:
    if isinstance(arg, LudemeNode):
        parts = [arg.keyword] + [_compact(a) for a in arg.args]
        return "(" + " ".join(parts) + ")"
    if isinstance(arg, NodeList):
        inner = " ".join(_compact(n) for n in arg.items)
        return "{" + inner + "}" if inner else "{}"
    if isinstance(arg, str):
        return '"' + arg + '"'
    return str(arg)


def _render(arg: Argument, indent: int) -> str:
    compact = _compact(arg)
    if indent + len(compact) <= _INLINE_WIDTH:
        return compact
    pad = " " * (indent + 2)
    if isinstance(arg, LudemeNode):
        lines = ["(" + arg.keyword]
        for a in arg.args:
            lines.append(pad + _render(a, indent + 2))
        lines[-1] += ")"
        return "\n".join(lines)
    if isinstance(arg, NodeList):
        lines = ["{"]
        for n in arg.items:
            lines.append(pad + _render(n, indent + 2))
        lines.append(" " * indent + "}")
        return "\n".join(lines)
    return compact
