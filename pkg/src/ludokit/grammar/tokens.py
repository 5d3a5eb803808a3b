"""Tokenizer for the game description language.

Lexical rules (the surface syntax is an interpretation; only one worked
description exists upstream, so comments, case-sensitivity and the absence
of string escapes are our choices, documented in the README):

  - `(` `)` `{` `}` are single-character delimiters
  - strings are double-quoted, no escape sequences, no embedded newline
  - integers are an optional minus followed by digits
  - identifiers are a letter followed by letters/digits (case-sensitive)
  - `//` starts a comment running to end of line
"""

from __future__ import annotations

from dataclasses import dataclass

OPEN_PAREN = "open-paren"
CLOSE_PAREN = "close-paren"
OPEN_BRACE = "open-brace"
CLOSE_BRACE = "close-brace"
STRING = "string"
INTEGER = "integer"
IDENTIFIER = "identifier"

_WHITESPACE = " \t\r\n"
_PUNCT = {"(": OPEN_PAREN, ")": CLOSE_PAREN, "{": OPEN_BRACE, "}": CLOSE_BRACE}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int

    @property
    def position(self) -> tuple[int, int]:
        return (self.line, self.col)


class LexError(Exception):
    """Raised for unterminated strings and illegal characters.

    Re-exported through ast.ParseError; kept separate so the tokenizer has
    no import cycle with the tree module.
    """

    def __init__(self, message: str, line: int, col: int, lexeme: str = ""):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col
        self.lexeme = lexeme

    @property
    def position(self) -> tuple[int, int]:
        return (self.line, self.col)


def tokenize(text: str) -> list[Token]:
    """Tokenize `text`, dropping comments. Positions are 1-based (line, col)."""
    tokens: list[Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in _WHITESPACE:
            i += 1
            col += 1
            continue
        if c == "/" and i + 1 < n and text[i + 1] == "/":
            while i < n and text[i] != "\n":
                i += 1
                col += 1
            continue
        if c in _PUNCT:
            tokens.append(Token(_PUNCT[c], c, line, col))
            i += 1
            col += 1
            continue
        if c == '"':
            start_line, start_col = line, col
            j = i + 1
            while j < n and text[j] not in '"\n':
                j += 1
            if j >= n or text[j] == "\n":
                raise LexError("unterminated string", start_line, start_col, text[i:j])
            lexeme = text[i : j + 1]
            tokens.append(Token(STRING, lexeme, start_line, start_col))
            col += j + 1 - i
            i = j + 1
            continue
        if c.isdigit() or (c == "-" and i + 1 < n and text[i + 1].isdigit()):
            start_col = col
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token(INTEGER, text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if c.isalpha():
            start_col = col
            j = i + 1
            while j < n and text[j].isalnum():
                j += 1
            tokens.append(Token(IDENTIFIER, text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        raise LexError(f"illegal character {c!r}", line, col, c)
    return tokens
