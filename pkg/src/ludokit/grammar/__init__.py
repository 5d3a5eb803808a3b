"""Game description language: tokenizer, parser, registry, validator, printer, grammar emitter."""

from .ast import LudemeNode, NodeList, ParseError, Symbol, parse, parse_text, render
from .registry import Param, Registry, Signature, builtin_registry
from .tokens import Token, tokenize
from .validate import validate
from .ebnf import emit_grammar

__all__ = [
    "LudemeNode",
    "NodeList",
    "Param",
    "ParseError",
    "Registry",
    "Signature",
    "Symbol",
    "Token",
    "builtin_registry",
    "emit_grammar",
    "parse",
    "parse_text",
    "render",
    "tokenize",
    "validate",
]
