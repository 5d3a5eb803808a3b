"""EBNF emission for a ludeme registry.

One production per signature, then one per category (in first-appearance
order), then one per terminal class. Literal terminals are single-quoted;
`string` and bounded `int(lo..hi)` are lexical primitives the reader is
expected to know. Because productions are derived straight from the
registry, adding a signature changes the grammar with no other code
change.
"""

from __future__ import annotations

from .registry import INT, STRING, TERM, Param, Registry, Signature


def emit_grammar(registry: Registry) -> str:
    lines = [_production(sig) for sig in registry.signatures]
    for name, members in registry.categories().items():
        lines.append(f"{name} ::= " + " | ".join(members))
    for name in _referenced_terminals(registry):
        values = registry.terminal(name) or ()
        lines.append(f"{name} ::= " + " | ".join(f"'{v}'" for v in values))
    return "\n".join(lines) + ("\n" if lines else "")


def _production(sig: Signature) -> str:
    if sig.atom:
        return f"{sig.keyword} ::= '{sig.keyword}' | '(' '{sig.keyword}' ')'"
    body = " ".join(["'('", f"'{sig.keyword}'"] + [_param(p) for p in sig.params] + ["')'"])
    return f"{sig.keyword} ::= {body}"


def _param(p: Param) -> str:
    if p.kind == STRING:
        return "string"
    if p.kind == INT:
        lo = "" if p.min_value is None else str(p.min_value)
        hi = "" if p.max_value is None else str(p.max_value)
        return f"int({lo}..{hi})"
    ref = p.ref
    if p.repeat == "braced":
        return f"'{{' {ref}* '}}'"
    if p.repeat == "plus":
        return f"{ref}+"
    return ref


def _referenced_terminals(registry: Registry) -> list[str]:
    seen: list[str] = []
    for sig in registry.signatures:
        for p in sig.params:
            if p.kind == TERM and p.ref not in seen:
                seen.append(p.ref)
    return seen
