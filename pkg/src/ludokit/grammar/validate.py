"""Static checking of description trees against a ludeme registry.

`validate` returns a list of ParseError (empty means the tree is valid).
Errors are anchored at the enclosing node's keyword position and repeat
the keyword and the offending lexeme in the message, so a reported
position always points into the neighborhood the message talks about.

Beyond the grammar itself there is one context-sensitive rule: an
indexed role `P<n>` must reference a declared player, so `P3` is out of
range in a two-player game even though it is lexically well-formed.
"""

from __future__ import annotations

import re

from .ast import LudemeNode, NodeList, ParseError, Symbol
from .registry import INT, STRING, TERM, Param, Registry, Signature, builtin_registry

_INDEXED_ROLE = re.compile(r"^P([0-9]+)$")


def validate(tree: LudemeNode, registry: Registry | None = None) -> list[ParseError]:
    """Check `tree` bottom-up; an empty result means valid."""
    registry = registry if registry is not None else builtin_registry()
    errors: list[ParseError] = []
    players = _declared_players(tree)
    _check_node(tree, registry, players, errors)
    return errors


def _declared_players(tree: LudemeNode) -> int | None:
    if tree.keyword == "mode":
        for a in tree.args:
            if isinstance(a, int):
                return a
        return None
    for a in tree.args:
        found = None
        if isinstance(a, LudemeNode):
            found = _declared_players(a)
        elif isinstance(a, NodeList):
            for item in a.items:
                found = _declared_players(item)
                if found is not None:
                    break
        if found is not None:
            return found
    return None


def _check_node(node: LudemeNode, registry: Registry, players: int | None,
                errors: list[ParseError]) -> None:
    sig = registry.signature(node.keyword)
    if sig is None:
        errors.append(_error(node, f"unknown ludeme {node.keyword!r}"))
        return
    _check_args(node, sig, registry, players, errors)


def _check_args(node: LudemeNode, sig: Signature, registry: Registry,
                players: int | None, errors: list[ParseError]) -> None:
    args = node.args
    params = sig.params
    fixed = [p for p in params if p.repeat != "plus"]
    tail = params[-1] if params and params[-1].repeat == "plus" else None

    need = len(fixed)
    if tail is not None:
        if len(args) < need + 1:
            errors.append(_error(
                node, f"arity mismatch: {node.keyword!r} expects at least "
                      f"{need + 1} arguments, found {len(args)}"))
    elif len(args) != need:
        errors.append(_error(
            node, f"arity mismatch: {node.keyword!r} expects {need} "
                  f"arguments, found {len(args)}"))

    for i, arg in enumerate(args):
        if i < len(fixed):
            param = fixed[i]
        elif tail is not None:
            param = tail
        else:
            break
        _check_arg(node, param, arg, registry, players, errors)


def _check_arg(node: LudemeNode, param: Param, arg, registry: Registry,
               players: int | None, errors: list[ParseError]) -> None:
    if param.kind == STRING:
        if not isinstance(arg, str):
            errors.append(_mismatch(node, param, arg, "a string"))
        return
    if param.kind == INT:
        if not isinstance(arg, int):
            errors.append(_mismatch(node, param, arg, "an integer"))
        elif not _in_bounds(arg, param):
            errors.append(_error(node, f"{node.keyword!r}: {_bounds_message(param)}, found {arg}"))
        return
    if param.kind == TERM:
        values = registry.terminal(param.ref) or ()
        if not (isinstance(arg, Symbol) and arg.name in values):
            errors.append(_mismatch(node, param, arg, f"one of {', '.join(values)}"))
        return

    # REF: a nested ludeme, matched by keyword or by category membership
    if param.repeat == "braced":
        if not isinstance(arg, NodeList):
            errors.append(_mismatch(node, param, arg, "a brace-delimited list"))
            return
        for item in arg.items:
            _check_ref(node, param, item, registry, players, errors)
        return
    _check_ref(node, param, arg, registry, players, errors)


def _check_ref(node: LudemeNode, param: Param, arg, registry: Registry,
               players: int | None, errors: list[ParseError]) -> None:
    categories = registry.categories()
    members = categories.get(param.ref)
    allowed = members if members is not None else (param.ref,)
    role_like = param.ref == "role"

    if isinstance(arg, Symbol):
        # indexed roles are range-checked even when registered (P2 in mode 1)
        if role_like and _INDEXED_ROLE.match(arg.name):
            _check_indexed_role(node, arg.name, players, errors)
            return
        sym_sig = registry.signature(arg.name)
        if sym_sig is not None and sym_sig.atom and arg.name in allowed:
            return
        errors.append(_mismatch(node, param, arg, _expected(param.ref, members)))
        return

    if isinstance(arg, LudemeNode):
        if role_like and _INDEXED_ROLE.match(arg.keyword):
            if arg.args:
                errors.append(_error(node, f"arity mismatch: role {arg.keyword!r} takes no arguments"))
                return
            _check_indexed_role(node, arg.keyword, players, errors)
            return
        if arg.keyword in allowed:
            _check_node(arg, registry, players, errors)
            return
        if registry.signature(arg.keyword) is None:
            # name the root cause, not the slot it fails to fill
            errors.append(_error(arg, f"unknown ludeme {arg.keyword!r}"))
            return
        errors.append(_mismatch(node, param, arg, _expected(param.ref, members)))
        return

    errors.append(_mismatch(node, param, arg, _expected(param.ref, members)))


def _check_indexed_role(node: LudemeNode, name: str, players: int | None,
                        errors: list[ParseError]) -> bool:
    """True when `name` is an indexed role; appends an error if out of range."""
    m = _INDEXED_ROLE.match(name)
    if not m:
        return False
    index = int(m.group(1))
    limit = players if players is not None else 2
    if index < 1 or index > limit:
        errors.append(_error(
            node, f"{node.keyword!r}: role {name} out of range ({limit} players declared)"))
    return True


def _in_bounds(value: int, param: Param) -> bool:
    if param.min_value is not None and value < param.min_value:
        return False
    if param.max_value is not None and value > param.max_value:
        return False
    return True


def _bounds_message(param: Param) -> str:
    lo, hi = param.min_value, param.max_value
    if lo is not None and hi is not None:
        if hi - lo == 1:
            return f"{param.name} must be {lo} or {hi}"
        return f"{param.name} must be between {lo} and {hi}"
    if lo is not None:
        return f"{param.name} must be at least {lo}"
    return f"{param.name} must be at most {hi}"


def _expected(ref: str, members) -> str:
    if members is not None:
        return f"a {ref} ({', '.join(members)})"
    return f"{ref!r}"


def _describe(arg) -> str:
    if isinstance(arg, LudemeNode):
        return f"({arg.keyword} ...)" if arg.args else f"({arg.keyword})"
    if isinstance(arg, Symbol):
        return arg.name
    if isinstance(arg, str):
        return f'"{arg}"'
    if isinstance(arg, NodeList):
        return "{...}"
    return repr(arg)


def _mismatch(node: LudemeNode, param: Param, arg, expected: str) -> ParseError:
    return _error(node, f"{node.keyword!r}: parameter {param.name!r} expects "
                        f"{expected}, found {_describe(arg)}")


def _error(node: LudemeNode, message: str) -> ParseError:
    return ParseError(message, node.position, node.keyword)
