"""Agent specs as compact strings, e.g. `uct?c=1.41&iters=10000&seed=3`.

The part before `?` is the agent kind; the query string carries
parameters. Used by the CLI and the TOML config.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional
from urllib.parse import parse_qsl

from .base import Agent, AgentConfigError
from .flat_mc import FlatMonteCarloAgent
from .random_agent import RandomAgent
from .uct import DEFAULT_C, UctAgent

KINDS = ("random", "flat-mc", "uct")


@dataclass(frozen=True)
class AgentConfig:
    kind: str
    c: float = DEFAULT_C
    iterations: Optional[int] = None
    playouts: Optional[int] = None
    seed: int = 0
    cap: int = 1000
    name: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise AgentConfigError(f"unknown agent kind {self.kind!r}")
        if self.c <= 0:
            raise AgentConfigError("exploration constant c must be positive")

    @property
    def spec_string(self) -> str:
        parts = []
        if self.kind == "uct":
            parts.append(f"c={self.c}")
            if self.iterations is not None:
                parts.append(f"iters={self.iterations}")
        if self.kind == "flat-mc" and self.playouts is not None:
            parts.append(f"playouts={self.playouts}")
        if self.seed:
            parts.append(f"seed={self.seed}")
        return self.kind + ("?" + "&".join(parts) if parts else "")

    def build(self) -> Agent:
        if self.kind == "random":
            return RandomAgent(seed=self.seed)
        if self.kind == "flat-mc":
            return FlatMonteCarloAgent(seed=self.seed, playouts=self.playouts, cap=self.cap)
        return UctAgent(seed=self.seed, c=self.c, iterations=self.iterations, cap=self.cap)


def parse_agent(text: str) -> AgentConfig:
    kind, _, query = text.partition("?")
    kind = kind.strip()
    fields: dict = {"kind": kind}
    for key, value in parse_qsl(query, keep_blank_values=True):
        try:
            if key == "c":
                fields["c"] = float(value)
            elif key in ("iters", "iterations"):
                fields["iterations"] = int(value)
            elif key == "playouts":
                fields["playouts"] = int(value)
            elif key == "seed":
                fields["seed"] = int(value)
            elif key == "cap":
                fields["cap"] = int(value)
            elif key == "name":
                fields["name"] = value
            else:
                raise AgentConfigError(f"unknown agent parameter {key!r}")
        except ValueError:
            raise AgentConfigError(f"bad value for agent parameter {key!r}: {value!r}") from None
    return AgentConfig(**fields)


def build_agent(text: str) -> Agent:
    return parse_agent(text).build()
