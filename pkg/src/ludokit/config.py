"""Run configuration loaded from a single TOML file.

A config file names the games, agents, regime, clock, and seed a run
should use, so tournaments are launched from one declarative document
instead of long command lines::

    regime = "forward-model"
    seed = 7

    [games]
    hex5 = "games/hex5.lud"
    ttt = "games/tictactoe.lud"

    [agents]
    mc = "flat-mc?playouts=50"
    uct = "uct?iters=1000&c=1.41"

    [clock]
    setup_ms = 60000
    move_ms = 5000
    max_violations = 3

Game values are paths to .lud files, resolved relative to the config
file itself. Agent values are agent spec strings; the table key becomes
the agent's display name unless the spec sets one.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import tomli

from .agents import REGIMES, AgentConfig, parse_agent
from .arena import TimeControl
from .engine import GameSpec, compile_game
from .grammar import parse_text


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    games: dict[str, GameSpec] = field(default_factory=dict)
    agents: list[AgentConfig] = field(default_factory=list)
    regime: str = "forward-model"
    time_control: Optional[TimeControl] = None
    seed: int = 0


def _require_table(value, name: str) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(f"[{name}] must be a table")
    return value


def load_config(path: str) -> RunConfig:
    """Parse and fully resolve a TOML run configuration.

    Game files are read and compiled here so a bad path or bad game
    fails at load time, not mid-tournament.
    """
    config_path = Path(path)
    try:
        with open(config_path, "rb") as handle:
            data = tomli.load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from exc
    except tomli.TOMLDecodeError as exc:
        raise ConfigError(f"invalid TOML: {exc}") from exc

    regime = data.get("regime", "forward-model")
    if regime not in REGIMES:
        raise ConfigError(f"unknown regime {regime!r}")
    seed = data.get("seed", 0)
    if not isinstance(seed, int):
        raise ConfigError("seed must be an integer")

    games: dict[str, GameSpec] = {}
    for game_id, rel in _require_table(data.get("games", {}), "games").items():
        if not isinstance(rel, str):
            raise ConfigError(f"game {game_id!r}: path must be a string")
        game_path = config_path.parent / rel
        try:
            text = game_path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"game {game_id!r}: {exc}") from exc
        games[game_id] = compile_game(parse_text(text))

    agents: list[AgentConfig] = []
    for name, spec in _require_table(data.get("agents", {}), "agents").items():
        if not isinstance(spec, str):
            raise ConfigError(f"agent {name!r}: spec must be a string")
        config = parse_agent(spec)
        if not config.name:
            # table key doubles as the display name
            config = dataclasses.replace(config, name=name)
        agents.append(config)

    time_control = None
    if "clock" in data:
        clock = _require_table(data["clock"], "clock")
        unknown = set(clock) - {"setup_ms", "move_ms", "max_violations"}
        if unknown:
            raise ConfigError(f"unknown clock keys: {sorted(unknown)}")
        try:
            time_control = TimeControl(**clock)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad clock settings: {exc}") from exc

    return RunConfig(
        games=games,
        agents=agents,
        regime=regime,
        time_control=time_control,
        seed=seed,
    )
