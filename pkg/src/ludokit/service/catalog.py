"""Game catalog: compiled games loaded from a directory of .lud files."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from ..engine import GameSpec, compile_game
from ..grammar import LudemeNode, parse_text


class GameCatalog:
    """Immutable id -> compiled game mapping; ids are file stems."""

    def __init__(self, entries: dict[str, tuple[str, LudemeNode, GameSpec]]):
        self._entries = dict(entries)

    @classmethod
    def from_dir(cls, path) -> "GameCatalog":
        entries = {}
        for file in sorted(Path(path).glob("*.lud")):
            text = file.read_text(encoding="utf-8")
            tree = parse_text(text)
            entries[file.stem] = (text, tree, compile_game(tree))
        return cls(entries)

    def ids(self) -> list[str]:
        return sorted(self._entries)

    def __contains__(self, game_id: str) -> bool:
        return game_id in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def spec(self, game_id: str) -> Optional[GameSpec]:
        entry = self._entries.get(game_id)
        return entry[2] if entry else None

    def tree(self, game_id: str) -> Optional[LudemeNode]:
        entry = self._entries.get(game_id)
        return entry[1] if entry else None

    def text(self, game_id: str) -> Optional[str]:
        entry = self._entries.get(game_id)
        return entry[0] if entry else None

    def games(self) -> dict[str, GameSpec]:
        return {game_id: entry[2] for game_id, entry in self._entries.items()}

    def describe(self) -> list[dict]:
        rows = []
        for game_id in self.ids():
            spec = self.spec(game_id)
            rows.append({
                "id": game_id,
                "name": spec.name,
                "players": spec.players,
                "family": spec.board.family,
                "side": spec.board.side,
                "cells": spec.board.cell_count,
            })
        return rows
