import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from ludokit.engine import GameSpec, compile_game  # noqa: E402
from ludokit.grammar import LudemeNode, parse_text  # noqa: E402

GAMES_DIR = ROOT / "games"


def game_text(game_id: str) -> str:
    return (GAMES_DIR / f"{game_id}.lud").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def trees() -> dict[str, LudemeNode]:
    return {p.stem: parse_text(p.read_text(encoding="utf-8"))
            for p in sorted(GAMES_DIR.glob("*.lud"))}


@pytest.fixture(scope="session")
def specs(trees) -> dict[str, GameSpec]:
    return {game_id: compile_game(tree) for game_id, tree in trees.items()}
