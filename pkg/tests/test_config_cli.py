"""TOML run configs and the command-line entry point."""

import json

import pytest

from conftest import GAMES_DIR
from ludokit.arena import RecordStore, TimeControl
from ludokit.cli import main
from ludokit.config import ConfigError, load_config

GOOD_CONFIG = """\
regime = "forward-model"
seed = 7

[games]
hex5 = "games/hex5.lud"
tictactoe = "games/tictactoe.lud"

[agents]
rng = "random?seed=1"
mc = "flat-mc?playouts=5&seed=2"

[clock]
move_ms = 4000
"""


@pytest.fixture()
def config_dir(tmp_path):
    games = tmp_path / "games"
    games.mkdir()
    for stem in ("hex5", "tictactoe"):
        source = (GAMES_DIR / f"{stem}.lud").read_text(encoding="utf-8")
        (games / f"{stem}.lud").write_text(source, encoding="utf-8")
    (tmp_path / "run.toml").write_text(GOOD_CONFIG, encoding="utf-8")
    return tmp_path


# ---------------------------------------------------------------------------
# config loading
# ---------------------------------------------------------------------------


def test_config_resolves_games_and_agents(config_dir):
    config = load_config(str(config_dir / "run.toml"))
    assert config.seed == 7
    assert config.regime == "forward-model"
    assert set(config.games) == {"hex5", "tictactoe"}
    assert config.games["tictactoe"].cell_count == 9
    assert [a.name for a in config.agents] == ["rng", "mc"]
    assert config.agents[1].playouts == 5
    assert config.time_control == TimeControl(move_ms=4000)


def test_explicit_spec_name_beats_the_table_key(config_dir):
    path = config_dir / "named.toml"
    path.write_text("""\
[games]
tictactoe = "games/tictactoe.lud"

[agents]
key = "random?name=explicit"
""", encoding="utf-8")
    config = load_config(str(path))
    assert config.agents[0].name == "explicit"


def test_config_paths_resolve_against_the_file(config_dir, tmp_path):
    # loading through an unrelated cwd still finds games/ next to the toml
    nested = config_dir / "sub"
    nested.mkdir()
    moved = nested / "run.toml"
    moved.write_text(GOOD_CONFIG.replace('games/', '../games/'),
                     encoding="utf-8")
    config = load_config(str(moved))
    assert set(config.games) == {"hex5", "tictactoe"}


def test_config_errors_are_specific(config_dir):
    def load_text(text):
        path = config_dir / "bad.toml"
        path.write_text(text, encoding="utf-8")
        return load_config(str(path))

    with pytest.raises(ConfigError, match="cannot read"):
        load_config(str(config_dir / "absent.toml"))
    with pytest.raises(ConfigError, match="invalid TOML"):
        load_text("regime = ")
    with pytest.raises(ConfigError, match="unknown regime"):
        load_text('regime = "psychic"')
    with pytest.raises(ConfigError, match="seed must be"):
        load_text('seed = "seven"')
    with pytest.raises(ConfigError, match="path must be a string"):
        load_text("[games]\nttt = 3")
    with pytest.raises(ConfigError, match="ghost"):
        load_text('[games]\nghost = "games/ghost.lud"')
    with pytest.raises(ConfigError, match="spec must be a string"):
        load_text("[agents]\nrng = 5")
    with pytest.raises(ConfigError, match="unknown clock keys"):
        load_text("[clock]\nmove_ms = 100\nwarp = 1")
    with pytest.raises(ConfigError, match="bad clock settings"):
        load_text("[clock]\nmove_ms = -5")


def test_empty_config_is_valid(config_dir):
    path = config_dir / "empty.toml"
    path.write_text("", encoding="utf-8")
    config = load_config(str(path))
    assert config.games == {} and config.agents == []
    assert config.time_control is None


# ---------------------------------------------------------------------------
# CLI subcommands
# ---------------------------------------------------------------------------


def test_cli_grammar_prints_the_ebnf(capsys):
    assert main(["grammar"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("game ::=")
    assert "direction ::=" in out


def test_cli_play_reports_the_outcome(capsys, tmp_path):
    store = tmp_path / "records.jsonl"
    code = main(["play", str(GAMES_DIR / "tictactoe.lud"),
                 "random?seed=1", "random?seed=2",
                 "--seed", "4", "--store", str(store), "--show-moves"])
    assert code == 0
    out = capsys.readouterr().out
    assert "termination: natural" in out
    assert len(RecordStore(str(store)).read_all()) == 1


def test_cli_play_checks_the_seat_count(capsys):
    code = main(["play", str(GAMES_DIR / "tictactoe.lud"), "random"])
    assert code == 1
    assert "needs 2 agent(s)" in capsys.readouterr().err


def test_cli_play_rejects_bad_agent_specs(capsys):
    code = main(["play", str(GAMES_DIR / "tictactoe.lud"),
                 "random", "psychic"])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_cli_tournament_round_robin(capsys, config_dir, tmp_path):
    store = tmp_path / "rr.jsonl"
    code = main(["tournament", "--config", str(config_dir / "run.toml"),
                 "--format", "round-robin", "--store", str(store)])
    assert code == 0
    out = capsys.readouterr().out
    assert "competitor" in out and "Pts" in out
    # 1 pair x 2 games x 2 colors
    assert "4 matches played" in out
    assert len(RecordStore(str(store)).read_all()) == 4


def test_cli_tournament_elimination(capsys, config_dir):
    code = main(["tournament", "--config", str(config_dir / "run.toml"),
                 "--format", "elimination"])
    assert code == 0
    out = capsys.readouterr().out
    assert "champion:" in out


def test_cli_audit_flags_tampered_stores(capsys, tmp_path, config_dir):
    store = tmp_path / "rr.jsonl"
    main(["tournament", "--config", str(config_dir / "run.toml"),
          "--format", "round-robin", "--store", str(store)])
    capsys.readouterr()
    assert main(["audit", "--store", str(store),
                 "--games", str(config_dir / "games")]) == 0
    assert "0 failed" in capsys.readouterr().out

    lines = store.read_text(encoding="utf-8").splitlines()
    record = json.loads(lines[0])
    record["result"] = list(reversed(record["result"]))
    lines[0] = json.dumps(record, sort_keys=True, separators=(",", ":"))
    store.write_text("\n".join(lines) + "\n", encoding="utf-8")
    assert main(["audit", "--store", str(store),
                 "--games", str(config_dir / "games")]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "1 failed" in out


def test_cli_leaderboard_computes_and_caches(capsys, tmp_path, config_dir):
    store = tmp_path / "rr.jsonl"
    main(["tournament", "--config", str(config_dir / "run.toml"),
          "--format", "round-robin", "--store", str(store)])
    capsys.readouterr()
    cache = tmp_path / "board.json"
    assert main(["leaderboard", "--store", str(store),
                 "--games", str(config_dir / "games"),
                 "--out", str(cache)]) == 0
    first = capsys.readouterr().out
    assert "rng" in first and "mc" in first
    data = json.loads(cache.read_text(encoding="utf-8"))
    assert {r["competitor"] for r in data["rows"]} == {"rng", "mc"}
    # cached: prints without touching the store again
    assert main(["leaderboard", "--out", str(cache)]) == 0
    assert capsys.readouterr().out == first


def test_cli_leaderboard_needs_a_store_to_compute(capsys):
    assert main(["leaderboard"]) == 1
    assert "--store is required" in capsys.readouterr().err


def test_cli_generate_writes_lud_files(capsys, tmp_path):
    out = tmp_path / "gen"
    code = main(["generate", "--count", "4", "--seed", "10",
                 "--out", str(out), "--max-side", "5"])
    assert code == 0
    files = sorted(p.name for p in out.glob("*.lud"))
    assert files == ["gen-10.lud", "gen-11.lud", "gen-12.lud", "gen-13.lud"]
    assert "4 game(s) written" in capsys.readouterr().out


def test_cli_generate_requires_satisfiable_constraints(capsys, tmp_path):
    code = main(["generate", "--count", "1", "--out", str(tmp_path / "g"),
                 "--require", "teleport"])
    assert code == 1
    assert "not in the registry" in capsys.readouterr().err


def test_cli_evaluate_emits_a_json_profile(capsys):
    code = main(["evaluate", "--game", str(GAMES_DIR / "tictactoe.lud"),
                 "--playouts", "3", "--uct-iters", "20"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["game"] == "tictactoe"
    assert data["playouts"] == 6
    total = (data["p1_win_rate"] + data["p2_win_rate"]
             + data["draw_rate"] + data["cap_rate"])
    assert abs(total - 1.0) < 1e-9


def test_cli_rank_writes_ranked_copies_and_profiles(capsys, tmp_path, config_dir):
    candidates = tmp_path / "cands"
    candidates.mkdir()
    for stem in ("hex5", "tictactoe"):
        text = (GAMES_DIR / f"{stem}.lud").read_text(encoding="utf-8")
        (candidates / f"{stem}.lud").write_text(text, encoding="utf-8")
    out = tmp_path / "ranked"
    code = main(["rank", "--dir", str(candidates), "--budget-s", "0.4",
                 "--seed", "2", "--out", str(out)])
    assert code == 0
    printed = capsys.readouterr().out
    assert "  1. " in printed.replace("1.", "1. ", 1) or "1." in printed
    profiles = [json.loads(line) for line in
                (out / "profiles.jsonl").read_text().splitlines()]
    assert {p["candidate"] for p in profiles} == {"hex5", "tictactoe"}
    assert all(p["valid"] for p in profiles)
    ranked_files = sorted(p.name for p in out.glob("rank-*.lud"))
    assert len(ranked_files) == 2
    assert ranked_files[0].startswith("rank-01-")


def test_cli_rank_rejects_an_empty_directory(capsys, tmp_path):
    empty = tmp_path / "none"
    empty.mkdir()
    assert main(["rank", "--dir", str(empty)]) == 1
    assert "no .lud files" in capsys.readouterr().err
