"""Command-line interface.

Subcommands cover the whole toolchain: `grammar` emits the EBNF,
`play`/`tournament`/`leaderboard`/`audit` drive the competition
platform, `generate`/`evaluate`/`rank` drive the game generator, and
`serve` starts the local play service.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import Optional

from .agents import REGIMES, AgentConfigError, parse_agent
from .arena import (
    RecordStore,
    TimeControl,
    WallClock,
    audit,
    run_elimination,
    run_league,
    run_match,
    run_round_robin,
)
from .arena.leaderboard import update_leaderboard
from .config import ConfigError, load_config
from .engine import CompileError, GameSpec, compile_game
from .grammar import ParseError, builtin_registry, emit_grammar, parse_text, render
from .pcg import GenConstraints, GenError, assess_candidates, evaluate_game, filter_valid, generate_game


class CliError(Exception):
    pass


def _load_game(path: str) -> tuple[str, GameSpec]:
    """Read, parse, and compile one .lud file; id is the file stem."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(str(exc)) from exc
    return p.stem, compile_game(parse_text(text))


def _games_from_dir(directory: str) -> dict[str, GameSpec]:
    paths = sorted(Path(directory).glob("*.lud"))
    if not paths:
        raise CliError(f"no .lud files in {directory!r}")
    return dict(_load_game(str(p)) for p in paths)


def _open_store(path: Optional[str]) -> Optional[RecordStore]:
    return RecordStore(path) if path else None


def _print_standings(standings, out) -> None:
    rows = sorted(standings.rows.values(), key=lambda r: (-r.points, r.competitor))
    width = max([len("competitor")] + [len(r.competitor) for r in rows])
    print(f"{'competitor':<{width}}  P   W   D   L  Pts", file=out)
    for r in rows:
        print(f"{r.competitor:<{width}}  {r.played:>2}  {r.wins:>2}  {r.draws:>2}  {r.losses:>2}  {r.points:>3}", file=out)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_grammar(args) -> int:
    sys.stdout.write(emit_grammar(builtin_registry()))
    return 0


def cmd_play(args) -> int:
    game_id, spec = _load_game(args.game)
    if spec.players != len(args.agents):
        raise CliError(f"{game_id} needs {spec.players} agent(s), got {len(args.agents)}")
    configs = [parse_agent(a) for a in args.agents]
    time_control = TimeControl(move_ms=args.move_ms) if args.move_ms else None
    record = run_match(
        spec,
        configs,
        regime=args.regime,
        time_control=time_control,
        seed=args.seed,
        store=_open_store(args.store),
        clock=WallClock() if args.wall_clock else None,
        game_id=game_id,
        move_cap=args.move_cap,
    )
    if args.show_moves:
        print(" ".join(record.moves))
    for agent_id, outcome in zip(record.agents, record.result):
        print(f"{agent_id}: {outcome}")
    print(f"termination: {record.termination} after {len(record.moves)} moves")
    return 0


def cmd_tournament(args) -> int:
    config = load_config(args.config)
    if len(config.agents) < 2:
        raise CliError("tournament needs at least 2 agents in the config")
    seed = config.seed if args.seed is None else args.seed
    common = dict(
        regime=config.regime,
        time_control=config.time_control,
        seed=seed,
        store=_open_store(args.store),
        clock=WallClock() if args.wall_clock else None,
    )
    if args.format == "round-robin":
        result = run_round_robin(config.games, config.agents, repeats=args.repeats, **common)
        _print_standings(result.standings, sys.stdout)
    elif args.format == "elimination":
        result = run_elimination(
            config.games, config.agents,
            mini_match=args.mini_match, bracket_size=args.bracket_size, **common,
        )
        for i, bracket_round in enumerate(result.rounds, start=1):
            for pairing in bracket_round:
                print(f"round {i}: {pairing.a} vs {pairing.b} -> {pairing.winner}")
        print(f"champion: {result.champion}")
    else:
        result = run_league(config.games, config.agents, double=not args.single, **common)
        _print_standings(result.standings, sys.stdout)
    print(f"{len(result.records)} matches played")
    return 0


def _leaderboard_json(board) -> dict:
    return {
        "rows": [
            {
                "competitor": r.competitor,
                "played": r.overall.played,
                "wins": r.overall.wins,
                "draws": r.overall.draws,
                "losses": r.overall.losses,
                "win_pct": r.win_pct,
                "rating": r.rating.rating,
                "rd": r.rating.rd,
                "volatility": r.rating.volatility,
            }
            for r in board.rows
        ],
        "quarantined": len(board.quarantined),
    }


def cmd_leaderboard(args) -> int:
    cache = Path(args.out) if args.out else None
    if cache and cache.exists() and not args.recompute:
        data = json.loads(cache.read_text(encoding="utf-8"))
    else:
        if not args.store:
            raise CliError("--store is required to (re)compute the leaderboard")
        games = _games_from_dir(args.games) if args.games else None
        board = update_leaderboard(
            RecordStore(args.store).read_all(),
            games=games,
            tau=args.tau,
            exclude_humans=args.exclude_humans,
        )
        data = _leaderboard_json(board)
        if cache:
            cache.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
    width = max([len("competitor")] + [len(r["competitor"]) for r in data["rows"]])
    print(f"{'competitor':<{width}}  rating     rd  win%    P")
    for r in data["rows"]:
        print(f"{r['competitor']:<{width}}  {r['rating']:7.1f}  {r['rd']:5.1f}  {r['win_pct']:5.1f}  {r['played']:>3}")
    if data["quarantined"]:
        print(f"{data['quarantined']} record(s) quarantined by audit")
    return 0


def cmd_audit(args) -> int:
    games = _games_from_dir(args.games)
    report = audit(RecordStore(args.store).read_all(), games)
    for record, reason in report.failures:
        print(f"FAIL {record.match_id} ({record.game_id}): {reason}")
    print(f"{len(report.ok)} ok, {len(report.failures)} failed")
    return 0 if report.clean else 1


def cmd_generate(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    constraints = GenConstraints(
        require=tuple(args.require),
        families=tuple(args.families.split(",")),
        min_side=args.min_side,
        max_side=args.max_side,
        players=args.players,
    )
    written = 0
    for i in range(args.count):
        seed = args.seed + i
        tree = generate_game(constraints=constraints, seed=seed)
        if args.filter:
            verdict = filter_valid(tree, seed=seed)
            if not verdict.valid:
                print(f"gen-{seed}: skipped ({'; '.join(verdict.reasons)})")
                continue
        path = out_dir / f"gen-{seed}.lud"
        path.write_text(render(tree) + "\n", encoding="utf-8")
        written += 1
    print(f"{written} game(s) written to {out_dir}")
    return 0


def cmd_evaluate(args) -> int:
    game_id, spec = _load_game(args.game)
    profile = evaluate_game(
        spec, n=args.playouts, seed=args.seed,
        uct_iterations=args.uct_iters, cap=args.cap,
    )
    data = {"game": game_id}
    data.update(dataclasses.asdict(profile))
    print(json.dumps(data, indent=2))
    return 0


def cmd_rank(args) -> int:
    paths = sorted(Path(args.dir).glob("*.lud"))
    if not paths:
        raise CliError(f"no .lud files in {args.dir!r}")
    trees = [parse_text(p.read_text(encoding="utf-8")) for p in paths]
    candidates = assess_candidates(
        trees,
        time_budget_s=args.budget_s,
        seed=args.seed,
        workers=args.workers,
    )
    ranked = [c for c in candidates if c.valid]
    ranked.sort(key=lambda c: -c.score)
    if args.top is not None:
        ranked = ranked[: args.top]
    position = {c.index: rank for rank, c in enumerate(ranked, start=1)}

    out_dir = None
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        profiles = out_dir / "profiles.jsonl"
        with open(profiles, "w", encoding="utf-8") as handle:
            for c in candidates:
                row = {
                    "candidate": paths[c.index].stem,
                    "valid": c.valid,
                    "reasons": list(c.reasons),
                    "rank": position.get(c.index),
                    "score": c.score,
                    "depth_proxy": c.depth_proxy,
                    "complexity": c.complexity,
                    "profile": dataclasses.asdict(c.profile) if c.profile else None,
                }
                handle.write(json.dumps(row, sort_keys=True) + "\n")
        for rank, c in enumerate(ranked, start=1):
            name = f"rank-{rank:02d}-{paths[c.index].stem}.lud"
            (out_dir / name).write_text(render(c.tree) + "\n", encoding="utf-8")

    for rank, c in enumerate(ranked, start=1):
        print(f"{rank:>3}. {paths[c.index].stem}  score={c.score:.3f}")
    skipped = len(candidates) - sum(1 for c in candidates if c.valid)
    if skipped:
        print(f"{skipped} candidate(s) failed validity screening")
    if out_dir:
        print(f"outputs written to {out_dir}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(args.games_dir, store_path=args.store, agent_move_ms=args.agent_move_ms)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ludokit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("grammar", help="emit the game-description EBNF")
    p.set_defaults(func=cmd_grammar)

    p = sub.add_parser("play", help="run one match between agents")
    p.add_argument("game", help="path to a .lud file")
    p.add_argument("agents", nargs="+", help="agent spec strings, one per seat")
    p.add_argument("--regime", choices=REGIMES, default="forward-model")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--store", help="append the record to this JSONL file")
    p.add_argument("--move-ms", type=int, default=0, help="per-move clock limit")
    p.add_argument("--move-cap", type=int, default=1000)
    p.add_argument("--wall-clock", action="store_true", help="real timestamps instead of the deterministic counter")
    p.add_argument("--show-moves", action="store_true")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("tournament", help="run a tournament from a config file")
    p.add_argument("--config", required=True, help="TOML run configuration")
    p.add_argument("--format", required=True, choices=("round-robin", "elimination", "league"))
    p.add_argument("--store", help="append records to this JSONL file")
    p.add_argument("--seed", type=int, default=None, help="override the config seed")
    p.add_argument("--repeats", type=int, default=1, help="round-robin repeats per color")
    p.add_argument("--mini-match", type=int, default=3, help="games per elimination pairing")
    p.add_argument("--bracket-size", type=int, default=None)
    p.add_argument("--single", action="store_true", help="single instead of double league rotation")
    p.add_argument("--wall-clock", action="store_true")
    p.set_defaults(func=cmd_tournament)

    p = sub.add_parser("leaderboard", help="show ratings computed from a record store")
    p.add_argument("--store", help="JSONL record store")
    p.add_argument("--recompute", action="store_true", help="rebuild from the store even if --out exists")
    p.add_argument("--games", help="directory of .lud files for audit and per-game tallies")
    p.add_argument("--exclude-humans", action="store_true")
    p.add_argument("--tau", type=float, default=0.5)
    p.add_argument("--out", help="JSON cache for the computed board")
    p.set_defaults(func=cmd_leaderboard)

    p = sub.add_parser("audit", help="replay every stored record and report defects")
    p.add_argument("--store", required=True)
    p.add_argument("--games", required=True, help="directory of .lud files")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("generate", help="write generated game descriptions")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--require", action="append", default=[], help="ludeme keyword that must appear (repeatable)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--families", default="hex,square")
    p.add_argument("--min-side", type=int, default=2)
    p.add_argument("--max-side", type=int, default=9)
    p.add_argument("--players", type=int, default=2)
    p.add_argument("--filter", action="store_true", help="skip candidates that fail validity screening")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("evaluate", help="profile one game with agent playouts")
    p.add_argument("--game", required=True, help="path to a .lud file")
    p.add_argument("--playouts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--uct-iters", type=int, default=1000)
    p.add_argument("--cap", type=int, default=1000)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("rank", help="score and rank a directory of game descriptions")
    p.add_argument("--dir", required=True, help="directory of candidate .lud files")
    p.add_argument("--top", type=int, default=None)
    p.add_argument("--budget-s", type=float, default=None, help="total evaluation budget in seconds")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=0)
    p.add_argument("--out", help="write ranked .lud files and profiles.jsonl here")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("serve", help="start the local HTTP/WebSocket play service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--games-dir", required=True)
    p.add_argument("--store", help="JSONL record store for finished sessions")
    p.add_argument("--agent-move-ms", type=int, default=5000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ConfigError, GenError, AgentConfigError, CompileError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
