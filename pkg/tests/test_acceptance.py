"""End-to-end acceptance checks, one per headline guarantee.

Every test asserts its own wall-clock budget and finishes by printing a
one-line verdict (visible with -s), so a pass certifies the behaviour and
the runtime together. Oracles are independent throughout: the hand-built
helpers for board games, a from-scratch rating updater, byte comparison
for reproducibility.
"""

import hashlib
import random
import time

import helpers
from conftest import GAMES_DIR, game_text
from test_glicko2 import STANDARD_VECTOR, _ref_update

from ludokit.arena import Rating, RecordStore, audit, glicko2_update, run_match, run_round_robin
from ludokit.engine import GameState, compile_game, connected, initial_state, legal_moves, playout, status
from ludokit.grammar import Param, Signature, builtin_registry, emit_grammar, parse_text, render, tokenize, validate
from ludokit.pcg import GenConstraints, filter_valid, generate_game, rank_games

REGIME = "forward-model"

# pins the shipped Hex description to the canonical published text
HEX11_SHA256 = "616557be16256486aab3fe648529fb54d52fd6f1fdcd05dd02c40844441b412a"


def _verdict(name: str, started: float, budget_s: float, detail: str) -> None:
    elapsed = time.perf_counter() - started
    assert elapsed < budget_s, f"{name}: {elapsed:.1f}s over the {budget_s:.0f}s budget"
    print(f"[acceptance] {name}: PASS in {elapsed:.1f}s ({detail})")


def test_hex_description_full_fidelity():
    started = time.perf_counter()
    raw = (GAMES_DIR / "hex11.lud").read_bytes()
    assert hashlib.sha256(raw).hexdigest() == HEX11_SHA256
    text = raw.decode("utf-8")

    assert tokenize(text)
    tree = parse_text(text)
    assert validate(tree, builtin_registry()) == []
    assert parse_text(render(tree)) == tree

    spec = compile_game(tree)
    assert spec.name == "Hex"
    assert spec.players == 2
    assert spec.cell_count == 121
    assert len(legal_moves(spec, initial_state(spec))) == 121

    board = spec.board

    def cells_where(pred):
        return frozenset(i for i, lab in enumerate(board.labels)
                         if pred(lab[0], int(lab[1:])))

    by_player = {1: set(), 2: set()}
    for region in board.regions:
        by_player[region.player].add(region.cells)
    # player 1 connects the top and bottom rows, player 2 the side columns
    assert by_player[1] == {cells_where(lambda c, r: r == 11),
                            cells_where(lambda c, r: r == 1)}
    assert by_player[2] == {cells_where(lambda c, r: c == "a"),
                            cells_where(lambda c, r: c == "k")}
    _verdict("hex description fidelity", started, 1.0, "121 cells, 4 edge regions, round-trip equal")


def test_grammar_matches_registry_one_to_one():
    started = time.perf_counter()
    registry = builtin_registry()
    rng = random.Random(20260822)

    trees = [helpers.random_conforming_tree(registry, rng) for _ in range(500)]
    assert all(validate(tree, registry) == [] for tree in trees)

    rejected = 0
    for tree in trees:
        mutated = helpers.mutate_unknown_keyword(tree, rng)
        if validate(mutated, registry):
            rejected += 1
    assert rejected == 500

    before = emit_grammar(registry).splitlines()
    extended = builtin_registry()
    extended.add(Signature(keyword="probe",
                           params=(Param(name="n", kind="int", min_value=0),)))
    after = emit_grammar(extended).splitlines()
    assert len(after) == len(before) + 1
    assert set(after) - set(before) == {"probe ::= '(' 'probe' int(0..) ')'"}
    assert set(before) - set(after) == set()
    _verdict("grammar one-to-one", started, 10.0,
             "500 conforming accepted, 500 mutants rejected, +1 production")


def test_engine_matches_independent_oracles(specs):
    started = time.perf_counter()

    spec = specs["tictactoe"]
    positions = helpers.enumerate_ttt()
    assert len(positions) == 5478
    for board, winner in positions.items():
        state = GameState(occupancy=board, mover=helpers.ttt_mover(board),
                          move_count=9 - board.count(0))
        st = status(spec, state)
        if winner is None:
            assert st.ongoing, board
        elif winner == 0:
            assert st.outcomes == ("Draw", "Draw"), board
        else:
            expected = ("Win", "Loss") if winner == 1 else ("Loss", "Win")
            assert st.outcomes == expected, board

    hex_specs = {side: compile_game(parse_text(
        game_text("hex11").replace("(HexBoard 11)", f"(HexBoard {side})")))
        for side in range(2, 8)}
    rng = random.Random(5478)
    for i in range(1000):
        side = 2 + i % 6
        hspec = hex_specs[side]
        owner = helpers.random_full_hex(side, rng)
        occupancy = tuple(owner[(r, c)]
                          for r in range(1, side + 1) for c in range(1, side + 1))
        winners = [p for p in (1, 2) if connected(hspec.board, occupancy, p)]
        oracle = [p for p in (1, 2) if helpers.hex_connected(side, owner, p)]
        assert winners == oracle
        assert len(winners) == 1  # no draws, never two winners
    _verdict("engine oracle equivalence", started, 60.0,
             "5478 tic-tac-toe positions, 1000 full hex boards")


def test_agent_strength_ordering(specs):
    started = time.perf_counter()

    hex5 = specs["hex5"]
    uct1k = "uct?c=1.41&iters=1000"
    hex_wins = 0
    for i in range(100):
        seat = 1 if i % 2 == 0 else 2
        agents = [uct1k, "random"] if seat == 1 else ["random", uct1k]
        record = run_match(hex5, agents, REGIME, seed=i)
        if record.result[seat - 1] == "Win":
            hex_wins += 1
    assert hex_wins >= 90, f"uct won only {hex_wins}/100 hex games"

    ttt = specs["tictactoe"]
    uct10k = "uct?c=1.41&iters=10000"
    losses = 0
    for i in range(200):
        seat = 1 if i % 2 == 0 else 2
        agents = [uct10k, "random"] if seat == 1 else ["random", uct10k]
        record = run_match(ttt, agents, REGIME, seed=i)
        if record.result[seat - 1] == "Loss":
            losses += 1
    assert losses == 0, f"uct lost {losses} tic-tac-toe games to random"

    assert helpers.ttt_minimax((0,) * 9) == 0  # perfect play draws
    record = run_match(ttt, ["uct?c=1.41&iters=100000"] * 2, REGIME, seed=1)
    assert record.result == ("Draw", "Draw")
    _verdict("agent ordering", started, 600.0,
             f"hex wins {hex_wins}/100, ttt losses {losses}/200, self-play drawn")


def test_rating_update_worked_example():
    started = time.perf_counter()
    results = [(Rating(r, rd), score) for r, rd, score in STANDARD_VECTOR]
    updated = glicko2_update(Rating(1500.0, 200.0, 0.06), results, tau=0.5)
    assert abs(updated.rating - 1464.06) <= 0.01
    assert abs(updated.rd - 151.52) <= 0.01

    ref_r, ref_rd, _sigma = _ref_update(1500.0, 200.0, 0.06, STANDARD_VECTOR, tau=0.5)
    assert abs(ref_r - 1464.06) <= 0.01
    assert abs(ref_rd - 151.52) <= 0.01
    _verdict("rating update vector", started, 10.0,
             f"r'={updated.rating:.2f} rd'={updated.rd:.2f}, oracle agrees")


def test_tournament_reproducible_and_audited(tmp_path, specs):
    started = time.perf_counter()
    games = {game_id: specs[game_id] for game_id in ("hex5", "tictactoe", "gomoku")}
    agents = ("random", "flat-mc?playouts=16", "uct?c=1.41&iters=64")

    result = run_round_robin(games, agents, seed=7,
                             store=RecordStore(tmp_path / "a.jsonl"))
    run_round_robin(games, agents, seed=7, store=RecordStore(tmp_path / "b.jsonl"))
    assert (tmp_path / "a.jsonl").read_bytes() == (tmp_path / "b.jsonl").read_bytes()

    records = RecordStore(tmp_path / "a.jsonl").read_all()
    assert len(records) == 18  # 3 pairs x 3 games x 2 colors
    decisive = sum(1 for r in records if "Win" in r.result)
    drawn = len(records) - decisive
    total_points = sum(row.points for row in result.standings.table())
    assert total_points == 3 * decisive + 2 * drawn

    report = audit(records, games)
    assert report.ok and not report.failures
    _verdict("tournament integrity", started, 900.0,
             f"18 records byte-stable, {decisive} decisive, audit clean")


def test_generated_population_screens_and_ranks_stably():
    started = time.perf_counter()
    constraints = GenConstraints(max_side=5)
    trees = [generate_game(constraints=constraints, seed=s) for s in range(1000)]

    survivors = [t for t in trees if filter_valid(t, seed=9).valid]
    assert len(survivors) >= 10
    for tree in survivors:
        spec = compile_game(tree)  # survivors must compile outright
        for extra in range(3):
            trajectory = playout(spec, seed=1000 + extra)
            assert trajectory.status.terminal and not trajectory.capped

    first = rank_games(trees, top=10, time_budget_s=240.0, seed=11)
    second = rank_games(trees, top=10, time_budget_s=240.0, seed=11)
    assert len(first) == 10
    assert all(candidate.valid for candidate in first)
    assert [c.index for c in first] == [c.index for c in second]
    assert [c.score for c in first] == [c.score for c in second]
    _verdict("generation screen and ranking", started, 1800.0,
             f"{len(survivors)}/1000 survive, top-10 stable")
