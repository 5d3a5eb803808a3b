"""Tournament formats: scoring, schedules, reproducibility."""

import pytest

from ludokit.agents import parse_agent
from ludokit.arena import (
    FORFEIT,
    EliminationResult,
    RecordStore,
    Standings,
    audit,
    league_fixtures,
    run_elimination,
    run_league,
    run_round_robin,
    standings_from_results,
    unique_ids,
)


def _decisive_and_drawn(records):
    decisive = sum(1 for r in records if "Win" in r.result)
    drawn = sum(1 for r in records if set(r.result) == {"Draw"})
    return decisive, drawn


# ---------------------------------------------------------------------------
# standings arithmetic
# ---------------------------------------------------------------------------


def test_three_points_for_a_win():
    standings = standings_from_results([
        ("A", "B", "Win"),
        ("A", "C", "Win"),
        ("B", "C", "Draw"),
    ])
    assert standings.points("A") == 6
    assert standings.points("B") == 1
    assert standings.points("C") == 1
    assert [row.competitor for row in standings.table()][0] == "A"


def test_all_drawn_single_round_robin_gives_n_minus_1_points():
    names = ["A", "B", "C", "D"]
    results = [(a, b, "Draw") for i, a in enumerate(names)
               for b in names[i + 1:]]
    standings = standings_from_results(results)
    for name in names:
        assert standings.points(name) == len(names) - 1


def test_standings_infer_the_second_outcome():
    standings = Standings()
    standings.record("A", "B", "Win")
    assert standings.rows["B"].losses == 1
    standings.record("A", "B", "Draw")
    assert standings.rows["B"].draws == 1


def test_table_sorts_by_points_then_wins_then_name():
    standings = standings_from_results([
        ("A", "B", "Draw"), ("A", "B", "Draw"), ("A", "B", "Draw"),
        ("C", "D", "Win"), ("C", "D", "Loss"),
    ])
    # A and B have 3 points on draws; C and D have 3 on one win each
    order = [row.competitor for row in standings.table()]
    assert order == ["C", "D", "A", "B"]


def test_unique_ids_deduplicate_with_suffix():
    configs = [parse_agent("random"), parse_agent("random"),
               parse_agent("uct?iters=5")]
    assert unique_ids(configs) == ["random", "random#2", "uct?c=1.41&iters=5"]


# ---------------------------------------------------------------------------
# round-robin
# ---------------------------------------------------------------------------


def test_round_robin_counts_and_conservation(specs):
    games = {"ttt": specs["tictactoe"], "hex5": specs["hex5"]}
    agents = ["random?seed=1&name=a1", "random?seed=2&name=a2",
              "random?seed=3&name=a3"]
    result = run_round_robin(games, agents, repeats=2, seed=5)
    # 3 pairs x 2 games x 2 repeats x 2 colors
    assert len(result.records) == 24
    for row in result.standings.table():
        assert row.played == 16
        assert row.wins + row.draws + row.losses == row.played
    decisive, drawn = _decisive_and_drawn(result.records)
    assert decisive + drawn == len(result.records)
    total = sum(row.points for row in result.standings.table())
    assert total == 3 * decisive + 2 * drawn


def test_round_robin_is_byte_reproducible(tmp_path, specs):
    games = {"hex5": specs["hex5"]}
    agents = ["random?seed=1&name=a", "random?seed=2&name=b"]
    paths = []
    for run in range(2):
        path = tmp_path / f"run{run}.jsonl"
        run_round_robin(games, agents, seed=9,
                        store=RecordStore(str(path)))
        paths.append(path)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_round_robin_needs_two_agents(specs):
    with pytest.raises(ValueError):
        run_round_robin({"ttt": specs["tictactoe"]}, ["random"])


def test_round_robin_records_all_replay(specs):
    games = {"ttt": specs["tictactoe"], "hex5": specs["hex5"]}
    result = run_round_robin(games, ["random?seed=1", "random?seed=2"], seed=3)
    report = audit(result.records, games)
    assert report.clean
    assert len(report.ok) == len(result.records)


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


def _entrants(n):
    return [f"random?seed={i}&name=e{i}" for i in range(1, n + 1)]


def test_elimination_eight_entrants(specs):
    games = {"ttt": specs["tictactoe"]}
    result = run_elimination(games, _entrants(8), mini_match=3, seed=1)
    assert isinstance(result, EliminationResult)
    assert result.qualifying is None
    assert len(result.rounds) == 3
    assert [len(r) for r in result.rounds] == [4, 2, 1]
    assert len(result.records) == 21
    assert result.champion in {f"e{i}" for i in range(1, 9)}
    # the champion won its final pairing
    assert result.rounds[-1][0].winner == result.champion


def test_elimination_two_entrants_best_of_three(specs):
    result = run_elimination({"ttt": specs["tictactoe"]}, _entrants(2),
                             mini_match=3, seed=2)
    assert len(result.rounds) == 1
    assert len(result.records) == 3
    assert result.champion in {"e1", "e2"}


def test_elimination_qualifying_feeds_the_bracket(specs):
    games = {"ttt": specs["tictactoe"]}
    result = run_elimination(games, _entrants(5), mini_match=3,
                             bracket_size=4, seed=3)
    # 5 entrants over a 4-slot bracket: C(5,2) pairs x 2 colors qualify,
    # then 3 pairings x 3 games knock out
    assert result.qualifying is not None
    assert len(result.records) == 20 + 9
    qualified = {p.a for p in result.rounds[0]} | {p.b for p in result.rounds[0]}
    assert len(qualified) == 4
    cut = [row.competitor for row in result.qualifying.table()[:4]]
    # ties at the cut line resolve by entry order, so compare as sets of
    # points rather than names
    points = {cid: result.qualifying.points(cid) for cid in qualified}
    worst_in = min(points.values())
    for cid in set(_id for _id in points) - qualified:
        assert result.qualifying.points(cid) <= worst_in
    assert set(cut) == qualified or min(
        result.qualifying.points(c) for c in cut) == worst_in


def test_elimination_rejects_even_mini_match(specs):
    with pytest.raises(ValueError, match="odd"):
        run_elimination({"ttt": specs["tictactoe"]}, _entrants(2), mini_match=2)


def test_elimination_rejects_bad_bracket(specs):
    with pytest.raises(ValueError, match="power of two"):
        run_elimination({"ttt": specs["tictactoe"]}, _entrants(4),
                        bracket_size=3)


def test_elimination_is_reproducible(specs):
    games = {"ttt": specs["tictactoe"]}
    a = run_elimination(games, _entrants(4), seed=7)
    b = run_elimination(games, _entrants(4), seed=7)
    assert a.champion == b.champion
    assert [r.to_json() for r in a.records] == [r.to_json() for r in b.records]


# ---------------------------------------------------------------------------
# league
# ---------------------------------------------------------------------------


def test_league_schedule_shape():
    rounds = league_fixtures(["a", "b", "c", "d"], double=True)
    assert len(rounds) == 6
    assert all(len(pairs) == 2 for pairs in rounds)
    # single half: every unordered pair meets exactly once
    first_half = rounds[:3]
    met = sorted(tuple(sorted(p)) for pairs in first_half for p in pairs)
    assert met == [("a", "b"), ("a", "c"), ("a", "d"),
                   ("b", "c"), ("b", "d"), ("c", "d")]
    # the second half mirrors colors
    assert rounds[3:] == [[(b, a) for a, b in pairs] for pairs in first_half]


def test_league_odd_count_sits_one_out():
    rounds = league_fixtures(["a", "b", "c"], double=False)
    assert len(rounds) == 3
    for pairs in rounds:
        assert len(pairs) == 1


def test_league_runs_and_scores(specs):
    games = {"ttt": specs["tictactoe"], "hex5": specs["hex5"]}
    agents = [f"random?seed={i}&name=p{i}" for i in range(1, 5)]
    result = run_league(games, agents, double=True, seed=4)
    assert len(result.rounds) == 6
    assert len(result.records) == 12
    for row in result.standings.table():
        assert row.played == 6
    # every record carries its round number and version pair
    for record in result.records:
        assert record.round is not None
        assert record.versions is not None and len(record.versions) == 2


def test_league_replacement_bumps_the_version(specs):
    games = {"ttt": specs["tictactoe"]}
    agents = ["random?seed=1&name=p1", "random?seed=2&name=p2"]
    result = run_league(
        games, agents, double=True, seed=1,
        replacements={2: {"p1": "random?seed=99&name=p1"}})
    def version_of(record, name):
        return record.versions[record.agents.index(name)]
    before = {version_of(r, "p1") for r in result.records if r.round == 1}
    after = {version_of(r, "p1") for r in result.records if r.round >= 2}
    assert len(before) == 1 and len(after) == 1
    assert before != after
    p2_versions = {version_of(r, "p2") for r in result.records}
    assert len(p2_versions) == 1


def test_league_absence_forfeits_the_fixture(specs):
    games = {"ttt": specs["tictactoe"]}
    agents = ["random?seed=1&name=p1", "random?seed=2&name=p2"]
    result = run_league(games, agents, double=False, seed=1,
                        absences={(1, "p2")})
    record = result.records[0]
    assert record.termination == FORFEIT
    assert record.moves == ()
    assert record.reason == "p2 absent"
    loser = record.agents.index("p2")
    assert record.result[loser] == "Loss"
    assert record.result[1 - loser] == "Win"
    assert result.standings.points("p1") == 3


def test_league_replacement_for_unknown_name_is_an_error(specs):
    with pytest.raises(ValueError, match="unknown competitor"):
        run_league({"ttt": specs["tictactoe"]},
                   ["random?seed=1&name=p1", "random?seed=2&name=p2"],
                   replacements={1: {"ghost": "random"}})


def test_league_records_all_replay(specs):
    games = {"hex5": specs["hex5"]}
    agents = [f"random?seed={i}&name=p{i}" for i in range(1, 4)]
    result = run_league(games, agents, double=True, seed=2)
    assert audit(result.records, games).clean
