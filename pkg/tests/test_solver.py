import warnings

import pytest

from cordiality import (
    Move,
    Objective,
    SolveOptions,
    SolverCapError,
    SYMMETRY_PATH_REVERSAL,
    ONE_STARTS,
    ONE_STARTS_WITH_PASS,
    ZERO_STARTS,
    best_line,
    brute_force_value,
    from_edges,
    game_number,
    new_game,
    path_graph,
    solve,
    star_graph,
    terminal_value,
)
from cordiality.game import replay
from cordiality.solver import SolveOptionsError

ALL_VARIANTS = (ZERO_STARTS, ONE_STARTS, ONE_STARTS_WITH_PASS)

# regression pins computed with the reference evaluator
P5_CORDIALITY = 2
K13_CORDIALITY = 1
K13_BALANCE = 1


def test_small_path_values_all_variants():
    for n, expected in ((3, 0), (4, 1), (6, 1)):
        for variant in ALL_VARIANTS:
            assert solve(path_graph(n), variant, Objective.CORDIALITY).value == expected


def test_p5_pinned_by_reference():
    for variant in ALL_VARIANTS:
        value = solve(path_graph(5), variant, Objective.CORDIALITY).value
        assert value <= 2
        assert value == brute_force_value(path_graph(5), variant, Objective.CORDIALITY)
        assert value == P5_CORDIALITY


def test_star_pinned_by_reference():
    star = star_graph(4)
    for variant in ALL_VARIANTS:
        assert brute_force_value(star, variant, Objective.CORDIALITY) == K13_CORDIALITY
        assert solve(star, variant, Objective.CORDIALITY).value == K13_CORDIALITY
    assert solve(star, ZERO_STARTS, Objective.BALANCE).value == K13_BALANCE


def test_trivial_values():
    assert solve(path_graph(2), ZERO_STARTS, Objective.BALANCE).value == 1
    assert solve(path_graph(0), ZERO_STARTS, Objective.CORDIALITY).value == 0
    assert brute_force_value(path_graph(1), ONE_STARTS, Objective.BALANCE) == 0


def test_game_number_dispatch():
    p6 = path_graph(6)
    assert game_number(p6, "cg") == 1
    assert game_number(p6, "cg_i") == 1
    assert game_number(p6, "cg_ip") == 1
    assert game_number(p6, "bg") == 1
    with pytest.raises(ValueError):
        game_number(p6, "nope")


def test_option_independence_small():
    grids = [
        SolveOptions(),
        SolveOptions(use_alpha_beta=False),
        SolveOptions(table_capacity=0),
        SolveOptions(use_alpha_beta=False, table_capacity=0),
        SolveOptions(symmetry=SYMMETRY_PATH_REVERSAL),
    ]
    for n in (5, 6, 7):
        g = path_graph(n)
        for variant in ALL_VARIANTS:
            for objective in (Objective.CORDIALITY, Objective.BALANCE):
                values = set()
                for opts in grids:
                    if opts.symmetry != "none" and not g.is_path():
                        continue
                    values.add(solve(g, variant, objective, opts).value)
                assert len(values) == 1


def test_parallel_root_matches_sequential():
    g = path_graph(7)
    sequential = solve(g, ZERO_STARTS, Objective.CORDIALITY)
    parallel = solve(g, ZERO_STARTS, Objective.CORDIALITY, SolveOptions(parallel_root=True, jobs=2))
    assert parallel.value == sequential.value
    assert parallel.best_move == sequential.best_move
    assert parallel.principal_line is None


def test_symmetry_requires_path_order():
    with pytest.raises(SolveOptionsError):
        solve(star_graph(4), ZERO_STARTS, Objective.CORDIALITY,
              SolveOptions(symmetry=SYMMETRY_PATH_REVERSAL))
    scrambled = from_edges(3, [(0, 2), (2, 1)])  # a path, but not in index order
    with pytest.raises(SolveOptionsError):
        solve(scrambled, ZERO_STARTS, Objective.CORDIALITY,
              SolveOptions(symmetry=SYMMETRY_PATH_REVERSAL))


def test_principal_line_replays_to_value():
    for variant in ALL_VARIANTS:
        for g in (path_graph(3), path_graph(6), star_graph(5)):
            result = solve(g, variant, Objective.CORDIALITY)
            final = replay(g, variant, result.principal_line)
            assert terminal_value(final, g, Objective.CORDIALITY) == result.value


def test_best_line_tiebreak_prefers_low_labels():
    line = best_line(path_graph(3), ZERO_STARTS, Objective.CORDIALITY)
    assert line[0] == Move.label(1)  # the middle vertex secures value 0


def test_hard_cap_refusal_and_env(monkeypatch):
    with pytest.raises(SolverCapError):
        solve(path_graph(23), ZERO_STARTS, Objective.CORDIALITY)
    monkeypatch.setenv("CORDIALITY_MAX_N", "4")
    with pytest.raises(SolverCapError):
        solve(path_graph(5), ZERO_STARTS, Objective.CORDIALITY)
    assert solve(path_graph(5), ZERO_STARTS, Objective.CORDIALITY, SolveOptions(max_n=6)).value == 2
    monkeypatch.setenv("CORDIALITY_TABLE_CAP", "1")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        value = solve(path_graph(6), ZERO_STARTS, Objective.CORDIALITY, SolveOptions(max_n=22)).value
    assert value == 1
    assert any("capacity" in str(w.message) for w in caught)


def test_nodes_counter_positive_and_deterministic():
    first = solve(path_graph(8), ZERO_STARTS, Objective.CORDIALITY)
    second = solve(path_graph(8), ZERO_STARTS, Objective.CORDIALITY)
    assert first.nodes > 0
    assert first.nodes == second.nodes


def test_oracle_rejects_large_instances():
    with pytest.raises(ValueError):
        brute_force_value(path_graph(11), ZERO_STARTS, Objective.CORDIALITY)


def test_disconnected_graphs_are_supported():
    g = from_edges(5, [(0, 1), (2, 3)])  # two edges plus an isolated vertex
    for variant in ALL_VARIANTS:
        for objective in (Objective.CORDIALITY, Objective.BALANCE):
            assert (
                solve(g, variant, objective).value
                == brute_force_value(g, variant, objective)
            )
