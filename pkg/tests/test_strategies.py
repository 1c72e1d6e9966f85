import random
from itertools import combinations

import pytest

from cordiality import (
    CASE6_WINNING_SETS,
    Move,
    Objective,
    ONE_STARTS,
    ONE_STARTS_WITH_PASS,
    ZERO_STARTS,
    apply_move,
    balance_maximizer_strategy,
    enumerate_trees,
    find_branch,
    from_edges,
    is_terminal,
    legal_moves,
    small_path_strategy,
    new_game,
    path_bound,
    path_bound_mod6,
    path_graph,
    path_strategy,
    spider_graph,
    suffix_pair_edge,
    to_move,
    tree_bound,
    tree_strategy,
    worst_case_line,
    worst_case_vs_optimal,
)
from cordiality.branching import arm_components
from cordiality.strategies import Case6Script, Path6Script, StrategyError
from cordiality.trees import NonTreeError

ALL_VARIANTS = (ZERO_STARTS, ONE_STARTS, ONE_STARTS_WITH_PASS)


# -- scripted small-path policies -------------------------------------------


def test_small_scripts_meet_their_values():
    targets = {3: 0, 4: 1, 5: 2, 6: 1}
    for n, target in targets.items():
        for variant in ALL_VARIANTS:
            worst = worst_case_vs_optimal(
                path_graph(n), small_path_strategy(n, variant), variant, Objective.CORDIALITY
            )
            assert worst <= target, (n, variant.code, worst)


def test_script_openings_and_replies():
    p3 = small_path_strategy(3, ZERO_STARTS)
    assert p3.choose(new_game(path_graph(3), ZERO_STARTS), None) == Move.label(1)

    # 6-path, maximizer opens the second vertex: the reply is the fifth
    p6 = small_path_strategy(6, ONE_STARTS)
    state = new_game(path_graph(6), ONE_STARTS)
    opening = Move.label(1)
    p6.notify(state, opening, to_move(state))
    state = apply_move(state, opening)
    assert p6.choose(state, opening) == Move.label(4)


def test_path4_script_secures_one_label_per_class():
    def zero_final_sets(variant):
        seen = set()

        def explore(state, strat, last):
            while not is_terminal(state) and to_move(state) is strat.role:
                move = strat.choose(state, last)
                strat.notify(state, move, strat.role)
                state = apply_move(state, move)
                last = move
            if is_terminal(state):
                seen.add(frozenset(state.zero))
                return
            for move in legal_moves(state):
                twin = strat.clone()
                twin.notify(state, move, strat.role.opponent)
                explore(apply_move(state, move), twin, move)

        explore(new_game(path_graph(4), variant), small_path_strategy(4, variant), None)
        return seen

    for variant in ALL_VARIANTS:
        for final in zero_final_sets(variant):
            assert final & {0, 2} and final & {1, 3}


# -- the recursive path strategy --------------------------------------------


@pytest.mark.parametrize("n", range(3, 16))
def test_path_strategy_meets_bounds(n):
    worst = worst_case_vs_optimal(
        path_graph(n), path_strategy(n), ZERO_STARTS, Objective.CORDIALITY
    )
    assert worst <= path_bound(n)
    assert worst <= path_bound_mod6(n)


def test_bound_forms_agree():
    for n in range(3, 40):
        assert path_bound(n) == path_bound_mod6(n)


# -- branch decomposition -----------------------------------------------------


def test_find_branch_cases():
    assert find_branch(spider_graph([1, 1, 2])).case_id == 2
    assert find_branch(spider_graph([1, 1, 5])).case_id == 1
    assert find_branch(spider_graph([2, 2, 1])).case_id == 3
    assert find_branch(spider_graph([1, 3, 2])).case_id == 5
    assert find_branch(spider_graph([3, 3, 2])).case_id == 6
    case4 = find_branch(from_edges(8, [(0, 1), (1, 2), (2, 3), (1, 4), (0, 5), (5, 6), (5, 7)]))
    assert case4.case_id == 4
    assert case4.roles["v1"] == 1 and case4.roles["v"] == 0
    case7 = find_branch(
        from_edges(10, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (5, 6), (0, 7), (7, 8), (7, 9)])
    )
    assert case7.case_id == 7


def test_find_branch_rejects_paths_and_non_trees():
    with pytest.raises(NonTreeError):
        find_branch(path_graph(7))
    with pytest.raises(NonTreeError):
        find_branch(from_edges(3, [(0, 1), (1, 2), (0, 2)]))


def test_find_branch_total_on_enumerated_trees():
    for n in range(2, 12):
        for tree in enumerate_trees(n):
            if all(tree.degree(v) <= 2 for v in range(tree.n)):
                continue
            d = find_branch(tree)
            assert d.case_id in range(1, 8)
            assert len(d.branch_vertices) in (2, 4, 6)
            assert d.attach in d.remainder_vertices
            assert d.branch_vertices.isdisjoint(d.remainder_vertices)
            assert d.branch_vertices | d.remainder_vertices == set(range(tree.n))


def test_arm_components_are_ordered_paths():
    g = spider_graph([2, 3, 1])
    arms = arm_components(g, frozenset(range(g.n)), 0)
    assert sorted(arms.orders) == [1, 2, 3]
    for arm in arms.components:
        assert g.has_edge(0, arm[0])
        for a, b in zip(arm, arm[1:]):
            assert g.has_edge(a, b)


def test_case6_winning_sets_regenerate():
    split, even = [], []
    arm_edges = [(1, 2), (2, 3), (4, 5), (5, 6)]
    for comb in combinations(range(1, 7), 3):
        s = set(comb)
        cross = sum(1 for a, b in arm_edges if (a in s) != (b in s))
        disc = 2 * cross - len(arm_edges)
        if len(s & {1, 4}) == 1:
            if abs(disc) <= 2:
                split.append(frozenset(s))
        elif disc == 0:
            even.append(frozenset(s))
    assert len(split) == 8 and len(even) == 4
    assert set(split + even) == set(CASE6_WINNING_SETS)


def test_case6_script_always_lands_in_winning_sets():
    # two 3-arms as a standalone graph; positions map to vertices 0..5
    g = from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    script = Case6Script(tuple(range(6)))
    winning = {frozenset(p - 1 for p in s) for s in CASE6_WINNING_SETS}

    def check(state):
        assert frozenset(state.zero) in winning, sorted(state.zero)

    for variant in ALL_VARIANTS:
        worst_case_vs_optimal(g, script.clone(), variant, Objective.CORDIALITY, terminal_check=check)


# -- the recursive tree strategy ---------------------------------------------


@pytest.mark.parametrize("n", range(2, 11))
def test_tree_strategy_meets_bound(n):
    for tree in enumerate_trees(n):
        worst = worst_case_vs_optimal(
            tree, tree_strategy(tree), ZERO_STARTS, Objective.CORDIALITY
        )
        assert worst <= tree_bound(n), (n, tree.edges, worst)


def test_case2_branch_edges_always_differ():
    g = spider_graph([1, 1, 3])  # case 2 at the center
    decomposition = find_branch(g)
    assert decomposition.case_id == 2
    v1 = decomposition.roles["v1"]
    v2 = decomposition.roles["v2"]

    def check(state):
        assert (v1 in state.zero) != (v2 in state.zero)

    worst_case_vs_optimal(
        g, tree_strategy(g), ZERO_STARTS, Objective.CORDIALITY, terminal_check=check
    )


def test_case3_script_reply_mirrors_inner_and_outer():
    g = spider_graph([2, 2, 2])
    d = find_branch(g)
    assert d.case_id == 3
    strategy = tree_strategy(g)
    state = new_game(g, ZERO_STARTS)
    move = strategy.choose(state, None)
    strategy.notify(state, move, ZERO_STARTS.starter)
    state = apply_move(state, move)
    # the opponent grabs the outer vertex of one arm; the reply is the
    # outer vertex of the other arm
    outer = Move.label(d.roles["v1"])
    strategy.notify(state, outer, to_move(state))
    state = apply_move(state, outer)
    reply = strategy.choose(state, outer)
    assert reply == Move.label(d.roles["v4"])


def test_case6_script_reply_to_second_position():
    # opponent opens the middle of one arm; the reply is the middle of the
    # other arm
    script = Case6Script(tuple(range(6)))
    g = from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    state = new_game(g, ONE_STARTS)
    opening = Move.label(1)  # position 2
    script.notify(state, opening, to_move(state))
    state = apply_move(state, opening)
    assert script.choose(state, opening) == Move.label(4)  # position 5


# -- the balance strategy -----------------------------------------------------


@pytest.mark.parametrize("n", range(2, 15))
def test_balance_strategy_nonnegative_with_suffix_edge(n):
    g = path_graph(n)
    a, b = suffix_pair_edge(n)

    def check(state):
        assert (a in state.zero) != (b in state.zero)

    worst = worst_case_vs_optimal(
        g, balance_maximizer_strategy(n), ZERO_STARTS, Objective.BALANCE, terminal_check=check
    )
    assert worst >= 0


def test_balance_strategy_small_cases():
    # on the 2-path the reply is forced and the value is exactly 1
    assert (
        worst_case_vs_optimal(
            path_graph(2), balance_maximizer_strategy(2), ZERO_STARTS, Objective.BALANCE
        )
        == 1
    )


# -- harness behavior ---------------------------------------------------------


def test_worst_case_never_beats_the_optimum(solved):
    for n in range(3, 10):
        g = path_graph(n)
        worst = worst_case_vs_optimal(g, path_strategy(n), ZERO_STARTS, Objective.CORDIALITY)
        assert worst >= solved(g, "cg")
    for n in range(2, 10):
        g = path_graph(n)
        worst = worst_case_vs_optimal(
            g, balance_maximizer_strategy(n), ZERO_STARTS, Objective.BALANCE
        )
        assert worst <= solved(g, "bg")


def test_worst_case_line_is_a_legal_witness():
    g = path_graph(9)
    strategy = path_strategy(9)
    value, line = worst_case_line(g, strategy, ZERO_STARTS, Objective.CORDIALITY)
    state = new_game(g, ZERO_STARTS)
    for move in line:
        assert move in legal_moves(state)
        state = apply_move(state, move)
    assert is_terminal(state)


def test_strategies_stay_legal_under_random_play():
    rng = random.Random(4242)
    fixtures = [
        (path_graph(12), path_strategy(12), ZERO_STARTS),
        (spider_graph([2, 3, 1, 2]), None, ZERO_STARTS),
        (path_graph(6), small_path_strategy(6, ONE_STARTS_WITH_PASS), ONE_STARTS_WITH_PASS),
    ]
    for g, strategy, variant in fixtures:
        base = strategy or tree_strategy(g)
        for _ in range(400):
            strat = base.clone()
            state = new_game(g, variant)
            last = None
            while not is_terminal(state):
                if to_move(state) is strat.role:
                    move = strat.choose(state, last)
                    assert move in legal_moves(state)
                    strat.notify(state, move, strat.role)
                else:
                    move = rng.choice(legal_moves(state))
                    strat.notify(state, move, strat.role.opponent)
                state = apply_move(state, move)
                last = move


def test_builders_validate_inputs():
    with pytest.raises(Exception):
        path_strategy(2)
    with pytest.raises(Exception):
        small_path_strategy(7, ZERO_STARTS)
    with pytest.raises(Exception):
        balance_maximizer_strategy(1)
    with pytest.raises(NonTreeError):
        tree_strategy(from_edges(3, [(0, 1), (1, 2), (0, 2)]))
