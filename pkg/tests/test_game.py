import random

import pytest

from cordiality import (
    IllegalMoveError,
    Move,
    Objective,
    PASS,
    Player,
    ONE_STARTS,
    ONE_STARTS_WITH_PASS,
    ZERO_STARTS,
    apply_move,
    is_terminal,
    legal_moves,
    new_game,
    path_graph,
    star_graph,
    terminal_value,
    to_move,
)
from cordiality.game import replay, transcript


def test_new_game_basics():
    state = new_game(path_graph(4), ZERO_STARTS)
    assert to_move(state) is Player.ZERO
    assert len(state.unlabeled) == 4
    state = new_game(path_graph(6), ONE_STARTS_WITH_PASS)
    assert to_move(state) is Player.ONE
    assert PASS in legal_moves(state)
    assert is_terminal(new_game(path_graph(0), ZERO_STARTS))


def test_turn_alternation_and_pass_turn():
    state = new_game(path_graph(6), ONE_STARTS_WITH_PASS)
    state = apply_move(state, PASS)
    assert to_move(state) is Player.ZERO
    state = new_game(path_graph(4), ZERO_STARTS)
    state = apply_move(state, Move.label(0))
    state = apply_move(state, Move.label(1))
    assert to_move(state) is Player.ZERO


def test_legal_moves():
    assert len(legal_moves(new_game(path_graph(3), ZERO_STARTS))) == 3
    fresh = new_game(path_graph(6), ONE_STARTS_WITH_PASS)
    assert len(legal_moves(fresh)) == 7  # six labels plus the pass
    full = replay(path_graph(2), ZERO_STARTS, [Move.label(0), Move.label(1)])
    assert legal_moves(full) == []


def test_pass_needs_two_unlabeled():
    # one-starts-with-pass on a 3-path: after two labels only one vertex
    # remains, so the maximizer's pass is no longer available
    state = replay(path_graph(3), ONE_STARTS_WITH_PASS, [Move.label(1), Move.label(0)])
    assert to_move(state) is Player.ONE
    assert PASS not in legal_moves(state)
    with pytest.raises(IllegalMoveError):
        apply_move(state, PASS)


def test_apply_move_validation():
    state = new_game(path_graph(3), ZERO_STARTS)
    state = apply_move(state, Move.label(1))
    assert state.zero == frozenset({1})
    with pytest.raises(IllegalMoveError):
        apply_move(state, Move.label(1))
    with pytest.raises(IllegalMoveError):
        apply_move(state, PASS)  # zero player may not pass
    with pytest.raises(IllegalMoveError):
        apply_move(state, Move.label(7))


def test_terminal_values():
    state = replay(
        path_graph(6),
        ZERO_STARTS,
        [Move.label(v) for v in (0, 1, 2, 3, 4, 5)],
    )
    assert state.zero == frozenset({0, 2, 4})
    assert terminal_value(state, path_graph(6), Objective.CORDIALITY) == 5
    state = replay(path_graph(2), ZERO_STARTS, [Move.label(0), Move.label(1)])
    assert terminal_value(state, path_graph(2), Objective.CORDIALITY) == 1
    assert terminal_value(state, path_graph(2), Objective.BALANCE) == 1
    # zero player holding one end of the path: signed value goes negative
    state = replay(
        path_graph(6),
        ZERO_STARTS,
        [Move.label(v) for v in (3, 0, 4, 1, 5, 2)],
    )
    assert state.zero == frozenset({3, 4, 5})
    assert terminal_value(state, path_graph(6), Objective.BALANCE) == -3
    with pytest.raises(IllegalMoveError):
        terminal_value(new_game(path_graph(3), ZERO_STARTS), path_graph(3), Objective.CORDIALITY)


@pytest.mark.parametrize("variant", [ZERO_STARTS, ONE_STARTS, ONE_STARTS_WITH_PASS])
def test_random_playout_invariants(variant):
    rng = random.Random(1234)
    for graph in (path_graph(5), path_graph(6), star_graph(5)):
        for _ in range(300):
            state = new_game(graph, variant)
            while not is_terminal(state):
                assert state.zero.isdisjoint(state.one)
                moves = legal_moves(state)
                state = apply_move(state, rng.choice(moves))
            assert abs(len(state.zero) - len(state.one)) <= 1
            cord = terminal_value(state, graph, Objective.CORDIALITY)
            bal = terminal_value(state, graph, Objective.BALANCE)
            assert cord == abs(bal)
            assert cord % 2 == graph.edge_count % 2
            if state.passes_used and graph.n % 2 == 0:
                assert len(state.zero) == len(state.one)
            if state.passes_used and graph.n % 2 == 1:
                assert len(state.zero) == len(state.one) + 1


def test_transcript_format():
    g = path_graph(3)
    record = transcript(
        g,
        ZERO_STARTS,
        [Move.label(1), Move.label(0), Move.label(2)],
        Objective.CORDIALITY,
    )
    assert record["moves"][0] == {"player": "A", "move": 1}
    assert record["moves"][1] == {"player": "I", "move": 0}
    assert record["value"] == 0
    assert record["edge_labels"] == {"0-1": 1, "1-2": 0}
    with_pass = transcript(
        g,
        ONE_STARTS_WITH_PASS,
        [PASS, Move.label(1)],
        Objective.CORDIALITY,
    )
    assert with_pass["moves"][0] == {"player": "I", "move": "pass"}
    assert "value" not in with_pass  # not terminal
