"""Exhaustive verification of fixed strategies against a free adversary.

``worst_case_vs_optimal`` pins one side to a Strategy and ranges over every
legal reply of the other side, so the result is the exact worst value the
strategy can be held to (the adversary maximizes against a zero-player
strategy and minimizes against a one-player strategy).  Positions are
memoized together with the strategy's internal state key, which makes the
search collapse across move-order interleavings.  An optional terminal
check runs on every reachable final position, so per-playout structural
claims can be verified in the same sweep.
"""

from __future__ import annotations

from typing import Callable

from .game import (
    GameState,
    Move,
    Objective,
    Player,
    Variant,
    apply_move,
    is_terminal,
    legal_moves,
    new_game,
    terminal_value,
    to_move,
)
from .graphs import Graph
from .strategies import Strategy


class StrategyMoveError(RuntimeError):
    """A strategy returned an illegal move; carries the offending position."""

    def __init__(self, state: GameState, move: Move, reason: str):
        super().__init__(f"illegal strategy move {move} at {state}: {reason}")
        self.state = state
        self.move = move


def _strategy_step(g: Graph, state: GameState, strat: Strategy, last_move: Move | None):
    """Apply the strategy's forced moves until the adversary's turn."""
    while not is_terminal(state) and to_move(state) is strat.role:
        move = strat.choose(state, last_move)
        if move not in legal_moves(state):
            raise StrategyMoveError(state, move, "not among the legal moves")
        strat.notify(state, move, strat.role)
        state = apply_move(state, move)
        last_move = move
    return state


def worst_case_vs_optimal(
    g: Graph,
    strategy: Strategy,
    variant: Variant,
    objective: Objective,
    terminal_check: Callable[[GameState], None] | None = None,
) -> int:
    """Exact extremal value over all adversary plays with the strategy fixed."""
    value, _ = _sweep(g, strategy, variant, objective, terminal_check, want_line=False)
    return value


def worst_case_line(
    g: Graph,
    strategy: Strategy,
    variant: Variant,
    objective: Objective,
) -> tuple[int, list[Move]]:
    """Worst value plus one complete move list realizing it."""
    return _sweep(g, strategy, variant, objective, None, want_line=True)


def _sweep(g, strategy, variant, objective, terminal_check, want_line):
    adversary = strategy.role.opponent
    maximizing = adversary is Player.ONE
    memo: dict[tuple, int] = {}
    argbest: dict[tuple, Move] = {}

    def value(state: GameState, strat: Strategy, last_move: Move | None) -> int:
        state = _strategy_step(g, state, strat, last_move)
        if is_terminal(state):
            if terminal_check is not None:
                terminal_check(state)
            return terminal_value(state, g, objective)
        key = (state.zero, state.one, state.passes_used, strat.state_key())
        cached = memo.get(key)
        if cached is not None:
            return cached
        best: int | None = None
        best_move: Move | None = None
        for move in legal_moves(state):
            twin = strat.clone()
            twin.notify(state, move, adversary)
            child = value(apply_move(state, move), twin, move)
            if best is None or (child > best if maximizing else child < best):
                best = child
                best_move = move
        memo[key] = best
        if want_line:
            argbest[key] = best_move
        return best

    start = new_game(g, variant)
    result = value(start, strategy.clone(), None)
    if not want_line:
        return result, []

    # replay the adversary's extremal choices to produce a witness line
    line: list[Move] = []
    state = start
    strat = strategy.clone()
    last: Move | None = None
    while not is_terminal(state):
        if to_move(state) is strat.role:
            move = strat.choose(state, last)
            strat.notify(state, move, strat.role)
        else:
            key = (state.zero, state.one, state.passes_used, strat.state_key())
            move = argbest[key]
            strat.notify(state, move, adversary)
        line.append(move)
        state = apply_move(state, move)
        last = move
    return result, line
