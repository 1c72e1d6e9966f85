"""Game mechanics: states, variants, objectives, moves, terminal scoring.

Two players alternately label unlabeled vertices.  The zero player (wire
code "A") labels vertices 0 and tries to minimize the final score; the one
player (wire code "I") labels vertices 1 and maximizes.  An edge's label is
the XOR of its endpoint labels, so label-1 edges are exactly the edges cut
by the bipartition.  The score is |e1 - e0| under the cordiality objective
and e1 - e0 under the balance objective.

A variant names the starting player and whether the one player may pass.
Passing consumes the turn; it is legal only while at least two vertices
remain unlabeled, which is the reading under which the small-path values
this package verifies actually hold (a pass with one vertex left would hand
the last two labels of an odd path to the zero player).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .graphs import Graph


class Player(Enum):
    ZERO = "A"
    ONE = "I"

    @property
    def opponent(self) -> "Player":
        return Player.ONE if self is Player.ZERO else Player.ZERO


class Objective(Enum):
    CORDIALITY = "cordiality"
    BALANCE = "balance"


@dataclass(frozen=True)
class Variant:
    starter: Player
    pass_budget: int = 0

    def __post_init__(self) -> None:
        if self.pass_budget not in (0, 1):
            raise ValueError("pass budget must be 0 or 1")
        if self.pass_budget and self.starter is not Player.ONE:
            raise ValueError("only the one player may hold a pass")

    @property
    def code(self) -> str:
        if self.pass_budget:
            return "I+pass"
        return self.starter.value


ZERO_STARTS = Variant(Player.ZERO, 0)
ONE_STARTS = Variant(Player.ONE, 0)
ONE_STARTS_WITH_PASS = Variant(Player.ONE, 1)

VARIANT_CODES = {
    "A": ZERO_STARTS,
    "I": ONE_STARTS,
    "I+pass": ONE_STARTS_WITH_PASS,
}


@dataclass(frozen=True)
class Move:
    """Either a vertex label or a pass (vertex None)."""

    vertex: int | None

    @property
    def is_pass(self) -> bool:
        return self.vertex is None

    @classmethod
    def label(cls, v: int) -> "Move":
        return cls(v)

    def to_json(self) -> int | str:
        return "pass" if self.vertex is None else self.vertex

    def __repr__(self) -> str:
        return "Move(pass)" if self.is_pass else f"Move({self.vertex})"


PASS = Move(None)


class IllegalMoveError(ValueError):
    pass


@dataclass(frozen=True)
class GameState:
    """Immutable position: who has labeled what, and passes spent."""

    n: int
    variant: Variant
    zero: frozenset[int]
    one: frozenset[int]
    passes_used: int

    @property
    def labeled_count(self) -> int:
        return len(self.zero) + len(self.one)

    @property
    def unlabeled(self) -> frozenset[int]:
        return frozenset(range(self.n)) - self.zero - self.one


def new_game(g: Graph, variant: Variant) -> GameState:
    return GameState(g.n, variant, frozenset(), frozenset(), 0)


def is_terminal(state: GameState) -> bool:
    return state.labeled_count == state.n


def to_move(state: GameState) -> Player:
    plies = state.labeled_count + state.passes_used
    return state.variant.starter if plies % 2 == 0 else state.variant.starter.opponent


def legal_moves(state: GameState) -> list[Move]:
    if is_terminal(state):
        return []
    moves = [Move.label(v) for v in sorted(state.unlabeled)]
    if (
        to_move(state) is Player.ONE
        and state.passes_used < state.variant.pass_budget
        and state.n - state.labeled_count >= 2
    ):
        moves.append(PASS)
    return moves


def apply_move(state: GameState, move: Move) -> GameState:
    if is_terminal(state):
        raise IllegalMoveError("game is over")
    mover = to_move(state)
    if move.is_pass:
        if mover is not Player.ONE:
            raise IllegalMoveError("only the one player may pass")
        if state.passes_used >= state.variant.pass_budget:
            raise IllegalMoveError("no pass budget remaining")
        if state.n - state.labeled_count < 2:
            raise IllegalMoveError("passing requires at least two unlabeled vertices")
        return GameState(state.n, state.variant, state.zero, state.one, state.passes_used + 1)
    v = move.vertex
    if not (isinstance(v, int) and 0 <= v < state.n):
        raise IllegalMoveError(f"vertex {v!r} is out of range")
    if v in state.zero or v in state.one:
        raise IllegalMoveError(f"vertex {v} is already labeled")
    if mover is Player.ZERO:
        return GameState(state.n, state.variant, state.zero | {v}, state.one, state.passes_used)
    return GameState(state.n, state.variant, state.zero, state.one | {v}, state.passes_used)


def edge_counts(state: GameState, g: Graph) -> tuple[int, int]:
    """(e0, e1) over fully labeled positions."""
    if not is_terminal(state):
        raise IllegalMoveError("position is not fully labeled")
    e1 = 0
    for u, v in g.edges:
        if (u in state.zero) != (v in state.zero):
            e1 += 1
    return g.edge_count - e1, e1


def terminal_value(state: GameState, g: Graph, objective: Objective) -> int:
    e0, e1 = edge_counts(state, g)
    d = e1 - e0
    return abs(d) if objective is Objective.CORDIALITY else d


def replay(g: Graph, variant: Variant, moves: Iterable[Move]) -> GameState:
    """Apply a move sequence from the start, validating each move."""
    state = new_game(g, variant)
    for move in moves:
        state = apply_move(state, move)
    return state


def transcript(g: Graph, variant: Variant, moves: list[Move], objective: Objective) -> dict:
    """JSON-friendly record of a full game for replay and debugging."""
    state = new_game(g, variant)
    entries = []
    for move in moves:
        entries.append({"player": to_move(state).value, "move": move.to_json()})
        state = apply_move(state, move)
    record: dict = {"variant": variant.code, "moves": entries}
    if is_terminal(state):
        labels = {}
        for u, v in g.edges:
            labels[f"{u}-{v}"] = int((u in state.zero) != (v in state.zero))
        record["value"] = terminal_value(state, g, objective)
        record["objective"] = objective.value
        record["edge_labels"] = labels
    return record
