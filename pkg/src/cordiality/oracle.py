"""Reference game evaluator: plain exhaustive recursion.

Deliberately shares no search machinery with the solver: no memoization,
no pruning, no move ordering, and an edge-loop terminal evaluation.  It
exists so the solver can be checked against an implementation simple
enough to audit by eye.
"""

from __future__ import annotations

from .game import Objective, Player, Variant
from .graphs import Graph

ORACLE_MAX_N = 10


def brute_force_value(g: Graph, variant: Variant, objective: Objective) -> int:
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"reference evaluator is capped at n = {ORACLE_MAX_N}")
    n = g.n
    full = (1 << n) - 1
    edges = g.edges
    budget = variant.pass_budget
    starter_is_zero = variant.starter is Player.ZERO
    cordiality = objective is Objective.CORDIALITY
    edge_count = len(edges)

    def recurse(zero: int, one: int, passes: int) -> int:
        free = full & ~(zero | one)
        if free == 0:
            e1 = 0
            for u, v in edges:
                if (zero >> u & 1) != (zero >> v & 1):
                    e1 += 1
            d = 2 * e1 - edge_count
            return abs(d) if cordiality else d
        plies = zero.bit_count() + one.bit_count() + passes
        zero_to_move = starter_is_zero == (plies % 2 == 0)
        best = None
        rest = free
        while rest:
            low = rest & -rest
            rest ^= low
            if zero_to_move:
                value = recurse(zero | low, one, passes)
                if best is None or value < best:
                    best = value
            else:
                value = recurse(zero, one | low, passes)
                if best is None or value > best:
                    best = value
        if not zero_to_move and passes < budget and free.bit_count() >= 2:
            value = recurse(zero, one, passes + 1)
            if value > best:
                best = value
        return best

    return recurse(0, 0, 0)
