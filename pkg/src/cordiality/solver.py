"""Exact game values by memoized minimax with optional alpha-beta search.

The search runs on bitmask positions keyed by (zero set, one set, passes);
whose turn it is follows from the counts.  The transposition table stores
integer value bounds per position, so null-window probing, re-searching,
and alpha-beta all stay exact.  Values share the parity of |E|, which lets
the driver probe on a stride-2 grid.  All option combinations return the
same value; options only change how much work is done.
"""

from __future__ import annotations

import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .game import (
    Move,
    Objective,
    Player,
    Variant,
    ONE_STARTS,
    ONE_STARTS_WITH_PASS,
    VARIANT_CODES,
    ZERO_STARTS,
)
from .graphs import Graph, from_edges

DEFAULT_MAX_N = 22
DEFAULT_TABLE_CAPACITY = 4_000_000

ENV_TABLE_CAP = "CORDIALITY_TABLE_CAP"
ENV_MAX_N = "CORDIALITY_MAX_N"

SYMMETRY_NONE = "none"
SYMMETRY_PATH_REVERSAL = "path_reversal"

_REV8 = tuple(int(f"{b:08b}"[::-1], 2) for b in range(256))

# packed table entries: (lo + _BIAS) << _SHIFT | (hi + _BIAS)
_BIAS = 512
_SHIFT = 11
_MASK = (1 << _SHIFT) - 1


class SolverCapError(ValueError):
    """Instance exceeds the configured hard cap."""


class SolveOptionsError(ValueError):
    pass


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        warnings.warn(f"ignoring non-integer {name}={raw!r}")
        return fallback


@dataclass(frozen=True)
class SolveOptions:
    """Search options; none of them affect the returned value."""

    use_alpha_beta: bool = True
    table_capacity: int | None = None  # None: CORDIALITY_TABLE_CAP or default
    parallel_root: bool = False
    jobs: int | None = None
    symmetry: str = SYMMETRY_NONE
    max_n: int | None = None  # None: CORDIALITY_MAX_N or default

    def resolved_capacity(self) -> int:
        if self.table_capacity is not None:
            return self.table_capacity
        return _env_int(ENV_TABLE_CAP, DEFAULT_TABLE_CAPACITY)

    def resolved_max_n(self) -> int:
        if self.max_n is not None:
            return self.max_n
        return _env_int(ENV_MAX_N, DEFAULT_MAX_N)


@dataclass(frozen=True)
class SolveResult:
    value: int
    best_move: Move | None
    nodes: int
    principal_line: list[Move] | None = field(default=None)


class _Searcher:
    def __init__(self, g: Graph, variant: Variant, objective: Objective, opts: SolveOptions):
        self.g = g
        self.n = g.n
        self.full = g.full_mask
        self.variant = variant
        self.objective = objective
        self.cordiality = objective is Objective.CORDIALITY
        self.starter_is_zero = variant.starter is Player.ZERO
        self.budget = variant.pass_budget
        self.edge_count = g.edge_count
        self.use_ab = opts.use_alpha_beta
        self.capacity = opts.resolved_capacity()
        self.table: dict[int, int] = {}
        self.max_value = self.edge_count
        self.min_value = 0 if self.cordiality else -self.edge_count
        self.reverse = opts.symmetry == SYMMETRY_PATH_REVERSAL
        if self.reverse:
            if not g.is_path() or g.path_order() != list(range(self.n)):
                raise SolveOptionsError(
                    "path_reversal symmetry needs a path with vertices in path order"
                )
        self._nodes_cell = [0]
        self._search = self._make_search()

    @property
    def nodes(self) -> int:
        return self._nodes_cell[0]

    def _make_search(self):
        # One closure with everything bound locally; this is the hot loop.
        n = self.n
        full = self.full
        adj = self.g.adj
        edge_count = self.edge_count
        cordiality = self.cordiality
        budget = self.budget
        use_ab = self.use_ab
        table = self.table
        capacity = self.capacity
        nodes_cell = self._nodes_cell
        order_bits = tuple(
            (v, 1 << v)
            for v in sorted(range(n), key=lambda v: (-self.g.degree(v), v))
        )
        reverse = self.reverse
        if reverse:
            rev_bytes = (n + 7) // 8
            rev_shift = 8 * rev_bytes - n
            rev8 = _REV8

            def rev_mask(mask: int) -> int:
                out = 0
                for _ in range(rev_bytes):
                    out = out << 8 | rev8[mask & 0xFF]
                    mask >>= 8
                return out >> rev_shift

        warned = [False]
        two_n = 2 * n

        def warn_capacity() -> None:
            if not warned[0]:
                warned[0] = True
                warnings.warn(
                    f"transposition table capacity {capacity} reached; "
                    "continuing without caching new positions"
                )

        def search(
            zero: int,
            one: int,
            free: int,
            passes: int,
            zero_to_move: bool,
            cross: int,
            alpha: int,
            beta: int,
        ) -> int:
            # cross = count of zero-one edges so far; at a full labeling the
            # signed score is 2*cross - |E|.
            if free == 0:
                d = 2 * cross - edge_count
                return abs(d) if cordiality else d
            can_pass = not zero_to_move and passes < budget and free & (free - 1)
            if free & (free - 1) == 0:  # one vertex left: forced label
                v = free.bit_length() - 1
                inc = (adj[v] & (one if zero_to_move else zero)).bit_count()
                d = 2 * (cross + inc) - edge_count
                return abs(d) if cordiality else d
            if not can_pass and free.bit_count() == 2:
                a_bit = free & -free
                b_bit = free ^ a_bit
                a = a_bit.bit_length() - 1
                b = b_bit.bit_length() - 1
                if zero_to_move:
                    # zero labels one, the other is forced to one
                    d1 = 2 * (cross + (adj[a] & one).bit_count()
                              + (adj[b] & (zero | a_bit)).bit_count()) - edge_count
                    d2 = 2 * (cross + (adj[b] & one).bit_count()
                              + (adj[a] & (zero | b_bit)).bit_count()) - edge_count
                    if cordiality:
                        d1 = abs(d1)
                        d2 = abs(d2)
                    return d1 if d1 < d2 else d2
                d1 = 2 * (cross + (adj[a] & zero).bit_count()
                          + (adj[b] & (one | a_bit)).bit_count()) - edge_count
                d2 = 2 * (cross + (adj[b] & zero).bit_count()
                          + (adj[a] & (one | b_bit)).bit_count()) - edge_count
                if cordiality:
                    d1 = abs(d1)
                    d2 = abs(d2)
                return d1 if d1 > d2 else d2
            key = passes << two_n | one << n | zero
            if reverse:
                rk = passes << two_n | rev_mask(one) << n | rev_mask(zero)
                if rk < key:
                    key = rk
            entry = table.get(key)
            if entry is not None:
                lo = (entry >> _SHIFT) - _BIAS
                hi = (entry & _MASK) - _BIAS
                if lo == hi or lo >= beta:
                    return lo
                if hi <= alpha:
                    return hi
                if alpha < lo:
                    alpha = lo
                if beta > hi:
                    beta = hi
            else:
                lo = -_BIAS + 1
                hi = _BIAS - 1
            nodes_cell[0] += 1
            if zero_to_move:
                g_val = _BIAS
                b = beta
                for v, bit in order_bits:
                    if not free & bit:
                        continue
                    inc = (adj[v] & one).bit_count()
                    value = search(zero | bit, one, free ^ bit, passes, False,
                                   cross + inc, alpha, b)
                    if value < g_val:
                        g_val = value
                        if use_ab:
                            if g_val <= alpha:
                                break
                            if g_val < b:
                                b = g_val
            else:
                g_val = -_BIAS
                a = alpha
                cut = False
                for v, bit in order_bits:
                    if not free & bit:
                        continue
                    inc = (adj[v] & zero).bit_count()
                    value = search(zero, one | bit, free ^ bit, passes, True,
                                   cross + inc, a, beta)
                    if value > g_val:
                        g_val = value
                        if use_ab:
                            if g_val >= beta:
                                cut = True
                                break
                            if g_val > a:
                                a = g_val
                if can_pass and not cut:
                    value = search(zero, one, free, passes + 1, True, cross, a, beta)
                    if value > g_val:
                        g_val = value
            if g_val <= alpha:
                if g_val < hi:
                    hi = g_val
            elif g_val >= beta:
                if g_val > lo:
                    lo = g_val
            else:
                lo = hi = g_val
            if entry is not None or len(table) < capacity:
                table[key] = (lo + _BIAS) << _SHIFT | (hi + _BIAS)
            else:
                warn_capacity()
            return g_val

        return search

    def state_value(self, zero: int, one: int, passes: int) -> int:
        """Exact value of a position, by grid probing if alpha-beta is on."""
        free = self.full & ~(zero | one)
        zero_to_move = self.starter_is_zero == (
            (zero.bit_count() + one.bit_count() + passes) % 2 == 0
        )
        cross = 0
        rest = zero
        while rest:
            low = rest & -rest
            rest ^= low
            cross += (self.g.adj[low.bit_length() - 1] & one).bit_count()
        if not self.use_ab:
            return self._search(
                zero, one, free, passes, zero_to_move, cross,
                self.min_value - 1, self.max_value + 1,
            )
        lo = self.edge_count % 2 if self.cordiality else self.min_value
        hi = self.max_value
        while lo < hi:
            # values live on a stride-2 grid; (gamma, gamma + 2) is a null
            # window there: either v <= gamma or v >= gamma + 2
            if self.cordiality:
                gamma = lo
            else:
                gamma = lo + 2 * ((hi - lo) // 4)
            g_val = self._search(zero, one, free, passes, zero_to_move, cross,
                                 gamma, gamma + 2)
            if g_val <= gamma:
                hi = g_val if g_val > lo else lo
            elif g_val >= gamma + 2:
                lo = g_val
            else:  # pragma: no cover - off-parity value would be a bug
                lo = hi = g_val
        return lo


def _root_moves(g: Graph, searcher: _Searcher, zero: int, one: int, passes: int) -> list[Move]:
    """Legal moves in ascending-vertex order with any pass last."""
    free = searcher.full & ~(zero | one)
    moves = [Move.label(v) for v in range(g.n) if free >> v & 1]
    plies = zero.bit_count() + one.bit_count() + passes
    zero_to_move = searcher.starter_is_zero == (plies % 2 == 0)
    if not zero_to_move and passes < searcher.budget and free & (free - 1):
        moves.append(Move(None))
    return moves


def _apply(zero: int, one: int, passes: int, move: Move, zero_to_move: bool) -> tuple[int, int, int]:
    if move.is_pass:
        return zero, one, passes + 1
    bit = 1 << move.vertex
    if zero_to_move:
        return zero | bit, one, passes
    return zero, one | bit, passes


def _descend_line(g: Graph, searcher: _Searcher) -> list[Move]:
    zero = one = passes = 0
    line: list[Move] = []
    while searcher.full & ~(zero | one):
        target = searcher.state_value(zero, one, passes)
        plies = zero.bit_count() + one.bit_count() + passes
        zero_to_move = searcher.starter_is_zero == (plies % 2 == 0)
        for move in _root_moves(g, searcher, zero, one, passes):
            nxt = _apply(zero, one, passes, move, zero_to_move)
            if searcher.state_value(*nxt) == target:
                line.append(move)
                zero, one, passes = nxt
                break
        else:  # pragma: no cover - would indicate a search bug
            raise RuntimeError("no move preserves the solved value")
    return line


def _child_value_worker(args: tuple) -> tuple[int, int]:
    n, edges, variant_code, objective_value, zero, one, passes, use_ab, capacity, symmetry = args
    g = from_edges(n, list(edges))
    opts = SolveOptions(
        use_alpha_beta=use_ab,
        table_capacity=capacity,
        symmetry=symmetry,
        parallel_root=False,
    )
    searcher = _Searcher(g, VARIANT_CODES[variant_code], Objective(objective_value), opts)
    return searcher.state_value(zero, one, passes), searcher.nodes


def solve(
    g: Graph,
    variant: Variant,
    objective: Objective,
    opts: SolveOptions | None = None,
) -> SolveResult:
    """Exact game value, a best first move, and a principal line.

    Ties among optimal moves break toward the lowest vertex index, with a
    pass ranked after every label.  In parallel mode the principal line is
    omitted (each root child is solved in a separate process and the line
    would have to be re-derived sequentially); use ``best_line`` for it.
    """
    opts = opts or SolveOptions()
    cap = opts.resolved_max_n()
    if g.n > cap:
        raise SolverCapError(
            f"graph has {g.n} vertices, above the hard cap {cap}; "
            f"raise max_n or {ENV_MAX_N} to override"
        )
    searcher = _Searcher(g, variant, objective, opts)
    if g.n == 0:
        return SolveResult(value=0, best_move=None, nodes=0, principal_line=[])
    if opts.parallel_root:
        moves = _root_moves(g, searcher, 0, 0, 0)
        zero_to_move = searcher.starter_is_zero
        specs = []
        for move in moves:
            zero, one, passes = _apply(0, 0, 0, move, zero_to_move)
            specs.append(
                (
                    g.n,
                    g.edges,
                    variant.code,
                    objective.value,
                    zero,
                    one,
                    passes,
                    opts.use_alpha_beta,
                    opts.table_capacity,
                    opts.symmetry,
                )
            )
        jobs = opts.jobs or min(len(moves), os.cpu_count() or 1)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_child_value_worker, specs))
        values = [value for value, _ in results]
        pick = min if zero_to_move else max
        best_value = pick(values)
        best_move = moves[values.index(best_value)]  # first hit = lowest label
        total_nodes = 1 + sum(nodes for _, nodes in results)
        return SolveResult(value=best_value, best_move=best_move, nodes=total_nodes, principal_line=None)
    value = searcher.state_value(0, 0, 0)
    line = _descend_line(g, searcher)
    return SolveResult(
        value=value,
        best_move=line[0] if line else None,
        nodes=searcher.nodes,
        principal_line=line,
    )


def best_line(g: Graph, variant: Variant, objective: Objective, opts: SolveOptions | None = None) -> list[Move]:
    """A principal variation realizing the game value."""
    opts = opts or SolveOptions()
    if opts.parallel_root:
        opts = replace(opts, parallel_root=False)
    return solve(g, variant, objective, opts).principal_line or []


GAME_NUMBERS = {
    "cg": (ZERO_STARTS, Objective.CORDIALITY),
    "cg_i": (ONE_STARTS, Objective.CORDIALITY),
    "cg_ip": (ONE_STARTS_WITH_PASS, Objective.CORDIALITY),
    "bg": (ZERO_STARTS, Objective.BALANCE),
}


def game_number(g: Graph, which: str, opts: SolveOptions | None = None) -> int:
    """One of the four standard game values.

    "cg": cordiality, zero player starts.  "cg_i": cordiality, one player
    starts.  "cg_ip": cordiality, one player starts and may pass once.
    "bg": balance (signed), zero player starts.
    """
    try:
        variant, objective = GAME_NUMBERS[which]
    except KeyError:
        raise ValueError(f"unknown game number {which!r}; pick from {sorted(GAME_NUMBERS)}")
    return solve(g, variant, objective, opts).value
