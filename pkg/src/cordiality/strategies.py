"""Executable labeling strategies with verifiable worst-case guarantees.

All zero-player strategies here share one structure: a component is either
played by a small scripted policy (paths of up to 6 vertices, or one of the
branch shapes from ``branching``), or split into a main part, which the
strategy opens and keeps strictly alternating by answering every opponent
move in the same part, and a small even-sized branch part handled by a
script.  Scripts therefore have to tolerate three local move orders: the
zero player opens, the opponent opens, or the opponent opens and later the
zero player moves twice in a row (local pass).  Script decisions are driven
by the observed local position plus the opponent's last move, so cloned
strategies stay cheap and playout memoization merges across interleavings.

The one-player balance strategy mirrors the same split idea: a recursive
main path plus a terminal vertex pair whose inner edge it always claims.
"""

from __future__ import annotations

from .branching import BranchDecomposition, find_branch_in
from .game import GameState, Move, Player, Variant
from .graphs import Graph, GraphError
from .trees import NonTreeError


class StrategyError(RuntimeError):
    """A strategy produced no move or an illegal one; always a bug."""


class Strategy:
    """Deterministic move policy for one side of the game."""

    role: Player = Player.ZERO
    provenance: str = "abstract"

    def choose(self, state: GameState, last_move: Move | None) -> Move:
        raise NotImplementedError

    def notify(self, state_before: GameState, move: Move, mover: Player) -> None:
        """Observe any move (either player's); default policies are stateless."""

    def clone(self) -> "Strategy":
        return self  # stateless policies may be shared freely

    def state_key(self) -> object:
        return ()


def _min_free(free: set[int]) -> int:
    return min(free)


class _ScriptBase(Strategy):
    """Zero-player policy over a fixed tuple of host vertices.

    Scripts reason in 1-based local positions; ``verts[i]`` is position
    i + 1.  ``_view`` extracts (own, opp, free, prompted) where prompted is
    the local position of the opponent's last label when it landed in this
    script's territory.
    """

    def __init__(self, verts: tuple[int, ...]):
        self.verts = tuple(verts)
        self._pos = {v: i + 1 for i, v in enumerate(self.verts)}

    def _view(self, state: GameState, last_move: Move | None):
        own = {self._pos[v] for v in state.zero if v in self._pos}
        opp = {self._pos[v] for v in state.one if v in self._pos}
        free = {i + 1 for i, v in enumerate(self.verts)
                if v not in state.zero and v not in state.one}
        prompted = None
        if last_move is not None and not last_move.is_pass:
            prompted = self._pos.get(last_move.vertex)
            if prompted in own:
                prompted = None  # our own previous move, not a prompt
        return own, opp, free, prompted

    def choose(self, state: GameState, last_move: Move | None) -> Move:
        own, opp, free, prompted = self._view(state, last_move)
        if not free:
            raise StrategyError(f"{self.provenance}: asked to move with no free vertex")
        return Move.label(self.verts[self._decide(own, opp, free, prompted) - 1])

    def _decide(self, own: set, opp: set, free: set, prompted: int | None) -> int:
        raise NotImplementedError


class TinyScript(_ScriptBase):
    """Any move is optimal on a 1 or 2 vertex path component."""

    provenance = "exact-tiny"

    def _decide(self, own, opp, free, prompted):
        return _min_free(free)


class Path3Script(_ScriptBase):
    """Path a-b-c: take the middle when opening, avoid it when answering."""

    provenance = "path-script-3"

    def _decide(self, own, opp, free, prompted):
        if prompted is None:
            return 2 if 2 in free else _min_free(free)
        safe = free - {2}
        return _min_free(safe) if safe else _min_free(free)


class _ClassScript(_ScriptBase):
    """Answer in the class the opponent just played; used for P4 and P5.

    Classes are the two alternating position sets of the path.  Ending with
    a label in each class keeps the path's edge discrepancy at 1 (P4) or
    2 (P5) no matter what the opponent does.
    """

    classes: tuple[frozenset, frozenset] = (frozenset(), frozenset())

    def _decide(self, own, opp, free, prompted):
        first, second = self.classes
        if prompted is not None:
            cls = first if prompted in first else second
            mine = free & cls
            if mine:
                return _min_free(mine)
            other = free & (second if cls is first else first)
            return _min_free(other) if other else _min_free(free)
        lacking = [c for c in self.classes if not own & c and free & c]
        if len(lacking) == 1:
            return _min_free(free & lacking[0])
        return _min_free(free)


class Path4Script(_ClassScript):
    provenance = "path-script-4"
    classes = (frozenset({1, 3}), frozenset({2, 4}))


class Path5Script(_ClassScript):
    provenance = "path-script-5"
    classes = (frozenset({1, 3, 5}), frozenset({2, 4}))


_P6_BAD = (
    frozenset({1, 3, 5}), frozenset({2, 4, 6}),
    frozenset({1, 2, 3}), frozenset({4, 5, 6}),
    frozenset({2, 3, 5}), frozenset({2, 4, 5}),
    frozenset({1, 4, 6}), frozenset({1, 3, 6}),
)


def _avoid_bad(own: set, free: set, bad: tuple) -> int:
    for cand in sorted(free):
        if frozenset(own | {cand}) not in bad:
            return cand
    return _min_free(free)


class _FirstMoveMemory(_ScriptBase):
    """Script that remembers who opened its territory and with what."""

    def __init__(self, verts):
        super().__init__(verts)
        self.opened_by_us = False
        self.opp_first: int | None = None

    def notify(self, state_before, move, mover):
        if move.is_pass or move.vertex not in self._pos:
            return
        if mover is self.role:
            if self.opp_first is None and not self.opened_by_us:
                self.opened_by_us = True
        elif self.opp_first is None:
            self.opp_first = self._pos[move.vertex]

    def clone(self):
        twin = type(self)(self.verts)
        twin.opened_by_us = self.opened_by_us
        twin.opp_first = self.opp_first
        return twin

    def state_key(self):
        return (self.opened_by_us, self.opp_first)


class Path6Script(_FirstMoveMemory):
    """Endgame book for a 6-vertex path; final discrepancy 1 in every order.

    Opening: take an end, then the adjacent or the mirror-adjacent spot,
    then anything that completes none of the eight discrepancy>=3 sets.
    Answering: mirror-pair the opponent's opening (1->3, 2->5, 3->1 and the
    reversed images), then steer by the stored opening.
    """

    provenance = "path-script-6"

    def _decide(self, own, opp, free, prompted):
        if self.opened_by_us or (self.opp_first is None):
            if not own:
                return 1
            if len(own) == 1:
                return 2 if 2 in free else (5 if 5 in free else _avoid_bad(own, free, _P6_BAD))
            return _avoid_bad(own, free, _P6_BAD)
        i1 = self.opp_first
        if i1 >= 4:  # play the reversed-path image of the script
            mirror = {p: 7 - p for p in range(1, 7)}
            local = self._decide_opened({mirror[p] for p in own},
                                        {mirror[p] for p in opp},
                                        {mirror[p] for p in free},
                                        7 - i1,
                                        None if prompted is None else mirror[prompted])
            return mirror[local]
        return self._decide_opened(own, opp, free, i1, prompted)

    def _decide_opened(self, own, opp, free, i1, prompted):
        if not own:
            return {1: 3, 2: 5, 3: 1}[i1]
        if i1 == 1:
            if len(own) == 1:
                side = free & {4, 6}
                return _min_free(side) if side else _avoid_bad(own, free, _P6_BAD)
            return _avoid_bad(own, free, _P6_BAD)
        if i1 == 3:
            if len(own) == 1:
                side = free & {2, 5}
                return _min_free(side) if side else _avoid_bad(own, free, _P6_BAD)
            return _avoid_bad(own, free, _P6_BAD)
        # opponent opened on 2: finish with one label in each outer pair,
        # following them into whichever pair they just played
        pairs = (frozenset({1, 3}), frozenset({4, 6}))
        lacking = [p for p in pairs if not own & p and free & p]
        if prompted is not None:
            for pair in lacking:
                if prompted in pair:
                    return _min_free(free & pair)
        if lacking:
            return _min_free(free & lacking[0])
        return _avoid_bad(own, free, _P6_BAD)


class PairScript(_ScriptBase):
    """Two leaves under one center; take the sibling of whatever they take.

    With two vertices, the sibling of the opponent's pick is the lone free
    one, so the rule collapses to taking the lowest free vertex."""

    provenance = "leaf-pair"

    def _decide(self, own, opp, free, prompted):
        return _min_free(free)


class Case3Script(_ScriptBase):
    """Two 2-paths under one center v: positions (1,2) and (3,4) with 2 and
    3 adjacent to v.  Securing exactly one of {2,3} cancels the two center
    edges, leaving at most 2 from the outer edges."""

    provenance = "twin-2-arms"

    def _decide(self, own, opp, free, prompted):
        middle = {2, 3}
        outer = {1, 4}
        if not own & middle:
            if prompted in middle:
                other = middle - {prompted}
                if other & free:
                    return _min_free(other & free)
            if prompted in outer:
                other = outer - {prompted}
                if other & free:
                    return _min_free(other & free)
                if free & middle:
                    return _min_free(free & middle)
            if free & middle:
                return _min_free(free & middle)
            return _min_free(free)
        if free & outer:
            return _min_free(free & outer)
        return _min_free(free)


class Case5Script(_ScriptBase):
    """A leaf and a 3-path under one center: pairs (1,2) and (3,4).

    One label in each pair balances the two center edges and bounds the
    arm edges by 2.  Follow the opponent into whichever pair they play."""

    provenance = "leaf-and-3-arm"

    pairs = (frozenset({1, 2}), frozenset({3, 4}))

    def _decide(self, own, opp, free, prompted):
        lacking = [p for p in self.pairs if not own & p and free & p]
        if prompted is not None:
            for p in lacking:
                if prompted in p:
                    return _min_free(free & p)
        if lacking:
            return _min_free(free & lacking[0])
        return _min_free(free)


_CASE6_WIN_SPLIT = (
    frozenset({1, 2, 5}), frozenset({1, 2, 6}), frozenset({1, 3, 6}),
    frozenset({1, 5, 6}), frozenset({2, 3, 4}), frozenset({2, 4, 5}),
    frozenset({3, 4, 5}), frozenset({3, 4, 6}),
)
_CASE6_WIN_EVEN = (
    frozenset({1, 2, 4}), frozenset({1, 4, 5}),
    frozenset({2, 3, 6}), frozenset({3, 5, 6}),
)
CASE6_WINNING_SETS = _CASE6_WIN_SPLIT + _CASE6_WIN_EVEN


class Case6Script(_FirstMoveMemory):
    """Two 3-paths under one center: arms (1,2,3) and (4,5,6), with 1 and 4
    adjacent to the center.  Every finished labeling lands in one of the
    twelve sets of CASE6_WINNING_SETS, keeping the seven branch edges within
    discrepancy 2 regardless of the center's label."""

    provenance = "twin-3-arms"

    def _decide(self, own, opp, free, prompted):
        if self.opened_by_us or (self.opp_first is None):
            if not own:
                return 1
            if len(own) == 1:
                return 2 if 6 in opp else (6 if 6 in free else _min_free(free))
            if own == {1, 6}:
                non_center = sorted(free - {4})
                return non_center[0] if non_center else _min_free(free)
            if own == {1, 2}:
                if 4 in opp:
                    return 5 if 5 in free else _min_free(free)
                return 4 if 4 in free else _min_free(free)
            return _min_free(free)
        i1 = self.opp_first
        if i1 >= 4:  # swap the two arms
            swap = {1: 4, 2: 5, 3: 6, 4: 1, 5: 2, 6: 3}
            local = self._decide_opened({swap[p] for p in own},
                                        {swap[p] for p in opp},
                                        {swap[p] for p in free},
                                        swap[i1],
                                        None if prompted is None else swap[prompted])
            return swap[local]
        return self._decide_opened(own, opp, free, i1, prompted)

    def _decide_opened(self, own, opp, free, i1, prompted):
        if not own:
            return {1: 3, 2: 5, 3: 1}[i1]
        if i1 == 1:
            if len(own) == 1:
                if 4 in opp:
                    return 6 if 6 in free else _min_free(free)
                return 4 if 4 in free else _min_free(free)
            return _min_free(free)
        if i1 == 3:
            if len(own) == 1:
                if 5 in opp:
                    return 2 if 2 in free else _min_free(free)
                return 5 if 5 in free else _min_free(free)
            return _min_free(free)
        # opponent opened on 2: answered with 5; finish one per outer pair,
        # following them into whichever pair they just played
        pairs = (frozenset({1, 3}), frozenset({4, 6}))
        lacking = [p for p in pairs if not own & p and free & p]
        if prompted is not None:
            for pair in lacking:
                if prompted in pair:
                    return _min_free(free & pair)
        if lacking:
            return _min_free(free & lacking[0])
        return _min_free(free)


class SplitStrategy(Strategy):
    """Open in the main part; answer the opponent inside the part they play.

    When the opponent's move fills the main part, the next reply opens the
    branch part, which its script experiences as a local pass.  The branch
    part has even order and is answered immediately, so it can never be
    filled by the opponent while the main part is still open.
    """

    def __init__(self, main: Strategy, branch: Strategy,
                 main_verts: frozenset[int], branch_verts: frozenset[int],
                 provenance: str):
        self.main = main
        self.branch = branch
        self.main_verts = main_verts
        self.branch_verts = branch_verts
        self.provenance = provenance

    def clone(self):
        return SplitStrategy(self.main.clone(), self.branch.clone(),
                             self.main_verts, self.branch_verts, self.provenance)

    def state_key(self):
        return (self.main.state_key(), self.branch.state_key())

    def notify(self, state_before, move, mover):
        self.main.notify(state_before, move, mover)
        self.branch.notify(state_before, move, mover)

    def choose(self, state: GameState, last_move: Move | None) -> Move:
        unlabeled = state.unlabeled
        main_free = self.main_verts & unlabeled
        branch_free = self.branch_verts & unlabeled
        if last_move is None:
            if state.labeled_count:
                raise StrategyError(f"{self.provenance}: unprompted move mid-game")
            return self.main.choose(state, None)
        if last_move.is_pass:
            raise StrategyError(f"{self.provenance}: built for pass-free variants")
        v = last_move.vertex
        if v in self.main_verts:
            if main_free:
                return self.main.choose(state, last_move)
            if branch_free:
                return self.branch.choose(state, last_move)
        else:
            if branch_free:
                return self.branch.choose(state, last_move)
            if main_free:
                raise StrategyError(
                    f"{self.provenance}: branch part closed by the opponent; "
                    "the pairing discipline was broken"
                )
        raise StrategyError(f"{self.provenance}: no free vertex to play")


def _path_policy(ordered: tuple[int, ...]) -> Strategy:
    k = len(ordered)
    if k <= 2:
        return TinyScript(ordered)
    if k == 3:
        return Path3Script(ordered)
    if k == 4:
        return Path4Script(ordered)
    if k == 5:
        return Path5Script(ordered)
    if k == 6:
        return Path6Script(ordered)
    prefix, suffix = ordered[:-6], ordered[-6:]
    return SplitStrategy(
        main=_path_policy(prefix),
        branch=Path6Script(suffix),
        main_verts=frozenset(prefix),
        branch_verts=frozenset(suffix),
        provenance="split-path",
    )


def small_path_strategy(n: int, variant: Variant) -> Strategy:
    """Scripted optimal zero-player policy for paths of 3 to 6 vertices.

    The script adapts to the observed move order, so the same object is
    correct under every starter/pass variant."""
    del variant  # the scripts branch on what they see, not on the label
    if not 3 <= n <= 6:
        raise GraphError("scripts cover paths on 3 to 6 vertices")
    return _path_policy(tuple(range(n)))


def path_strategy(n: int) -> Strategy:
    """Recursive zero-player strategy for the path on n vertices.

    Splits off the last six vertices, plays the scripted endgame there, and
    recurses on the prefix, answering the opponent part-for-part.  Against
    any play of the maximizer in the zero-starts game its final discrepancy
    is within the mod-6 path bound.
    """
    if n < 3:
        raise GraphError("path strategy needs at least 3 vertices")
    return _path_policy(tuple(range(n)))


def _induced_path_order(g: Graph, verts: frozenset[int]) -> tuple[int, ...] | None:
    degs = {}
    for v in verts:
        degs[v] = sum(1 for u in g.neighbors(v) if u in verts)
    if any(d > 2 for d in degs.values()):
        return None
    if len(verts) == 1:
        return (next(iter(verts)),)
    ends = sorted(v for v, d in degs.items() if d <= 1)
    if len(ends) != 2:
        return None
    order = [ends[0]]
    prev = None
    cur = ends[0]
    while len(order) < len(verts):
        nxt = [u for u in g.neighbors(cur) if u in verts and u != prev]
        if not nxt:
            return None
        prev, cur = cur, nxt[0]
        order.append(cur)
    return tuple(order)


_CASE_SCRIPTS = {
    1: lambda r: Path4Script((r["v1"], r["v2"], r["v3"], r["v4"])),
    2: lambda r: PairScript((r["v1"], r["v2"])),
    3: lambda r: Case3Script((r["v1"], r["v2"], r["v3"], r["v4"])),
    4: lambda r: Path4Script((r["v4"], r["v1"], r["v2"], r["v3"])),
    5: lambda r: Case5Script((r["v1"], r["v2"], r["v3"], r["v4"])),
    6: lambda r: Case6Script((r["v1"], r["v2"], r["v3"], r["v4"], r["v5"], r["v6"])),
    7: lambda r: Path6Script((r["v3"], r["v2"], r["v1"], r["v4"], r["v5"], r["v6"])),
}


def branch_script(decomposition: BranchDecomposition) -> Strategy:
    """The scripted policy for the interior of a decomposed branch."""
    return _CASE_SCRIPTS[decomposition.case_id](decomposition.roles)


def _tree_policy(g: Graph, verts: frozenset[int]) -> Strategy:
    order = _induced_path_order(g, verts)
    if order is not None:
        return _path_policy(order)
    decomposition = find_branch_in(g, verts)
    return SplitStrategy(
        main=_tree_policy(g, decomposition.remainder_vertices),
        branch=branch_script(decomposition),
        main_verts=decomposition.remainder_vertices,
        branch_verts=decomposition.branch_vertices,
        provenance="split-tree",
    )


def tree_strategy(t: Graph) -> Strategy:
    """Recursive zero-player strategy for a tree; worst case within n/2.

    Peels one branch shape at a time (see ``branching``), playing each
    branch interior by its script and the remainder recursively.
    """
    if not t.is_tree():
        raise NonTreeError("tree strategy needs a tree")
    return _tree_policy(t, frozenset(range(t.n)))


class BalancePairStrategy(Strategy):
    """One-player strategy keeping the signed score of a path non-negative.

    The last two path vertices form a pair whose inner edge this strategy
    always gets labeled 1: answer any opponent move in the pair with the
    pair's other vertex, and grab the far end the moment the opponent
    finishes the prefix.  The prefix replays the same idea recursively.
    """

    role = Player.ONE
    provenance = "balance-pair-split"

    def __init__(self, ordered: tuple[int, ...]):
        if len(ordered) < 2:
            raise GraphError("balance strategy needs at least 2 vertices")
        self.ordered = tuple(ordered)
        self.pair = (ordered[-2], ordered[-1])
        prefix = ordered[:-2]
        self.prefix_verts = frozenset(prefix)
        self.prefix_policy = BalancePairStrategy(prefix) if len(prefix) >= 2 else None

    def choose(self, state: GameState, last_move: Move | None) -> Move:
        if last_move is None or last_move.is_pass:
            raise StrategyError("balance strategy expects the opponent to start")
        v = last_move.vertex
        unlabeled = state.unlabeled
        near, far = self.pair
        if v in (near, far):
            other = far if v == near else near
            if other in unlabeled:
                return Move.label(other)
            raise StrategyError("pair closed out of order")  # pragma: no cover
        if self.prefix_verts & unlabeled:
            if self.prefix_policy is None:  # pragma: no cover - 1-vertex prefix
                raise StrategyError("single-vertex prefix cannot be open here")
            return self.prefix_policy.choose(state, last_move)
        # the opponent just finished the prefix: take the far end
        if far in unlabeled:
            return Move.label(far)
        if near in unlabeled:  # pragma: no cover - defensive
            return Move.label(near)
        raise StrategyError("no free vertex to play")  # pragma: no cover


def balance_maximizer_strategy(n: int) -> Strategy:
    """One-player strategy for the zero-starts balance game on the path."""
    if n < 2:
        raise GraphError("balance strategy needs at least 2 vertices")
    return BalancePairStrategy(tuple(range(n)))


def suffix_pair_edge(n: int) -> tuple[int, int]:
    """The path edge the balance strategy always gets labeled 1."""
    return (n - 2, n - 1)


def path_bound(n: int) -> int:
    """Guaranteed-achievable path discrepancy bound, mod-3 form."""
    return {0: (n - 3) // 3, 1: (n - 1) // 3, 2: (n + 1) // 3}[n % 3]


def path_bound_mod6(n: int) -> int:
    """The same bound in its mod-6 form (equal to ``path_bound``)."""
    return 2 * (n // 6) + {0: -1, 1: 0, 2: 1, 3: 0, 4: 1, 5: 2}[n % 6]


def tree_bound(n: int) -> int:
    """Guaranteed-achievable tree discrepancy bound."""
    return n // 2
