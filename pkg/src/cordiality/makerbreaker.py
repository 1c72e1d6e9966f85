"""Positional-game view: winning families and the Maker-Breaker solver.

For a threshold k, the winning family holds every vertex set that is one
part of a balanced bipartition whose discrepancy meets the threshold
(absolute discrepancy |2*cut - |E|| <= k under the cordiality objective,
signed 2*cut - |E| <= k under balance).  Maker moves as the zero player
and wins if the set he has claimed at the end lies in the family; Breaker
moves as the one player and tries to prevent that.

This solver shares no code with the minimax solver; agreement between
``maker_breaker_value`` and ``game_number`` is checked by tests rather
than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .game import Objective, Player, Variant
from .graphs import Graph, cut_size_of_mask, iter_bits

FAMILY_MAX_N = 20
MB_MAX_N = 14


@dataclass(frozen=True)
class SetFamily:
    """A family of vertex subsets of 0..ground-1, deterministically ordered."""

    ground: int
    members: tuple[frozenset[int], ...]

    def masks(self) -> frozenset[int]:
        out = set()
        for member in self.members:
            mask = 0
            for v in member:
                mask |= 1 << v
            out.add(mask)
        return frozenset(out)

    def __len__(self) -> int:
        return len(self.members)


def winning_family(g: Graph, k: int, objective: Objective) -> SetFamily:
    """All balanced-bipartition parts with discrepancy at most k."""
    if g.n > FAMILY_MAX_N:
        raise ValueError(f"family enumeration is capped at n = {FAMILY_MAX_N}")
    n = g.n
    e = g.edge_count
    lo_size = n // 2
    hi_size = (n + 1) // 2
    members = []
    for mask in range(1 << n):
        size = mask.bit_count()
        if size != lo_size and size != hi_size:
            continue
        signed = 2 * cut_size_of_mask(g, mask) - e
        d = abs(signed) if objective is Objective.CORDIALITY else signed
        if d <= k:
            members.append(frozenset(iter_bits(mask)))
    members.sort(key=lambda s: tuple(sorted(s)))
    return SetFamily(ground=n, members=tuple(members))


def _maker_wins(g: Graph, family_masks: frozenset[int], variant: Variant, exact: bool) -> bool:
    n = g.n
    full = g.full_mask
    budget = variant.pass_budget
    starter_is_zero = variant.starter is Player.ZERO
    masks = family_masks
    member_list = tuple(family_masks)
    memo: dict[int, bool] = {}
    two_n = 2 * n

    def wins(zero: int, one: int, passes: int) -> bool:
        free = full & ~(zero | one)
        if free == 0:
            if exact:
                return zero in masks
            return any(w & ~zero == 0 for w in member_list)
        key = passes << two_n | one << n | zero
        cached = memo.get(key)
        if cached is not None:
            return cached
        plies = zero.bit_count() + one.bit_count() + passes
        zero_to_move = starter_is_zero == (plies % 2 == 0)
        if zero_to_move:
            result = False
            rest = free
            while rest:
                low = rest & -rest
                rest ^= low
                if wins(zero | low, one, passes):
                    result = True
                    break
        else:
            result = True
            rest = free
            while rest:
                low = rest & -rest
                rest ^= low
                if not wins(zero, one | low, passes):
                    result = False
                    break
            if result and passes < budget and free & (free - 1):
                result = wins(zero, one, passes + 1)
        memo[key] = result
        return result

    return wins(0, 0, 0)


def maker_breaker_value(
    g: Graph,
    variant: Variant,
    objective: Objective,
    exact_membership: bool = True,
) -> int:
    """Smallest k for which Maker can force his final set into the family.

    ``exact_membership=True`` requires the claimed set to be a family
    member; False accepts any claimed superset of a member (the common
    Maker-Breaker convention; for these families the two readings can
    differ only on odd orders).
    """
    if g.n > MB_MAX_N:
        raise ValueError(f"maker-breaker solving is capped at n = {MB_MAX_N}")
    if g.n == 0:
        return 0
    e = g.edge_count
    lo = e % 2 if objective is Objective.CORDIALITY else -e
    hi = e
    # Maker always wins at k = |E| since the final claimed set is one part
    # of a balanced bipartition; bisect down the parity grid from there.
    while lo < hi:
        gamma = lo + 2 * ((hi - lo) // 4)
        family = winning_family(g, gamma, objective)
        if _maker_wins(g, family.masks(), variant, exact_membership):
            hi = gamma
        else:
            lo = gamma + 2
    return lo


def export_hypergraph(family: SetFamily) -> str:
    """Text form: header "n m", then one member per line as sorted indices."""
    lines = [f"{family.ground} {len(family.members)}"]
    for member in family.members:
        lines.append(" ".join(str(v) for v in sorted(member)))
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> SetFamily:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty hypergraph text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("header must be 'n m'")
    ground, count = int(head[0]), int(head[1])
    members = []
    for line in lines[1:]:
        member = frozenset(int(tok) for tok in line.split())
        if any(not 0 <= v < ground for v in member):
            raise ValueError(f"member {sorted(member)} outside ground set 0..{ground - 1}")
        members.append(member)
    if len(members) != count:
        raise ValueError(f"header promised {count} members, found {len(members)}")
    members.sort(key=lambda s: tuple(sorted(s)))
    return SetFamily(ground=ground, members=tuple(members))
