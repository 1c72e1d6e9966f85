"""Branch decomposition of trees for the recursive labeling strategies.

A branch B of a tree T is a subtree sharing exactly one vertex v with the
complementary subtree T'.  ``find_branch`` locates a branch whose interior
S = B - v is even-sized and matches one of seven shapes:

  1  pendant 4-vertex path tail (S is a P4 hanging off v)
  2  two leaves on a shared center v               (S: 2 vertices)
  3  two 2-paths on a shared center v              (S: 4)
  4  center u with a 2-path arm and a leaf; v is u's stem neighbor (S: u + arms, 4)
  5  a leaf and a 3-path arm on a shared center v  (S: 4)
  6  two 3-paths on a shared center v              (S: 6)
  7  center u with a 2-path arm and a 3-path arm; v is u's stem neighbor (S: 6)

The decomposition vertex u is a branch vertex (degree >= 3) with at most
one branching direction, its arms are the components of T - u without any
further branching, and the shape is selected by an elimination order:
a long arm first (case 1), then repeated arm sizes (2, 3, 6), then the
{1,3} pair (case 5), then the leftovers {1,2} and {2,3} (cases 4, 7).
Every tree with a branch vertex matches exactly one shape.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .trees import NonTreeError


@dataclass(frozen=True)
class PathComponents:
    """Dangling path arms around u: components of T - u with no branching."""

    u: int
    components: tuple[tuple[int, ...], ...]  # each ordered from u outward

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)


@dataclass(frozen=True)
class BranchDecomposition:
    case_id: int
    attach: int  # v, shared by branch and remainder
    branch_vertices: frozenset[int]  # S = B minus v
    remainder_vertices: frozenset[int]  # T', includes v
    roles: dict[str, int]  # figure names "v", "v1", ... to vertex ids

    def branch(self) -> frozenset[int]:
        return self.branch_vertices | {self.attach}


def _induced_neighbors(g: Graph, verts: frozenset[int], v: int) -> list[int]:
    return [u for u in g.neighbors(v) if u in verts]


def _check_subtree(g: Graph, verts: frozenset[int]) -> None:
    if not verts:
        raise NonTreeError("empty vertex set")
    edges = sum(1 for u, v in g.edges if u in verts and v in verts)
    if edges != len(verts) - 1:
        raise NonTreeError("vertex set does not induce a tree")
    seen = {min(verts)}
    frontier = [min(verts)]
    while frontier:
        nxt = []
        for v in frontier:
            for u in _induced_neighbors(g, verts, v):
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    if seen != set(verts):
        raise NonTreeError("vertex set does not induce a connected subgraph")


def arm_components(g: Graph, verts: frozenset[int], u: int) -> PathComponents:
    """Arms around u: branch-free components of the subtree minus u.

    Each arm is reported from the u-adjacent vertex outward.  Components
    containing another branch vertex (the stem direction) are left out.
    """
    branch_like = {
        v for v in verts if len(_induced_neighbors(g, verts, v)) >= 3
    }
    arms = []
    for start in sorted(_induced_neighbors(g, verts, u)):
        comp = [start]
        seen = {u, start}
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for w in _induced_neighbors(g, verts, v):
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        nxt.append(w)
            frontier = nxt
        if any(v in branch_like for v in comp):
            continue  # stem direction, not an arm
        # branch-free component of a tree is a dangling path; order it
        ordered = [start]
        prev = u
        cur = start
        while True:
            ahead = [w for w in _induced_neighbors(g, verts, cur) if w != prev]
            if not ahead:
                break
            prev, cur = cur, ahead[0]
            ordered.append(cur)
        arms.append(tuple(ordered))
    arms.sort()
    return PathComponents(u=u, components=tuple(arms))


def _pick_center(g: Graph, verts: frozenset[int]) -> int:
    """Lowest-index branch vertex with at most one branching direction."""
    branch_verts = sorted(
        v for v in verts if len(_induced_neighbors(g, verts, v)) >= 3
    )
    if not branch_verts:
        raise NonTreeError("tree has no vertex of degree 3 or more")
    branch_set = set(branch_verts)
    for u in branch_verts:
        branching_dirs = 0
        for start in _induced_neighbors(g, verts, u):
            seen = {u, start}
            frontier = [start]
            found = start in branch_set
            while frontier and not found:
                nxt = []
                for v in frontier:
                    for w in _induced_neighbors(g, verts, v):
                        if w not in seen:
                            if w in branch_set:
                                found = True
                                break
                            seen.add(w)
                            nxt.append(w)
                    if found:
                        break
                frontier = nxt
            if found:
                branching_dirs += 1
        if branching_dirs <= 1:
            return u
    raise NonTreeError("no decomposition center found")  # pragma: no cover


def find_branch_in(g: Graph, verts: frozenset[int]) -> BranchDecomposition:
    """Decompose the subtree induced by ``verts``; see module docstring."""
    _check_subtree(g, verts)
    u = _pick_center(g, verts)
    arms = arm_components(g, verts, u).components

    by_size: dict[int, list[tuple[int, ...]]] = {}
    for arm in arms:
        by_size.setdefault(len(arm), []).append(arm)

    def stem_neighbor() -> int:
        arm_verts = {v for arm in arms for v in arm}
        candidates = [w for w in _induced_neighbors(g, verts, u) if w not in arm_verts]
        if len(candidates) != 1:  # pragma: no cover - ruled out by elimination
            raise NonTreeError("expected exactly one stem direction")
        return candidates[0]

    def build(case_id: int, attach: int, roles: dict[str, int]) -> BranchDecomposition:
        s = frozenset(v for name, v in roles.items() if name != "v")
        rest = frozenset(verts) - s
        return BranchDecomposition(
            case_id=case_id,
            attach=attach,
            branch_vertices=s,
            remainder_vertices=rest,
            roles=roles,
        )

    long_arms = [arm for arm in arms if len(arm) >= 4]
    if long_arms:
        arm = min(long_arms)
        tail = arm[-4:]
        attach = arm[-5] if len(arm) >= 5 else u
        roles = {"v": attach, "v1": tail[0], "v2": tail[1], "v3": tail[2], "v4": tail[3]}
        return build(1, attach, roles)
    if len(by_size.get(1, [])) >= 2:
        first, second = sorted(by_size[1])[:2]
        roles = {"v": u, "v1": first[0], "v2": second[0]}
        return build(2, u, roles)
    if len(by_size.get(2, [])) >= 2:
        first, second = sorted(by_size[2])[:2]
        roles = {"v": u, "v1": first[1], "v2": first[0], "v3": second[0], "v4": second[1]}
        return build(3, u, roles)
    if len(by_size.get(3, [])) >= 2:
        first, second = sorted(by_size[3])[:2]
        roles = {
            "v": u,
            "v1": first[0], "v2": first[1], "v3": first[2],
            "v4": second[0], "v5": second[1], "v6": second[2],
        }
        return build(6, u, roles)
    if by_size.get(1) and by_size.get(3):
        leaf = by_size[1][0]
        arm3 = by_size[3][0]
        roles = {"v": u, "v1": leaf[0], "v2": arm3[0], "v3": arm3[1], "v4": arm3[2]}
        return build(5, u, roles)
    if by_size.get(1) and by_size.get(2):
        leaf = by_size[1][0]
        arm2 = by_size[2][0]
        v = stem_neighbor()
        roles = {"v": v, "v1": u, "v2": arm2[0], "v3": arm2[1], "v4": leaf[0]}
        return build(4, v, roles)
    if by_size.get(2) and by_size.get(3):
        arm2 = by_size[2][0]
        arm3 = by_size[3][0]
        v = stem_neighbor()
        roles = {
            "v": v,
            "v1": u, "v2": arm2[0], "v3": arm2[1],
            "v4": arm3[0], "v5": arm3[1], "v6": arm3[2],
        }
        return build(7, v, roles)
    raise NonTreeError(  # pragma: no cover - the elimination order is total
        f"no case matches arms of orders {tuple(len(a) for a in arms)} at vertex {u}"
    )


def find_branch(t: Graph) -> BranchDecomposition:
    """Branch decomposition of a whole tree (which must not be a path)."""
    if not t.is_tree():
        raise NonTreeError("input is not a tree")
    if t.is_path():
        raise NonTreeError("paths have no branch decomposition; play them directly")
    return find_branch_in(t, frozenset(range(t.n)))
