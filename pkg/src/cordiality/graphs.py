"""Immutable simple undirected graphs and cut/labeling arithmetic."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Malformed graph construction input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``edges`` is a sorted tuple of (u, v) pairs with u < v, duplicates
    collapsed.  ``adj`` holds one neighbor bitmask per vertex and is fully
    determined by ``edges``.  Instances are immutable and safe to share
    across workers.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1) if 0 <= v < self.n else False

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == self.full_mask

    def is_tree(self) -> bool:
        return self.n >= 1 and len(self.edges) == self.n - 1 and self.is_connected()

    def is_path(self) -> bool:
        if self.n == 0:
            return False
        return self.is_tree() and all(self.degree(v) <= 2 for v in range(self.n))

    def path_order(self) -> list[int]:
        """Vertices of a path graph in endpoint-to-endpoint order."""
        if not self.is_path():
            raise GraphError("graph is not a path")
        if self.n == 1:
            return [0]
        start = min(v for v in range(self.n) if self.degree(v) == 1)
        order = [start]
        prev = -1
        cur = start
        while len(order) < self.n:
            nxt = next(u for u in self.neighbors(cur) if u != prev)
            order.append(nxt)
            prev, cur = cur, nxt
        return order

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, validating and deduplicating.

    Raises GraphError on out-of-range endpoints or self-loops.
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    seen: set[tuple[int, int]] = set()
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(seen))
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, edges, tuple(adj))


def path_graph(n: int) -> Graph:
    """The path v0-v1-...-v(n-1); n = 0 gives the empty graph."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star with center 0 and n-1 leaves."""
    if n < 1:
        raise GraphError("star needs at least one vertex")
    return from_edges(n, [(0, i) for i in range(1, n)])


def spider_graph(leg_lengths: Sequence[int]) -> Graph:
    """Paths of the given lengths all attached to a shared center 0."""
    if any(k < 1 for k in leg_lengths):
        raise GraphError("leg lengths must be positive")
    edges = []
    nxt = 1
    for k in leg_lengths:
        prev = 0
        for _ in range(k):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edges(nxt, edges)


@dataclass(frozen=True)
class CutStats:
    """Edge counts induced by a 0/1 vertex bipartition.

    e1 counts edges with endpoints on different sides (the cut), e0 the
    edges inside one side.  Invariants: e0 + e1 = |E|, cut = e1, and
    signed = e1 - e0 = 2*cut - |E|.
    """

    cut: int
    e0: int
    e1: int
    signed: int


def cut_size_of_mask(g: Graph, mask: int) -> int:
    """Number of edges with exactly one endpoint in ``mask``."""
    total = 0
    for v in iter_bits(mask):
        total += (g.adj[v] & ~mask).bit_count()
    return total


def cut_stats(g: Graph, s: Iterable[int]) -> CutStats:
    mask = vertex_mask(s)
    if mask & ~g.full_mask:
        raise GraphError("vertex set contains indices outside the graph")
    e1 = cut_size_of_mask(g, mask)
    e0 = g.edge_count - e1
    return CutStats(cut=e1, e0=e0, e1=e1, signed=e1 - e0)


def is_balanced_bipartition(g: Graph, s: Iterable[int]) -> bool:
    """True iff |S| and |V minus S| differ by at most one."""
    mask = vertex_mask(s)
    if mask & ~g.full_mask:
        raise GraphError("vertex set contains indices outside the graph")
    k = mask.bit_count()
    return abs(k - (g.n - k)) <= 1


def is_cordial_labeling(g: Graph, zero_side: Iterable[int]) -> bool:
    """True iff the bipartition is balanced and its edge labels are too.

    ``zero_side`` is the set of 0-labeled vertices; the rest are labeled 1.
    An edge's label is the XOR of its endpoint labels, so label-1 edges are
    exactly the cut edges.
    """
    mask = vertex_mask(zero_side)
    if mask & ~g.full_mask:
        raise GraphError("vertex set contains indices outside the graph")
    k = mask.bit_count()
    if abs(k - (g.n - k)) > 1:
        return False
    stats = cut_stats(g, iter_bits(mask))
    return abs(stats.e1 - stats.e0) <= 1


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Seeded G(n, p) sample, retried until connected."""
    if n < 1:
        raise GraphError("need at least one vertex")
    while True:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = from_edges(n, pairs)
        if g.is_connected():
            return g
