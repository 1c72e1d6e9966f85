"""Shared corpus and a session-wide solve cache for the test suite."""

from __future__ import annotations

import random

import pytest

from cordiality import (
    Graph,
    SolveOptions,
    SYMMETRY_PATH_REVERSAL,
    emit_graph6,
    enumerate_trees,
    game_number,
    path_graph,
    random_connected_graph,
)

CORPUS_SEED = 8191
RANDOM_CORPUS_SIZE = 200
RANDOM_MIN_N = 5
RANDOM_MAX_N = 9
PATH_CORPUS_MAX_N = 14
TREE_CORPUS_MAX_N = 9


def build_random_corpus() -> list[Graph]:
    rng = random.Random(CORPUS_SEED)
    graphs = []
    for _ in range(RANDOM_CORPUS_SIZE):
        n = rng.randint(RANDOM_MIN_N, RANDOM_MAX_N)
        graphs.append(random_connected_graph(n, 0.45, rng))
    return graphs


@pytest.fixture(scope="session")
def random_corpus() -> list[Graph]:
    return build_random_corpus()


@pytest.fixture(scope="session")
def tree_corpus() -> dict[int, list[Graph]]:
    return {n: enumerate_trees(n) for n in range(2, TREE_CORPUS_MAX_N + 1)}


@pytest.fixture(scope="session")
def path_corpus() -> list[Graph]:
    return [path_graph(n) for n in range(1, PATH_CORPUS_MAX_N + 1)]


@pytest.fixture(scope="session")
def full_corpus(path_corpus, tree_corpus, random_corpus) -> list[Graph]:
    graphs = list(path_corpus)
    for trees in tree_corpus.values():
        graphs.extend(trees)
    graphs.extend(random_corpus)
    return graphs


@pytest.fixture(scope="session")
def solved():
    """Memoized game_number lookups shared by the whole session."""
    cache: dict[tuple[str, str], int] = {}

    def get(g: Graph, which: str) -> int:
        key = (emit_graph6(g), which)
        if key not in cache:
            opts = None
            if g.is_path() and g.path_order() == list(range(g.n)):
                opts = SolveOptions(symmetry=SYMMETRY_PATH_REVERSAL)
            cache[key] = game_number(g, which, opts)
        return cache[key]

    return get
