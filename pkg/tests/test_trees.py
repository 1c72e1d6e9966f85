import pytest

from cordiality import (
    GraphError,
    NonTreeError,
    centroids,
    enumerate_trees,
    enumerate_trees_via_prufer,
    from_edges,
    path_graph,
    prufer_decode,
    star_graph,
    tree_canonical_code,
)

# number of unlabeled trees per order (classic counting sequence)
TREE_CLASS_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106, 11: 235}


def test_enumeration_counts():
    for n, count in TREE_CLASS_COUNTS.items():
        assert len(enumerate_trees(n)) == count


def test_enumeration_members_are_trees_without_duplicates():
    for n in range(1, 10):
        trees = enumerate_trees(n)
        codes = [tree_canonical_code(t).code for t in trees]
        assert len(set(codes)) == len(trees)
        for t in trees:
            assert t.is_tree()
            assert t.edge_count == n - 1


def test_enumeration_agrees_with_prufer_sweep():
    for n in range(2, 8):
        grown = {tree_canonical_code(t).code for t in enumerate_trees(n)}
        swept = {tree_canonical_code(t).code for t in enumerate_trees_via_prufer(n)}
        assert grown == swept


def test_enumeration_range_check():
    with pytest.raises(GraphError):
        enumerate_trees(0)
    with pytest.raises(GraphError):
        enumerate_trees(13)


def test_canonical_code_isomorphism_invariance():
    p4 = path_graph(4)
    relabeled = from_edges(4, [(2, 0), (0, 3), (3, 1)])  # 2-0-3-1 path
    assert tree_canonical_code(p4) == tree_canonical_code(relabeled)
    assert tree_canonical_code(p4) != tree_canonical_code(star_graph(4))
    assert tree_canonical_code(path_graph(1)).code == "()"


def test_canonical_code_rejects_non_trees():
    cycle = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(NonTreeError):
        tree_canonical_code(cycle)


def test_centroids():
    assert centroids(path_graph(4)) == [1, 2]
    assert centroids(path_graph(5)) == [2]
    assert centroids(star_graph(5)) == [0]
    # a star with a tail: the centroid shifts into the tail, and is unique
    lopsided = from_edges(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6)])
    weightiest = centroids(lopsided)
    assert len(weightiest) in (1, 2)


def test_prufer_decode_known():
    assert prufer_decode([], 2) == path_graph(2)
    star = prufer_decode([1, 1], 4)
    assert star.degree(1) == 3
    assert prufer_decode([1, 2], 4).edges == ((0, 1), (1, 2), (2, 3))


def test_prufer_decode_validation():
    with pytest.raises(GraphError):
        prufer_decode([0], 2)
    with pytest.raises(GraphError):
        prufer_decode([5], 3)
    with pytest.raises(GraphError):
        prufer_decode([], 1)
