import itertools
import random

import networkx as nx
import pytest
from hypothesis import given

from strategies import as_graph, trees
from treedeg.errors import DegenerateShape, DeskScaleExceeded, StarNotSupported
from treedeg.graph import cycle_graph, from_edges, path_graph, relabel, star_graph
from treedeg.oracle import enumerate_trees_prufer
from treedeg.trees import (
    ConventionalLabelling,
    Tree,
    conventional_labelling_bfs,
    enumerate_trees,
    is_conventional,
    is_t1_nminus4,
    make_tpq,
    proof_labelling,
    prufer_decode,
    prufer_encode,
    recognize_tpq,
    tree_canonical_form,
)

# A000055; cross-checked below against Pruefer enumeration and networkx
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


def shuffled(t: Tree, seed: int) -> Tree:
    perm = list(range(t.n))
    random.Random(seed).shuffle(perm)
    return Tree(relabel(t.graph, perm))


def test_tree_validation():
    with pytest.raises(ValueError, match="not a tree"):
        Tree(cycle_graph(4))
    with pytest.raises(ValueError, match="not a tree"):
        Tree(from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        Tree(from_edges(0, []))


def test_tree_basics():
    t = Tree(path_graph(5))
    assert t.degrees == (1, 2, 2, 2, 1)
    assert t.max_degree == 2
    assert t.leaves() == [0, 4]
    assert t.distances(2) == [2, 1, 0, 1, 2]
    assert t.path_between(4, 1) == (4, 3, 2, 1)
    assert t.longest_path == (0, 1, 2, 3, 4)
    assert Tree(from_edges(1, [])).longest_path == (0,)


def test_longest_path_is_lexicographically_smallest():
    # spider with legs 2, 2, 1 around centre 0
    t = Tree.from_edges(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])
    assert t.longest_path == (2, 1, 0, 3, 4)


# ---------------------------------------------------------------------------
# labellings


def test_from_order_validation():
    t = Tree(path_graph(4))
    lab = ConventionalLabelling.from_order(t, [1, 0, 2, 3])
    assert lab.parent == (-1, 0, 0, 2)
    assert lab.parent_vertex(3) == 2
    assert len(lab) == 4
    with pytest.raises(ValueError, match="permutation"):
        ConventionalLabelling.from_order(t, [0, 1, 2])
    with pytest.raises(ValueError, match="earlier neighbours"):
        ConventionalLabelling.from_order(t, [0, 2, 1, 3])


@given(trees(max_n=12))
def test_bfs_labelling_is_conventional(t):
    for root in range(t.n):
        lab = conventional_labelling_bfs(t, root)
        assert lab.order[0] == root
        assert is_conventional(t, lab.order)


def test_is_conventional_rejects():
    t = Tree(path_graph(4))
    assert not is_conventional(t, [0, 2, 1, 3])
    assert not is_conventional(t, [0, 1, 2])
    with pytest.raises(ValueError):
        conventional_labelling_bfs(t, 7)


@given(trees(min_n=5, max_n=12))
def test_proof_labelling_shape(t):
    path = t.longest_path
    if len(path) <= 3:
        with pytest.raises(StarNotSupported):
            proof_labelling(t)
        return
    lab = proof_labelling(t)
    assert is_conventional(t, lab.order)
    if len(path) >= 5:
        i = len(path) - 2
        assert lab.order[:i] == path[1:-1]
        assert lab.order[-2:] == (path[0], path[-1])
    else:
        # double star: both centres first; with max degree <= n-3 each centre
        # has two leaves, so the last two vertices share a parent
        assert set(lab.order[:2]) == {path[1], path[2]}
        if t.max_degree <= t.n - 3:
            assert lab.parent[-1] == lab.parent[-2]


def test_proof_labelling_double_star():
    t = Tree.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)])
    lab = proof_labelling(t)
    assert lab.order == (0, 1, 2, 3, 4, 5, 6)
    assert lab.parent == (-1, 0, 0, 0, 1, 1, 1)
    assert proof_labelling(Tree(path_graph(4))).order == (1, 2, 0, 3)


def test_proof_labelling_rejects_stars():
    with pytest.raises(StarNotSupported):
        proof_labelling(Tree(star_graph(5)))


# ---------------------------------------------------------------------------
# T(p, q)


def test_make_tpq():
    t = make_tpq(1, 2)
    assert t.n == 6
    assert t.degrees == (2, 2, 3, 1, 1, 1)
    assert len(t.longest_path) == 5
    with pytest.raises(DegenerateShape):
        make_tpq(0, 2)


@pytest.mark.parametrize("p, q", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 5), (2, 4), (3, 3)])
def test_recognize_tpq_normalizes(p, q):
    for seed in range(5):
        assert recognize_tpq(shuffled(make_tpq(p, q), seed)) == (min(p, q), max(p, q))


def test_t12_and_t21_are_the_same_tree():
    assert tree_canonical_form(make_tpq(1, 2)) == tree_canonical_form(make_tpq(2, 1))


@pytest.mark.parametrize(
    "edges",
    [
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)],  # P6
        [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],  # leaf on the centre of P5
        [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)],  # double star
        [(0, 1), (1, 2), (2, 3)],  # too small
    ],
)
def test_recognize_tpq_negative(edges):
    t = Tree.from_edges(max(max(e) for e in edges) + 1, edges)
    assert recognize_tpq(t) is None


def test_is_t1_nminus4():
    assert is_t1_nminus4(make_tpq(1, 5))
    assert is_t1_nminus4(make_tpq(5, 1))
    assert not is_t1_nminus4(make_tpq(2, 4))
    assert is_t1_nminus4(Tree(path_graph(5)))  # T(1,1) is P5


# ---------------------------------------------------------------------------
# Pruefer sequences


def test_prufer_known():
    t = prufer_decode([3, 3, 3, 4])
    assert sorted(t.graph.edges()) == [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]
    assert prufer_encode(t) == (3, 3, 3, 4)
    assert prufer_decode([]).graph.edges() == [(0, 1)]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_prufer_is_a_bijection(n):
    seen = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        t = prufer_decode(seq)
        assert prufer_encode(t) == seq
        seen.add(t.graph)
    assert len(seen) == n ** (n - 2)


@given(trees(min_n=2, max_n=12))
def test_prufer_matches_networkx(t):
    seq = prufer_encode(t)
    assert seq == tuple(nx.to_prufer_sequence(as_graph(t.graph)))
    assert prufer_decode(seq) == t


def test_prufer_errors():
    with pytest.raises(ValueError):
        prufer_decode([0, 1], n=5)
    with pytest.raises(ValueError):
        prufer_decode([7, 0])


# ---------------------------------------------------------------------------
# canonical form and enumeration


@given(trees(max_n=14))
def test_canonical_form_is_invariant(t):
    code = tree_canonical_form(t)
    for seed in range(3):
        assert tree_canonical_form(shuffled(t, seed)) == code


def test_canonical_form_separates_all_trees_on_eight_vertices():
    ts = enumerate_trees(8)
    for a, b in itertools.combinations(ts, 2):
        assert not nx.is_isomorphic(as_graph(a.graph), as_graph(b.graph))


@pytest.mark.parametrize("n", range(1, 13))
def test_tree_counts(n):
    assert len(enumerate_trees(n)) == TREE_COUNTS[n - 1]


@pytest.mark.parametrize("n", range(2, 8))
def test_tree_counts_by_pruefer_and_networkx(n):
    assert len(enumerate_trees_prufer(n)) == TREE_COUNTS[n - 1]
    assert sum(1 for _ in nx.nonisomorphic_trees(n)) == TREE_COUNTS[n - 1]


def test_enumerate_trees_degree_filter():
    six = enumerate_trees(6, 3)
    assert len(six) == 4
    assert sorted(recognize_tpq(t) or (0, 0) for t in six) == [(0, 0), (0, 0), (0, 0), (1, 2)]
    assert [t.max_degree for t in enumerate_trees(7, 2)] == [2]
    assert len(enumerate_trees(1, 0)) == 1


def test_enumerate_trees_limits():
    with pytest.raises(DeskScaleExceeded):
        enumerate_trees(13)
    with pytest.raises(ValueError):
        enumerate_trees(0)
