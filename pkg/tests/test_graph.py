import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import as_graph, graphs
from treedeg.errors import Disconnected, EmptyGraph, PreconditionViolated
from treedeg.oracle import enumerate_graphs
from treedeg.graph import (
    Graph,
    bits,
    complement,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    components,
    cycle_graph,
    degree_stats,
    dirac_path,
    disjoint_union,
    empty_graph,
    escape_path,
    from_edges,
    induced,
    induced_p3,
    is_balanced_bipartite_Ktt,
    is_balanced_complete_multipartite,
    is_connected,
    is_path,
    mask_of,
    path_graph,
    relabel,
    star_graph,
)


def test_bits_and_mask_roundtrip():
    assert list(bits(0b101101)) == [0, 2, 3, 5]
    assert mask_of([5, 0, 3]) == 0b101001
    assert list(bits(0)) == []


def test_graph_validation():
    with pytest.raises(ValueError, match="asymmetric"):
        Graph(2, [0b10, 0])
    with pytest.raises(ValueError, match="loop"):
        Graph(1, [0b1])
    with pytest.raises(ValueError, match="rows"):
        Graph(3, [0, 0])
    with pytest.raises(ValueError, match="loop"):
        from_edges(3, [(1, 1)])
    with pytest.raises(ValueError, match="out of range"):
        from_edges(3, [(0, 3)])


def test_basic_queries():
    g = cycle_graph(5)
    assert g.degrees() == [2] * 5
    assert g.neighbors(0) == [1, 4]
    assert g.has_edge(4, 0) and not g.has_edge(0, 2)
    assert g.edge_count() == 5
    assert g.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert g == from_edges(5, g.edges()) and hash(g) == hash(from_edges(5, g.edges()))


def test_constructors():
    assert complete_graph(4).edge_count() == 6
    assert empty_graph(3).edge_count() == 0
    assert path_graph(1).edge_count() == 0
    assert star_graph(4).degrees() == [4, 1, 1, 1, 1]
    k233 = complete_multipartite([2, 3, 3])
    assert k233.edge_count() == 2 * 3 + 2 * 3 + 3 * 3
    assert complete_bipartite(3, 3).degrees() == [3] * 6
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_degree_stats_and_empty_graph_errors():
    assert degree_stats(star_graph(3)) == (1, 3)
    with pytest.raises(EmptyGraph):
        degree_stats(empty_graph(0))
    with pytest.raises(EmptyGraph):
        is_connected(empty_graph(0))
    with pytest.raises(EmptyGraph):
        components(empty_graph(0))


@given(graphs(max_n=9))
def test_components_match_networkx(g):
    ours = sorted(sorted(bits(c)) for c in components(g))
    theirs = sorted(sorted(c) for c in nx.connected_components(as_graph(g)))
    assert ours == theirs
    assert is_connected(g) == nx.is_connected(as_graph(g))


@given(graphs(max_n=8))
def test_complement_and_relabel(g):
    assert complement(complement(g)) == g
    assert complement(g).edge_count() + g.edge_count() == g.n * (g.n - 1) // 2
    perm = list(range(g.n))
    random.Random(g.n).shuffle(perm)
    h = relabel(g, perm)
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())
    assert h.edge_count() == g.edge_count()


def test_disjoint_union_and_induced():
    g = disjoint_union([complete_graph(3), path_graph(2)])
    assert g.n == 5 and g.edges() == [(0, 1), (0, 2), (1, 2), (3, 4)]
    assert len(components(g)) == 2
    h = induced(cycle_graph(6), mask_of([0, 1, 2, 4]))
    assert h.n == 4 and h.edges() == [(0, 1), (1, 2)]


def test_is_path():
    g = cycle_graph(5)
    assert is_path(g, (0, 1, 2, 3, 4))
    assert is_path(g, (3,))
    assert not is_path(g, ())
    assert not is_path(g, (0, 2))
    assert not is_path(g, (0, 1, 0))
    assert not is_path(g, (0, 7))


# ---------------------------------------------------------------------------
# constructive path lemmas


@pytest.mark.parametrize(
    "g, expected",
    [
        (cycle_graph(7), 5),
        (complete_graph(5), 5),
        (path_graph(6), 3),
        (star_graph(4), 3),
        (complete_bipartite(2, 5), 5),
        (from_edges(1, []), 1),
    ],
)
def test_dirac_path_bound_examples(g, expected):
    path = dirac_path(g)
    assert is_path(g, path)
    assert len(path) >= expected == min(g.n, 2 * min(g.degrees()) + 1)


@given(graphs(min_n=1, max_n=10))
def test_dirac_path_bound_random(g):
    if not is_connected(g):
        with pytest.raises(Disconnected):
            dirac_path(g)
        return
    path = dirac_path(g)
    assert is_path(g, path)
    assert len(path) >= min(g.n, 2 * min(g.degrees()) + 1)


def test_dirac_path_needs_rotation():
    # plain two-ended extension from vertex 0 stalls below the bound here
    g = from_edges(
        7, [(0, 1), (0, 4), (0, 6), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 6), (5, 6)]
    )
    path = dirac_path(g)
    assert is_path(g, path) and len(path) >= 7


def longest_path_vertices(g):
    """Exhaustive DFS over simple paths; fine for n <= 7."""
    best = 0

    def grow(v, seen, length):
        nonlocal best
        best = max(best, length)
        for u in bits(g.adj[v] & ~seen):
            grow(u, seen | 1 << u, length + 1)

    for v in range(g.n):
        grow(v, 1 << v, 1)
    return best


def test_dirac_bound_counts_vertices():
    # the bound is tight in vertices on every connected graph up to 7 vertices
    # for some graph, so an edge-count reading would overshoot
    tight = 0
    for n in range(1, 8):
        for g in enumerate_graphs(n, 0, True):
            bound = min(n, 2 * min(g.degrees()) + 1)
            longest = longest_path_vertices(g)
            assert bound <= len(dirac_path(g)) <= longest
            tight += longest == bound < n
    assert tight
    k25 = complete_bipartite(2, 5)
    assert longest_path_vertices(k25) == 5 == min(7, 2 * 2 + 1)


def test_escape_path_bound_on_example():
    # K_4 on {0,1,2,3} glued to a path 3-4-5-6; S0 = {0,1,2,3}, S1 = {0,1}
    g = from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)])
    s0, s1 = mask_of([0, 1, 2, 3]), mask_of([0, 1])
    path = escape_path(g, s0, s1, 3)
    assert path == (4, 5, 6)
    delta = min(g.degrees())
    assert len(path) >= s1.bit_count() + delta - s0.bit_count() + 1


def test_escape_path_preconditions():
    g = cycle_graph(6)
    with pytest.raises(PreconditionViolated, match="proper subset"):
        escape_path(g, 0b11, 0b11, 0)
    with pytest.raises(PreconditionViolated, match="N\\(s1\\)"):
        escape_path(g, 0b11, 0b01, 0)
    with pytest.raises(PreconditionViolated, match="alpha"):
        escape_path(g, 0b111, 0b010, 4)
    with pytest.raises(PreconditionViolated, match="no neighbour"):
        escape_path(complete_graph(3), 0b111, 0b001, 1)
    with pytest.raises(PreconditionViolated, match="start"):
        escape_path(g, 0b111, 0b010, 2, start=5)
    with pytest.raises(PreconditionViolated, match="outside"):
        escape_path(g, 1 << 9, 0, 0)


@given(graphs(min_n=3, max_n=10), st.randoms(use_true_random=False))
def test_escape_path_bound_random(g, rng):
    if not is_connected(g):
        return
    alpha = rng.randrange(g.n)
    outside = [u for u in range(g.n) if u != alpha and rng.random() < 0.5]
    s0 = (1 << alpha) | mask_of(u for u in range(g.n) if u not in outside)
    # S1: vertices of S0 whose whole neighbourhood lies in S0, minus alpha
    s1 = mask_of(v for v in bits(s0) if v != alpha and not g.adj[v] & ~s0)
    if not g.adj[alpha] & ~s0:
        return
    path = escape_path(g, s0, s1, alpha)
    assert is_path(g, path)
    assert not mask_of(path) & s0
    assert g.has_edge(alpha, path[0])
    assert len(path) >= s1.bit_count() + min(g.degrees()) - s0.bit_count() + 1


def test_induced_p3_on_cycle():
    assert induced_p3(cycle_graph(4)) == (1, 0, 2)


def test_induced_p3_complete_and_errors():
    assert induced_p3(complete_graph(5)) is None
    with pytest.raises(PreconditionViolated):
        induced_p3(path_graph(2))
    with pytest.raises(Disconnected):
        induced_p3(disjoint_union([complete_graph(2), complete_graph(2)]))


@given(graphs(min_n=3, max_n=9))
def test_induced_p3_property(g):
    if not is_connected(g):
        return
    triple = induced_p3(g)
    complete = g.edge_count() == g.n * (g.n - 1) // 2
    assert (triple is None) == complete
    if triple:
        a, b, c = triple
        assert g.has_edge(a, b) and g.has_edge(a, c) and not g.has_edge(b, c)


# ---------------------------------------------------------------------------
# exceptional hosts


@pytest.mark.parametrize(
    "g, shape",
    [
        (complete_bipartite(3, 3), (2, 3)),
        (complete_multipartite([3, 3, 3]), (3, 3)),
        (complete_graph(4), (4, 1)),
        (empty_graph(3), (1, 3)),
        (complete_bipartite(2, 3), None),
        (cycle_graph(5), None),
        (cycle_graph(4), (2, 2)),
        (empty_graph(0), None),
    ],
)
def test_balanced_multipartite_recognition(g, shape):
    assert is_balanced_complete_multipartite(g) == shape


def test_balanced_multipartite_survives_relabelling():
    g = relabel(complete_multipartite([2, 2, 2]), [3, 0, 5, 1, 4, 2])
    assert is_balanced_complete_multipartite(g) == (3, 2)
    assert is_balanced_bipartite_Ktt(relabel(complete_bipartite(3, 3), [0, 3, 1, 4, 2, 5])) == 3
    assert is_balanced_bipartite_Ktt(complete_multipartite([2, 2, 2])) is None
