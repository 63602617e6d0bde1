"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from treedeg.graph import Graph, from_edges
from treedeg.trees import Tree


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def trees(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    return Tree.from_edges(n, [(p, v) for v, p in enumerate(parents, start=1)])


@st.composite
def permutations(draw, n):
    return draw(st.permutations(list(range(n))))


def as_graph(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
