"""Trees, conventional labellings, the T(p, q) family and tree enumeration."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import NamedTuple, Sequence

from .errors import DegenerateShape, DeskScaleExceeded, StarNotSupported
from .graph import Graph, bits, from_edges, is_connected

__all__ = [
    "Tree",
    "ConventionalLabelling",
    "TpqShape",
    "is_conventional",
    "conventional_labelling_bfs",
    "proof_labelling",
    "make_tpq",
    "recognize_tpq",
    "is_t1_nminus4",
    "prufer_decode",
    "prufer_encode",
    "tree_canonical_form",
    "enumerate_trees",
    "MAX_ENUMERATION_N",
]

MAX_ENUMERATION_N = 12


class Tree:
    """A graph certified to be a tree."""

    __slots__ = ("graph", "__dict__")

    def __init__(self, graph: Graph) -> None:
        if graph.n < 1:
            raise ValueError("a tree has at least one vertex")
        if graph.edge_count() != graph.n - 1 or not is_connected(graph):
            raise ValueError("graph is not a tree")
        self.graph = graph

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]]) -> Tree:
        return cls(from_edges(n, edges))

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(self.graph.degrees())

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def leaves(self) -> list[int]:
        return [v for v, d in enumerate(self.degrees) if d <= 1]

    def distances(self, source: int) -> list[int]:
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in bits(self.graph.adj[v]):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    def path_between(self, u: int, v: int) -> tuple[int, ...]:
        dist = self.distances(v)
        path = [u]
        while path[-1] != v:
            here = path[-1]
            path.append(next(w for w in bits(self.graph.adj[here]) if dist[w] == dist[here] - 1))
        return tuple(path)

    @cached_property
    def longest_path(self) -> tuple[int, ...]:
        """Lexicographically smallest vertex sequence among longest paths."""
        if self.n == 1:
            return (0,)
        dists = [self.distances(u) for u in range(self.n)]
        diameter = max(max(d) for d in dists)
        return min(
            self.path_between(u, v)
            for u in range(self.n)
            for v in range(self.n)
            if dists[u][v] == diameter
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tree) and self.graph == other.graph

    def __hash__(self) -> int:
        return hash(self.graph)

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={self.graph.edges()})"


@dataclass(frozen=True)
class ConventionalLabelling:
    """``order[j]`` is the tree vertex labelled ``v_{j+1}``.

    ``parent[j]`` is the position of the unique earlier neighbour of
    ``order[j]`` (``-1`` for the first vertex).
    """

    order: tuple[int, ...]
    parent: tuple[int, ...]

    @classmethod
    def from_order(cls, t: Tree, order: Sequence[int]) -> ConventionalLabelling:
        order = tuple(order)
        if sorted(order) != list(range(t.n)):
            raise ValueError("order must be a permutation of the tree vertices")
        pos = {v: j for j, v in enumerate(order)}
        parent = [-1]
        for j in range(1, t.n):
            earlier = [pos[u] for u in bits(t.graph.adj[order[j]]) if pos[u] < j]
            if len(earlier) != 1:
                raise ValueError(f"vertex {order[j]} has {len(earlier)} earlier neighbours")
            parent.append(earlier[0])
        return cls(order, tuple(parent))

    def __len__(self) -> int:
        return len(self.order)

    def parent_vertex(self, j: int) -> int:
        return self.order[self.parent[j]]


def is_conventional(t: Tree, order: Sequence[int]) -> bool:
    """Every vertex after the first has exactly one earlier neighbour."""
    if sorted(order) != list(range(t.n)):
        return False
    seen = 0
    for j, v in enumerate(order):
        if j and (t.graph.adj[v] & seen).bit_count() != 1:
            return False
        seen |= 1 << v
    return True


def conventional_labelling_bfs(t: Tree, root: int) -> ConventionalLabelling:
    if not 0 <= root < t.n:
        raise ValueError(f"root {root} is not a vertex")
    dist = t.distances(root)
    order = sorted(range(t.n), key=lambda v: (dist[v], v))
    return ConventionalLabelling.from_order(t, order)


def proof_labelling(t: Tree) -> ConventionalLabelling:
    """Labelling with the longest path's interior first and its ends last.

    For a longest path ``P = e1 p1 ... pi e2`` with at least five vertices the
    order is ``p1..pi``, then the vertices off ``P`` by distance to ``P``,
    then ``e1, e2``. With four vertices on ``P`` (a double star) the order is
    the two centres, the leaves of the first, then the leaves of the second,
    so the last two vertices share a parent.
    """
    path = t.longest_path
    if len(path) <= 3:
        raise StarNotSupported("a tree whose longest path has at most 3 vertices is a star")
    if len(path) == 4:
        a, b = path[1], path[2]
        leaves_a = sorted(u for u in bits(t.graph.adj[a]) if u != b)
        leaves_b = sorted(u for u in bits(t.graph.adj[b]) if u != a)
        return ConventionalLabelling.from_order(t, [a, b, *leaves_a, *leaves_b])
    interior = path[1:-1]
    on_path = set(path)
    dist = {v: 0 for v in path}
    queue = deque(path)
    while queue:
        v = queue.popleft()
        for u in bits(t.graph.adj[v]):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    off = sorted((v for v in range(t.n) if v not in on_path), key=lambda v: (dist[v], v))
    return ConventionalLabelling.from_order(t, [*interior, *off, path[0], path[-1]])


class TpqShape(NamedTuple):
    p: int
    q: int


def make_tpq(p: int, q: int) -> Tree:
    """T(p, q): spine 0-1-2, ``p`` leaves on 0, then ``q`` leaves on 2."""
    if p < 1 or q < 1:
        raise DegenerateShape(f"T(p, q) needs p, q >= 1, got ({p}, {q})")
    edges = [(0, 1), (1, 2)]
    edges += [(0, 3 + i) for i in range(p)]
    edges += [(2, 3 + p + i) for i in range(q)]
    return Tree.from_edges(3 + p + q, edges)


def recognize_tpq(t: Tree) -> TpqShape | None:
    """Return ``(p, q)`` with ``p <= q`` when ``t`` is isomorphic to T(p, q)."""
    if t.n < 5:
        return None
    inner = [v for v, d in enumerate(t.degrees) if d >= 2]
    if len(inner) != 3:
        return None
    for b in inner:
        if t.degrees[b] != 2:
            continue
        a, c = (u for u in inner if u != b)
        if t.graph.has_edge(a, b) and t.graph.has_edge(b, c):
            p, q = t.degrees[a] - 1, t.degrees[c] - 1
            return TpqShape(min(p, q), max(p, q))
    return None


def is_t1_nminus4(t: Tree) -> bool:
    return recognize_tpq(t) == (1, t.n - 4)


# ---------------------------------------------------------------------------
# Pruefer sequences


def prufer_decode(seq: Sequence[int], n: int | None = None) -> Tree:
    n = len(seq) + 2 if n is None else n
    if n < 2 or len(seq) != n - 2:
        raise ValueError(f"a Pruefer sequence for n={n} has length {n - 2}")
    if any(not 0 <= x < n for x in seq):
        raise ValueError(f"Pruefer entries must lie in 0..{n - 1}")
    remaining = [0] * n
    for x in seq:
        remaining[x] += 1
    heap = [v for v in range(n) if remaining[v] == 0]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        remaining[x] -= 1
        if remaining[x] == 0:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return Tree.from_edges(n, edges)


def prufer_encode(t: Tree) -> tuple[int, ...]:
    n = t.n
    if n <= 2:
        return ()
    adj = list(t.graph.adj)
    degree = list(t.degrees)
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    out = []
    for _ in range(n - 2):
        leaf = heapq.heappop(heap)
        nb = adj[leaf].bit_length() - 1
        out.append(nb)
        adj[nb] &= ~(1 << leaf)
        degree[nb] -= 1
        if degree[nb] == 1:
            heapq.heappush(heap, nb)
    return tuple(out)


# ---------------------------------------------------------------------------
# canonical form and enumeration


def _centers(t: Tree) -> list[int]:
    if t.n <= 2:
        return list(range(t.n))
    degree = list(t.degrees)
    layer = [v for v in range(t.n) if degree[v] == 1]
    left = t.n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for u in bits(t.graph.adj[v]):
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def _rooted_code(t: Tree, root: int) -> str:
    order = [root]
    parent = {root: -1}
    for v in order:
        for u in bits(t.graph.adj[v]):
            if u not in parent:
                parent[u] = v
                order.append(u)
    codes: dict[int, list[str]] = {v: [] for v in order}
    for v in reversed(order):
        code = "(" + "".join(sorted(codes[v])) + ")"
        if parent[v] == -1:
            return code
        codes[parent[v]].append(code)
    raise AssertionError("unreachable")


def tree_canonical_form(t: Tree) -> str:
    """AHU encoding rooted at the centre (smaller code over two centres)."""
    return min(_rooted_code(t, c) for c in _centers(t))


@lru_cache(maxsize=None)
def _all_trees(n: int) -> tuple[Tree, ...]:
    if n == 1:
        return (Tree(Graph(1, [0], check=False)),)
    found: dict[str, Tree] = {}
    for t in _all_trees(n - 1):
        edges = t.graph.edges()
        for v in range(n - 1):
            child = Tree.from_edges(n, edges + [(v, n - 1)])
            found.setdefault(tree_canonical_form(child), child)
    return tuple(found[k] for k in sorted(found))


def enumerate_trees(n: int, max_degree: int | None = None) -> list[Tree]:
    """One tree per isomorphism class on ``n`` vertices, optionally Δ-bounded.

    Trees are grown by leaf addition and deduplicated by their AHU code;
    output order is by AHU code.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUMERATION_N:
        raise DeskScaleExceeded(f"tree enumeration is capped at n={MAX_ENUMERATION_N}")
    trees = _all_trees(n)
    if max_degree is None:
        return list(trees)
    return [t for t in trees if t.max_degree <= max_degree]
