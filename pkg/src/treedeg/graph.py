"""Undirected simple graphs on vertices ``0..n-1`` with bitset adjacency rows.

A vertex set is a plain ``int`` used as a bitset: bit ``v`` set means vertex
``v`` is a member. Paths are tuples of vertices.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence

from .errors import Disconnected, EmptyGraph, PreconditionViolated

__all__ = [
    "Graph",
    "bits",
    "mask_of",
    "from_edges",
    "empty_graph",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "star_graph",
    "complete_multipartite",
    "complete_bipartite",
    "degree_stats",
    "is_connected",
    "components",
    "is_path",
    "dirac_path",
    "escape_path",
    "induced_p3",
    "is_balanced_bipartite_Ktt",
    "is_balanced_complete_multipartite",
    "complement",
    "disjoint_union",
    "induced",
    "relabel",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a bitset in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph. ``adj[v]`` is the neighbour bitset of ``v``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int], *, check: bool = True) -> None:
        adj = tuple(adj)
        if check:
            if n < 0 or len(adj) != n:
                raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                if row & ~full:
                    raise ValueError(f"row {v} addresses a vertex >= {n}")
                if row >> v & 1:
                    raise ValueError(f"loop at vertex {v}")
                for u in bits(row):
                    if not adj[u] >> v & 1:
                        raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj
        self._hash = None

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, check=False)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n, check=False)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)], check=False)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts are consecutive index blocks."""
    n = sum(sizes)
    full = (1 << n) - 1
    adj = []
    start = 0
    for size in sizes:
        part = ((1 << size) - 1) << start
        adj.extend([full & ~part] * size)
        start += size
    return Graph(n, adj, check=False)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


# ---------------------------------------------------------------------------
# basic structure


def degree_stats(g: Graph) -> tuple[int, int]:
    """Return ``(min_degree, max_degree)``."""
    if g.n == 0:
        raise EmptyGraph("degree statistics of the empty graph are undefined")
    degs = g.degrees()
    return min(degs), max(degs)


def _reach(g: Graph, start: int, within: int) -> int:
    seen = 1 << start
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitsets, ordered by smallest member."""
    if g.n == 0:
        raise EmptyGraph("the empty graph has no components")
    out = []
    left = g.all_vertices
    while left:
        v = (left & -left).bit_length() - 1
        comp = _reach(g, v, left)
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise EmptyGraph("connectivity of the empty graph is undefined")
    return _reach(g, 0, g.all_vertices) == g.all_vertices


def is_path(g: Graph, path: Sequence[int]) -> bool:
    """Distinct vertices, consecutive ones adjacent, at least one vertex."""
    if not path or len(set(path)) != len(path):
        return False
    if any(not 0 <= v < g.n for v in path):
        return False
    return all(g.adj[a] >> b & 1 for a, b in zip(path, path[1:]))


# ---------------------------------------------------------------------------
# constructive path lemmas


def dirac_path(g: Graph) -> tuple[int, ...]:
    """A path on at least ``min(n, 2*delta + 1)`` vertices of a connected graph.

    Grows a path greedily at both ends. When both ends are stuck and the path
    is still short, the end-neighbour crossing pattern closes the path into a
    cycle; connectivity then supplies an outside vertex to open it onto.
    """
    if not is_connected(g):
        raise Disconnected("dirac_path needs a connected graph")
    n, adj = g.n, g.adj
    delta = min(g.degrees())
    target = min(n, 2 * delta + 1)
    path = [0]
    on = 1
    while True:
        grew = True
        while grew:
            grew = False
            free = adj[path[-1]] & ~on
            if free:
                v = (free & -free).bit_length() - 1
                path.append(v)
                on |= 1 << v
                grew = True
            free = adj[path[0]] & ~on
            if free:
                v = (free & -free).bit_length() - 1
                path.insert(0, v)
                on |= 1 << v
                grew = True
        if len(path) >= target:
            return tuple(path)
        # Both ends saturated on the path and len(path) <= 2*delta, so some
        # i has path[0] ~ path[i+1] and path[-1] ~ path[i].
        first, last = path[0], path[-1]
        pivot = None
        for i in range(len(path) - 1):
            if adj[first] >> path[i + 1] & 1 and adj[last] >> path[i] & 1:
                pivot = i
                break
        if pivot is None:
            raise AssertionError("no crossing pair on a saturated short path")
        cycle = path[: pivot + 1] + path[pivot + 1 :][::-1]
        # cycle is closed: cycle[0]=first ~ cycle[-1]=path[pivot+1]
        for idx, c in enumerate(cycle):
            outside = adj[c] & ~on
            if outside:
                w = (outside & -outside).bit_length() - 1
                path = [w] + cycle[idx:] + cycle[:idx]
                on |= 1 << w
                break
        else:
            raise AssertionError("connected graph with a closed cycle missing vertices")


def escape_path(
    g: Graph, s0: int, s1: int, alpha: int, *, start: int | None = None
) -> tuple[int, ...]:
    """A path outside ``s0`` beginning at a neighbour of ``alpha``.

    The path is grown from ``start`` (default: the smallest neighbour of
    ``alpha`` outside ``s0``) until its far end has no neighbour outside
    ``s0`` and the path. When ``s1`` is a proper subset of ``s0`` with
    ``N(s1) <= s0`` the result has at least ``|s1| + delta - |s0| + 1``
    vertices.
    """
    adj = g.adj
    full = g.all_vertices
    if s0 & ~full or s1 & ~full:
        raise PreconditionViolated("vertex set addresses a vertex outside the graph")
    if s1 & ~s0 or s1 == s0:
        raise PreconditionViolated("s1 must be a proper subset of s0")
    nbhd = 0
    for v in bits(s1):
        nbhd |= adj[v]
    if nbhd & ~s0:
        raise PreconditionViolated("N(s1) is not contained in s0")
    if not (0 <= alpha < g.n) or not s0 >> alpha & 1:
        raise PreconditionViolated("alpha must lie in s0")
    exits = adj[alpha] & ~s0
    if not exits:
        raise PreconditionViolated("alpha has no neighbour outside s0")
    if start is None:
        start = (exits & -exits).bit_length() - 1
    elif not exits >> start & 1:
        raise PreconditionViolated("start must be a neighbour of alpha outside s0")
    path = [start]
    on = s0 | (1 << start)
    while True:
        free = adj[path[-1]] & ~on
        if not free:
            return tuple(path)
        v = (free & -free).bit_length() - 1
        path.append(v)
        on |= 1 << v


def _bfs_path(g: Graph, src: int, dst: int) -> list[int]:
    parent = {src: -1}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for u in bits(g.adj[v]):
            if u not in parent:
                parent[u] = v
                queue.append(u)
    path = [dst]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path[::-1]


def induced_p3(g: Graph) -> tuple[int, int, int] | None:
    """Return ``(alpha, beta, gamma)`` with alpha~beta, alpha~gamma, beta!~gamma.

    Uses the first non-adjacent pair in lexicographic order and the first
    three vertices of a BFS shortest path between them. ``None`` exactly when
    ``g`` is complete.
    """
    if g.n < 3:
        raise PreconditionViolated("induced_p3 needs at least 3 vertices")
    if not is_connected(g):
        raise Disconnected("induced_p3 needs a connected graph")
    full = g.all_vertices
    for u in range(g.n):
        missing = full & ~g.adj[u] & ~((1 << (u + 1)) - 1)
        if missing:
            v = (missing & -missing).bit_length() - 1
            path = _bfs_path(g, u, v)
            return path[1], path[0], path[2]
    return None


# ---------------------------------------------------------------------------
# exceptional hosts


def is_balanced_complete_multipartite(g: Graph) -> tuple[int, int] | None:
    """``(parts, part_size)`` if ``g`` is K_{a,...,a}, else ``None``.

    The parts are the classes of the relation "equal or non-adjacent", which
    must be an equivalence relation with equally sized classes.
    """
    if g.n == 0:
        return None
    full = g.all_vertices
    classes = set()
    for v in range(g.n):
        cls = full & ~g.adj[v]
        for u in bits(cls):
            if full & ~g.adj[u] != cls:
                return None
        classes.add(cls)
    sizes = {c.bit_count() for c in classes}
    if len(sizes) != 1:
        return None
    return len(classes), sizes.pop()


def is_balanced_bipartite_Ktt(g: Graph) -> int | None:
    """``t`` if ``g`` is K_{t,t}, else ``None``."""
    shape = is_balanced_complete_multipartite(g)
    if shape is None or shape[0] != 2:
        return None
    return shape[1]


# ---------------------------------------------------------------------------
# graph algebra


def complement(g: Graph) -> Graph:
    full = g.all_vertices
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)], check=False)


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, adj, check=False)


def induced(g: Graph, s: int) -> Graph:
    """Subgraph induced on ``s``; members are renumbered in ascending order."""
    members = list(bits(s))
    index = {v: i for i, v in enumerate(members)}
    adj = []
    for v in members:
        row = 0
        for u in bits(g.adj[v] & s):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(members), adj, check=False)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        m = 0
        for u in bits(row):
            m |= 1 << perm[u]
        adj[perm[v]] = m
    return Graph(g.n, adj, check=False)
