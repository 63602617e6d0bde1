"""Ground truth that does not depend on any embedding theorem.

Exhaustive subgraph search, canonical forms, isomorph-free enumeration of
degree-constrained graphs, and a few independent counting oracles used by the
test suite.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import random
from collections.abc import Callable, Iterator
from functools import lru_cache

import pynauty

from .embedding import Embedding
from .errors import DeskScaleExceeded, PreconditionViolated, SamplingExhausted
from .graph import Graph, bits, components, is_connected, relabel
from .io import to_graph6
from .trees import Tree, prufer_decode

__all__ = [
    "subgraph_embed",
    "subgraph_embed_naive",
    "canonical_labeling",
    "canonical_form",
    "nauty_form",
    "enumerate_graphs",
    "enumerate_graphs_labeled",
    "count_graphs_burnside",
    "enumerate_trees_prufer",
    "random_graph",
    "class_list_hash",
    "MAX_CANONICAL_N",
    "MAX_EXHAUSTIVE_N",
]

MAX_CANONICAL_N = 16
MAX_EXHAUSTIVE_N = 9
MAX_SPARSE_COMPLEMENT_N = 14
MAX_LABELED_N = 6


# ---------------------------------------------------------------------------
# subgraph embedding


def _search_order(f: Graph) -> list[int]:
    degs = f.degrees()
    order: list[int] = []
    placed = 0
    remaining = set(range(f.n))
    while remaining:
        x = max(remaining, key=lambda v: ((f.adj[v] & placed).bit_count(), degs[v], -v))
        order.append(x)
        placed |= 1 << x
        remaining.remove(x)
    return order


def _twin_masks(g: Graph) -> list[int]:
    """For each vertex, the bitset of lower-indexed true or false twins."""
    out = [0] * g.n
    adj = g.adj
    for v in range(g.n):
        for u in range(v):
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                out[v] |= 1 << u
    return out


def subgraph_embed(f: Graph, g: Graph) -> Embedding | None:
    """Find an embedding of ``f`` into ``g`` or certify that none exists.

    Backtracking in a connectivity-first, degree-descending variable order.
    Candidates must be adjacent to the images of all placed neighbours, have
    enough degree and enough free neighbours, lie in a large enough host
    component, and interchangeable host twins are tried only once.
    """
    if f.n > g.n:
        raise PreconditionViolated(f"pattern has {f.n} vertices, host only {g.n}")
    if f.n == 0:
        return Embedding(f, g, ())
    fdeg, gdeg = f.degrees(), g.degrees()
    gadj = g.adj

    comp_of_host = [0] * g.n
    for comp in components(g):
        size = comp.bit_count()
        for v in bits(comp):
            comp_of_host[v] = size
    pattern_comp = [0] * f.n
    for comp in components(f):
        size = comp.bit_count()
        for v in bits(comp):
            pattern_comp[v] = size

    order = _search_order(f)
    pos = {x: i for i, x in enumerate(order)}
    anchors = [[y for y in bits(f.adj[x]) if pos[y] < i] for i, x in enumerate(order)]
    later = [sum(1 for y in bits(f.adj[x]) if pos[y] > i) for i, x in enumerate(order)]
    domain = []
    for x in order:
        m = 0
        for c in range(g.n):
            if gdeg[c] >= fdeg[x] and comp_of_host[c] >= pattern_comp[x]:
                m |= 1 << c
        domain.append(m)
    twins = _twin_masks(g)
    assignment = [-1] * f.n
    size = f.n

    def rec(i: int, used: int) -> bool:
        if i == size:
            return True
        x = order[i]
        cand = domain[i] & ~used
        for y in anchors[i]:
            cand &= gadj[assignment[y]]
        need = later[i]
        while cand:
            low = cand & -cand
            cand ^= low
            c = low.bit_length() - 1
            if twins[c] & ~used:
                continue
            if need and (gadj[c] & ~used).bit_count() < need:
                continue
            assignment[x] = c
            if rec(i + 1, used | low):
                return True
        assignment[x] = -1
        return False

    if rec(0, 0):
        return Embedding(f, g, assignment)
    return None


def subgraph_embed_naive(f: Graph, g: Graph) -> dict[int, int] | None:
    """Plain backtracking in index order with no pruning; a second opinion."""
    if f.n > g.n:
        raise PreconditionViolated(f"pattern has {f.n} vertices, host only {g.n}")
    mapping: dict[int, int] = {}

    def rec(x: int) -> bool:
        if x == f.n:
            return True
        for c in range(g.n):
            if c in mapping.values():
                continue
            if all(g.has_edge(c, mapping[y]) for y in range(x) if f.has_edge(x, y)):
                mapping[x] = c
                if rec(x + 1):
                    return True
                del mapping[x]
        return False

    return dict(mapping) if rec(0) else None


# ---------------------------------------------------------------------------
# canonical labelling (individualisation-refinement)


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                groups.setdefault(tuple((a & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not split:
            return cells


class _Canon:
    def __init__(self, g: Graph) -> None:
        self.g = g
        self.n = g.n
        self.first = None  # (code, lab, path)
        self.best = None
        self.gens: list[list[int]] = []

    def code(self, lab: list[int]) -> tuple[int, ...]:
        inv = [0] * self.n
        for i, v in enumerate(lab):
            inv[v] = i
        adj = self.g.adj
        rows = []
        for v in lab:
            r = 0
            for u in bits(adj[v]):
                r |= 1 << inv[u]
            rows.append(r)
        return tuple(rows)

    def automorphism(self, lab_from: list[int], lab_to: list[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(lab_from, lab_to):
            gamma[a] = b
        if any(gamma[v] != v for v in range(self.n)):
            self.gens.append(gamma)

    def orbit_roots(self, path: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for gamma in self.gens:
            if all(gamma[p] == p for p in path):
                for v in range(self.n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def search(self, cells: list[list[int]], path: list[int]) -> int:
        level = len(path)
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = idx
        if target is None:
            return self.leaf([c[0] for c in cells], path)
        cell = cells[target]
        tried: list[int] = []
        ngens = -1
        roots: list[int] = []
        for v in cell:
            if len(self.gens) != ngens:
                ngens = len(self.gens)
                roots = self.orbit_roots(path)
            if any(roots[u] == roots[v] for u in tried):
                continue
            child = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1 :]
            jump = self.search(_refine(self.g.adj, child), path + [v])
            if jump < level:
                return jump
            tried.append(v)
        return level - 1

    def leaf(self, lab: list[int], path: list[int]) -> int:
        code = self.code(lab)
        if self.first is None:
            self.first = self.best = (code, lab, path)
            return len(path) - 1
        for ref in (self.first, self.best):
            if code == ref[0]:
                self.automorphism(ref[1], lab)
                common = 0
                while common < len(path) and path[common] == ref[2][common]:
                    common += 1
                return common
        if code < self.best[0]:
            self.best = (code, lab, path)
        return len(path) - 1


def canonical_labeling(g: Graph) -> list[int]:
    """``lab[i]`` is the vertex that receives canonical label ``i``."""
    if g.n > MAX_CANONICAL_N:
        raise DeskScaleExceeded(f"canonical labelling is capped at n={MAX_CANONICAL_N}")
    if g.n == 0:
        return []
    degs = g.degrees()
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(degs[v], []).append(v)
    cells = _refine(g.adj, [by_degree[d] for d in sorted(by_degree)])
    canon = _Canon(g)
    canon.search(cells, [])
    return canon.best[1]


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonically relabelled graph."""
    lab = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return to_graph6(relabel(g, perm)).encode("ascii")


# ---------------------------------------------------------------------------
# enumeration


def _nauty_rows(n: int, rows: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    """Adjacency rows relabelled by nauty's canonical labelling."""
    if n <= 1:
        return tuple(rows)
    ng = pynauty.Graph(n, adjacency_dict={v: list(bits(rows[v])) for v in range(n)})
    lab = pynauty.canon_label(ng)
    inv = [0] * n
    for i, v in enumerate(lab):
        inv[v] = i
    out = [0] * n
    for v in range(n):
        m = 0
        for u in bits(rows[v]):
            m |= 1 << inv[u]
        out[inv[v]] = m
    return tuple(out)


def nauty_form(g: Graph) -> tuple[int, int, tuple[int, ...]]:
    """Canonical form computed by nauty (independent of :func:`canonical_form`)."""
    return (g.n, g.edge_count(), _nauty_rows(g.n, g.adj))


def _augment(parents, k: int, accept: Callable[[int, int, list[int]], bool]):
    """Add vertex ``k-1`` to every parent on ``k-1`` vertices in every admissible way."""
    found = set()
    km = k - 1
    for rows in parents:
        degs = [r.bit_count() for r in rows]
        for s in range(1 << km):
            if not accept(s, s.bit_count(), degs):
                continue
            new = list(rows)
            for u in bits(s):
                new[u] |= 1 << km
            new.append(s)
            found.add(_nauty_rows(k, new))
    return found


@lru_cache(maxsize=None)
def _min_degree_classes(k: int, d: int) -> frozenset:
    """All graphs on ``k`` vertices with minimum degree >= ``d`` (d >= 0).

    Every such graph minus a minimum-degree vertex has minimum degree >= d-1,
    so growing from that class while keeping the new vertex of minimum degree
    reaches every class.
    """
    if k == 0:
        return frozenset({()})
    parents = _min_degree_classes(k - 1, max(d - 1, 0))

    def accept(s: int, size: int, degs: list[int]) -> bool:
        if size < d:
            return False
        for u, du in enumerate(degs):
            du += s >> u & 1
            if du < d or du < size:
                return False
        return True

    return frozenset(_augment(parents, k, accept))


@lru_cache(maxsize=None)
def _max_degree_classes(k: int, bound: int) -> frozenset:
    """All graphs on ``k`` vertices with maximum degree <= ``bound``.

    Bounded maximum degree is hereditary; the new vertex is kept of minimum
    degree to cut duplicates.
    """
    if k == 0:
        return frozenset({()})
    parents = _max_degree_classes(k - 1, bound)

    def accept(s: int, size: int, degs: list[int]) -> bool:
        if size > bound:
            return False
        for u, du in enumerate(degs):
            du += s >> u & 1
            if du > bound or du < size:
                return False
        return True

    return frozenset(_augment(parents, k, accept))


def _complement_rows(n: int, rows: tuple[int, ...]) -> list[int]:
    full = (1 << n) - 1
    return [full & ~r & ~(1 << v) for v, r in enumerate(rows)]


def enumerate_graphs(
    n: int, min_degree: int = 0, connected_only: bool = False, *, method: str = "auto"
) -> Iterator[Graph]:
    """Stream one graph per isomorphism class with minimum degree >= ``min_degree``.

    ``method`` is ``"direct"`` (grow dense graphs), ``"complement"`` (grow
    complements of maximum degree <= n-1-min_degree) or ``"auto"``, which
    picks the complement when it is the sparser side. Output graphs carry
    nauty's canonical labelling and come in lexicographic order of their
    adjacency rows, so both methods emit identical streams.
    """
    if n < 1:
        raise ValueError("n must be positive")
    bound = n - 1 - min_degree
    if method == "auto":
        method = "complement" if bound < min_degree else "direct"
    if method not in ("direct", "complement"):
        raise ValueError(f"unknown method {method!r}")
    sparse_ok = method == "complement" and bound <= 2 and n <= MAX_SPARSE_COMPLEMENT_N
    if n > MAX_EXHAUSTIVE_N and not sparse_ok:
        raise DeskScaleExceeded(
            f"exhaustive enumeration is capped at n={MAX_EXHAUSTIVE_N} "
            f"(n<={MAX_SPARSE_COMPLEMENT_N} when the complement has maximum degree <= 2)"
        )
    if bound < 0:
        return
    if method == "direct":
        classes = sorted(_min_degree_classes(n, max(min_degree, 0)))
    else:
        classes = sorted(
            _nauty_rows(n, _complement_rows(n, rows)) for rows in _max_degree_classes(n, bound)
        )
    for rows in classes:
        g = Graph(n, rows, check=False)
        if connected_only and not is_connected(g):
            continue
        yield g


def enumerate_graphs_labeled(n: int, min_degree: int = 0, connected_only: bool = False) -> list[Graph]:
    """Filter all labelled graphs, deduplicate with :func:`canonical_form`."""
    if n > MAX_LABELED_N:
        raise DeskScaleExceeded(f"labelled brute force is capped at n={MAX_LABELED_N}")
    pairs = list(itertools.combinations(range(n), 2))
    found: dict[bytes, Graph] = {}
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        if n and min(a.bit_count() for a in adj) < min_degree:
            continue
        g = Graph(n, adj, check=False)
        if connected_only and not is_connected(g):
            continue
        found.setdefault(canonical_form(g), g)
    return [found[k] for k in sorted(found)]


def _partitions(n: int, largest: int | None = None) -> Iterator[list[int]]:
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield [first] + rest


def count_graphs_burnside(n: int) -> int:
    """Number of unlabelled graphs on ``n`` vertices by counting orbits.

    Averages ``2**(pair cycles)`` over the symmetric group, one cycle type
    at a time.
    """
    total = 0
    for parts in _partitions(n):
        mult: dict[int, int] = {}
        for k in parts:
            mult[k] = mult.get(k, 0) + 1
        size = math.factorial(n)
        for k, m in mult.items():
            size //= k**m * math.factorial(m)
        cycles = sum(k // 2 for k in parts)
        cycles += sum(math.gcd(a, b) for a, b in itertools.combinations(parts, 2))
        total += size * 2**cycles
    return total // math.factorial(n)


def enumerate_trees_prufer(n: int, key: Callable[[Graph], object] = nauty_form) -> list[Tree]:
    """All labelled trees from Pruefer sequences, one per ``key`` class."""
    if n == 1:
        return [Tree(Graph(1, [0], check=False))]
    found: dict[object, Tree] = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        t = prufer_decode(seq, n)
        found.setdefault(key(t.graph), t)
    return list(found.values())


def class_list_hash(graphs) -> str:
    """sha256 over the sorted graph6 strings of a list of graphs."""
    h = hashlib.sha256()
    for line in sorted(to_graph6(g) for g in graphs):
        h.update(line.encode("ascii") + b"\n")
    return h.hexdigest()


# ---------------------------------------------------------------------------
# sampling


def random_graph(
    n: int,
    min_degree: int,
    seed: int | random.Random,
    *,
    p: float | None = None,
    connected: bool = True,
    attempts: int = 10_000,
) -> Graph:
    """Edge-independent random graph conditioned on degree and connectivity."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if n < 1 or min_degree > n - 1:
        raise SamplingExhausted(f"no graph on {n} vertices has minimum degree {min_degree}")
    if p is None:
        p = 1.0 if n == 1 else (min_degree + n - 1) / (2 * (n - 1))
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(attempts):
        adj = [0] * n
        for u, v in pairs:
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        if min(a.bit_count() for a in adj) < min_degree:
            continue
        g = Graph(n, adj, check=False)
        if connected and not is_connected(g):
            continue
        return g
    raise SamplingExhausted(f"no sample met the constraints in {attempts} attempts")
