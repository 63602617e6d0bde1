"""Embedding trees into hosts of minimum degree n-3.

``decide_and_embed`` decides embeddability of an ``n``-vertex tree with
maximum degree at most ``n-3`` into a connected host with at least ``n``
vertices and minimum degree at least ``n-3``. The only obstructions are

* the host is K_{n-3,n-3} and the tree is a T(p, q); and
* the host is K_{a,...,a} with k+1 >= 3 parts, k*a = n-3, and the tree is
  T(1, n-4).

Everything else gets an explicit witness, built by greedy extension along a
conventional labelling from structured seeds, with endpoint repairs and a
complete backtracking search as the last resort.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .embedding import Embedding
from .errors import InternalContradiction, PreconditionViolated
from .graph import (
    Graph,
    bits,
    escape_path,
    induced_p3,
    is_balanced_complete_multipartite,
    is_connected,
)
from .trees import ConventionalLabelling, Tree, is_t1_nminus4, proof_labelling, recognize_tpq

__all__ = [
    "Embeddable",
    "ExceptionBipartite",
    "ExceptionMultipartite",
    "OutOfScope",
    "EmbedVerdict",
    "extend",
    "embed_greedy",
    "decide_and_embed",
    "verdict_to_json",
    "SEED_BUDGET",
]

SEED_BUDGET = 48


@dataclass(frozen=True)
class Embeddable:
    embedding: Embedding
    strategy: str
    status = "embeddable"


@dataclass(frozen=True)
class ExceptionBipartite:
    """Host is K_{n-3,n-3} and the tree is T(p, n-3-p), ``p <= n-3-p``."""

    p: int
    status = "exception_bipartite"


@dataclass(frozen=True)
class ExceptionMultipartite:
    """Host has ``k+1`` parts of size ``a`` and the tree is T(1, n-4)."""

    k: int
    a: int
    status = "exception_multipartite"


@dataclass(frozen=True)
class OutOfScope:
    reason: str
    status = "out_of_scope"


EmbedVerdict = Union[Embeddable, ExceptionBipartite, ExceptionMultipartite, OutOfScope]


def verdict_to_json(verdict: EmbedVerdict, *, witness: bool = True) -> dict:
    out: dict = {"status": verdict.status}
    if isinstance(verdict, Embeddable):
        out["strategy"] = verdict.strategy
        if witness:
            out["witness"] = list(verdict.embedding.assignment)
    elif isinstance(verdict, ExceptionBipartite):
        out["p"] = verdict.p
    elif isinstance(verdict, ExceptionMultipartite):
        out["k"] = verdict.k
        out["a"] = verdict.a
    else:
        out["reason"] = verdict.reason
    return out


# ---------------------------------------------------------------------------
# single-step extension


def extend(e: Embedding, labelling: ConventionalLabelling, j: int) -> Embedding | None:
    """Place ``labelling.order[j]`` next to the image of its earlier neighbour.

    ``j`` is a 0-based position (``j >= 1``); positions ``0..j-1`` must be
    assigned. Picks the free neighbour with the fewest free neighbours of
    its own, then the lowest index. Returns ``None`` when no neighbour of the
    parent's image is free.
    """
    order = labelling.order
    if not 1 <= j < len(order):
        raise PreconditionViolated(f"position {j} out of range 1..{len(order) - 1}")
    if any(not e.is_assigned(order[i]) for i in range(j)):
        raise PreconditionViolated("all earlier positions must be assigned")
    if e.is_assigned(order[j]):
        raise PreconditionViolated(f"position {j} is already assigned")
    host = e.host
    free = host.all_vertices & ~e.used
    cand = host.adj[e.assignment[labelling.parent_vertex(j)]] & free
    if not cand:
        return None
    best = min(bits(cand), key=lambda c: ((host.adj[c] & free).bit_count(), c))
    return e.assign(order[j], best)


def embed_greedy(t: Tree, g: Graph, labelling: ConventionalLabelling | None = None) -> Embedding | None:
    """Root at host vertex 0 and extend position by position.

    Always succeeds when the host has minimum degree at least ``t.n - 1``.
    """
    if labelling is None:
        from .trees import conventional_labelling_bfs

        labelling = conventional_labelling_bfs(t, 0)
    if g.n == 0:
        return None
    e = Embedding(t.graph, g).assign(labelling.order[0], 0)
    for j in range(1, t.n):
        e = extend(e, labelling, j)
        if e is None:
            return None
    return e


# ---------------------------------------------------------------------------
# structured construction


@lru_cache(maxsize=4096)
def _labelling(t: Tree) -> ConventionalLabelling:
    return proof_labelling(t)


class _Builder:
    """Greedy completion of partial seeds along the proof labelling."""

    def __init__(self, t: Tree, g: Graph) -> None:
        self.t = t
        self.g = g
        self.adj = g.adj
        self.full = g.all_vertices
        self.n = t.n
        lab = _labelling(t)
        self.lab = lab
        self.order = lab.order
        self.parent = [lab.order[p] if p >= 0 else -1 for p in lab.parent]
        self.path_len = len(t.longest_path)
        tail = self.order[-2:]
        self.tail = set(tail)
        self.tail_parents = {self.parent[self.n - 2], self.parent[self.n - 1]}
        self.attempts = 0

    # -- greedy completion -------------------------------------------------

    def complete(self, seed: dict[int, int]) -> tuple[list[int], int | None]:
        """Fill every unseeded vertex in labelling order.

        Returns the assignment (indexed by tree vertex) and the position where
        no free neighbour was available, or ``None`` on success.
        """
        self.attempts += 1
        adj, full = self.adj, self.full
        assign = [-1] * self.n
        used = 0
        for x, y in seed.items():
            assign[x] = y
            used |= 1 << y
        for j, v in enumerate(self.order):
            if assign[v] >= 0:
                continue
            if j == 0:
                cand = full & ~used
            else:
                cand = adj[assign[self.parent[j]]] & ~used
            if not cand:
                return assign, j
            c = self._choose(v, cand, used, assign)
            assign[v] = c
            used |= 1 << c
        return assign, None

    def _choose(self, v: int, cand: int, used: int, assign: list[int]) -> int:
        adj = self.adj
        free = self.full & ~used
        if v in self.tail_parents:
            # endpoints hang here later: keep as many free neighbours as possible
            return min(bits(cand), key=lambda c: (-(adj[c] & free).bit_count(), c))
        if v in self.tail:
            return min(bits(cand), key=lambda c: ((adj[c] & free).bit_count(), c))
        anchors = [assign[p] for p in self.tail_parents if assign[p] >= 0]
        return min(
            bits(cand),
            key=lambda c: (
                sum(adj[a] >> c & 1 for a in anchors),
                (adj[c] & free).bit_count(),
                c,
            ),
        )

    def attempt(self, seed: dict[int, int]) -> list[int] | None:
        if not self._seed_ok(seed):
            return None
        assign, blocked = self.complete(seed)
        return assign if blocked is None else None

    def _seed_ok(self, seed: dict[int, int]) -> bool:
        if len(set(seed.values())) != len(seed):
            return False
        for x, y in seed.items():
            p = self.parent[self.lab.order.index(x)]
            if p >= 0 and p in seed and not self.adj[y] >> seed[p] & 1:
                return False
            if p >= 0 and p not in seed:
                return False
        return True

    # -- seeds -------------------------------------------------------------

    def p3_seed(self, alpha: int, beta: int, gamma: int) -> dict[int, int]:
        v1, v2, v3 = self.order[:3]
        if self.parent[2] == v2:
            return {v1: beta, v2: alpha, v3: gamma}
        return {v1: alpha, v2: beta, v3: gamma}

    def p3_triples(self):
        adj, full = self.adj, self.full
        for alpha in range(self.g.n):
            nb = adj[alpha]
            for beta in bits(nb):
                for gamma in bits(nb & ~adj[beta] & ~(1 << beta)):
                    yield alpha, beta, gamma

    def spine_repairs(self, assign: list[int]):
        """Reseat the start of the spine so that the last spine vertex keeps room.

        Moves: give ``v1`` another neighbour of ``phi(v2)``; or send a prefix
        ``v1..v_{t-1}`` along a path that escapes the used spine and the closed
        neighbourhood of the last spine image.
        """
        i = self.path_len - 2
        spine = list(self.order[:i])
        images = [assign[v] for v in spine]
        if any(x < 0 for x in images):
            return
        adj = self.adj
        u_last = images[-1]
        spine_mask = 0
        for x in images:
            spine_mask |= 1 << x
        rest = {v: assign[v] for v in spine[1:]}
        alt = adj[images[1]] & ~spine_mask
        for u1 in sorted(bits(alt), key=lambda c: (adj[u_last] >> c & 1, c)):
            yield {spine[0]: u1, **rest}
        closed = spine_mask | adj[u_last] | (1 << u_last)
        for t in range(2, i):
            anchor = images[t - 1]
            for start in bits(adj[anchor] & ~closed):
                path = escape_path(self.g, closed, 0, anchor, start=start)
                if len(path) < t - 1:
                    continue
                seed = {spine[t - 2 - k]: path[k] for k in range(t - 1)}
                seed.update({spine[k]: images[k] for k in range(t - 1, i)})
                yield seed

    def case_seeds(self):
        """Seeds from the short-path configurations (|P| = 4 or 5)."""
        adj, g, order = self.adj, self.g, self.order
        degs = g.degrees()
        top = max(degs)
        hubs = [v for v in range(g.n) if degs[v] == top]
        if self.path_len == 4:
            v1, v2, v3, v4 = order[:4]
            for u in hubs:
                for w in bits(adj[u]):
                    yield {v2: u, v1: w}
                    for x in bits(adj[w] & ~adj[u] & ~(1 << u)):
                        yield {v2: u, v1: w, v3: x}
            for u2 in range(g.n):
                for u1 in bits(adj[u2]):
                    outside = list(bits(adj[u1] & ~adj[u2] & ~(1 << u2)))
                    if len(outside) >= 2:
                        yield {v1: u1, v2: u2, v3: outside[0], v4: outside[1]}
        elif self.path_len == 5:
            v1, v2, v3 = order[:3]
            kids = {v: [u for u in order[3:-2] if self.parent[order.index(u)] == v] for v in (v1, v2, v3)}
            for u3 in hubs:
                for u2 in bits(adj[u3]):
                    for u1 in bits(adj[u2] & ~adj[u3] & ~(1 << u3)):
                        yield {v1: u1, v2: u2, v3: u3}
            if kids[v2]:
                w = kids[v2][0]
                for ux in range(g.n):
                    for uy in bits(adj[ux]):
                        outside = list(bits(adj[uy] & ~adj[ux] & ~(1 << ux)))
                        if len(outside) >= 2:
                            yield {v1: outside[0], v2: uy, v3: ux, w: outside[1]}
            for end, mid, other in ((v1, v2, v3), (v3, v2, v1)):
                if not kids[end]:
                    continue
                w = kids[end][0]
                for alpha, beta, gamma in self.p3_triples():
                    extra = adj[beta] & ~adj[gamma] & ~(1 << gamma) & ~(1 << alpha)
                    for u4 in bits(extra):
                        yield {end: beta, mid: alpha, other: gamma, w: u4}
                        break

    # -- exhaustive fallback ----------------------------------------------

    def backtrack(self) -> list[int] | None:
        adj, order, parent = self.adj, self.order, self.parent
        n = self.n
        assign = [-1] * n

        def rec(j: int, used: int) -> bool:
            if j == n:
                return True
            v = order[j]
            cand = (self.full if j == 0 else adj[assign[parent[j]]]) & ~used
            free = self.full & ~used
            for c in sorted(bits(cand), key=lambda c: ((adj[c] & free).bit_count(), c)):
                assign[v] = c
                if rec(j + 1, used | (1 << c)):
                    return True
            assign[v] = -1
            return False

        return assign if rec(0, 0) else None


def _scope_problem(t: Tree, g: Graph) -> str | None:
    n = t.n
    if t.max_degree > n - 3:
        return "max_degree_too_large"
    if g.n < n:
        return "host_too_small"
    if not is_connected(g):
        return "disconnected_host"
    if min(g.degrees()) < n - 3:
        return "min_degree_too_small"
    return None


def decide_and_embed(t: Tree, g: Graph) -> EmbedVerdict:
    """Verdict for embedding ``t`` into ``g`` under the minimum-degree n-3 regime."""
    reason = _scope_problem(t, g)
    if reason is not None:
        return OutOfScope(reason)
    n = t.n
    shape = recognize_tpq(t)
    parts = is_balanced_complete_multipartite(g)
    if shape is not None and parts == (2, n - 3):
        return ExceptionBipartite(shape.p)
    if parts is not None and parts[0] >= 3 and (parts[0] - 1) * parts[1] == n - 3 and is_t1_nminus4(t):
        return ExceptionMultipartite(parts[0] - 1, parts[1])

    builder = _Builder(t, g)

    def done(assign: list[int], strategy: str) -> Embeddable:
        e = Embedding(t.graph, g, assign)
        if not (e.is_total and e.is_valid()):
            raise AssertionError(f"invalid witness from strategy {strategy!r}")
        return Embeddable(e, strategy)

    triple = induced_p3(g)
    if triple is None:
        assign, blocked = builder.complete({})
        if blocked is None:
            return done(assign, "greedy")
    else:
        assign, blocked = builder.complete(builder.p3_seed(*triple))
        if blocked is None:
            return done(assign, "greedy")
        if builder.path_len >= 5:
            for seed in builder.spine_repairs(assign):
                if builder.attempts > SEED_BUDGET:
                    break
                found = builder.attempt(seed)
                if found is not None:
                    return done(found, "repair")

    budget = builder.attempts + SEED_BUDGET
    for seed in builder.case_seeds():
        if builder.attempts > budget:
            break
        found = builder.attempt(seed)
        if found is not None:
            return done(found, "seed")
    budget = builder.attempts + SEED_BUDGET
    for triple in builder.p3_triples():
        if builder.attempts > budget:
            break
        found = builder.attempt(builder.p3_seed(*triple))
        if found is not None:
            return done(found, "seed")

    found = builder.backtrack()
    if found is None:
        raise InternalContradiction(
            f"no embedding of tree {t.graph.edges()} into host {g.edges()} "
            "although neither obstruction applies"
        )
    return done(found, "backtrack")
