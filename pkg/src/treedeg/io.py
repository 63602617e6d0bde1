"""Text formats: graph6, edge lists, DOT export, tree parent arrays."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, bits, from_edges

__all__ = [
    "to_graph6",
    "from_graph6",
    "to_edgelist",
    "from_edgelist",
    "to_dot",
    "to_parent_array",
    "from_parent_array",
    "read_graph",
]


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    raise ValueError(f"graph6 cannot encode n={n}")


def to_graph6(g: Graph) -> str:
    """graph6 string without header or trailing newline."""
    out = bytearray(_encode_n(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<") :]
    data = [ord(c) - 63 for c in text]
    if not data or any(not 0 <= x < 64 for x in data):
        raise ValueError(f"not a graph6 string: {text!r}")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise ValueError("graph6 strings beyond 258047 vertices are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj, check=False)


def to_edgelist(g: Graph) -> str:
    """``n`` on the first line, then one ``u v`` per edge."""
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines (0-based). A lone integer first line gives ``n``."""
    edges = []
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if lines and len(lines[0].split()) == 1:
        declared = int(lines[0])
        n = declared if n is None else n
        lines = lines[1:]
    for ln in lines:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return from_edges(n, edges)


def to_dot(g: Graph, name: str = "G", highlight: dict[int, str] | None = None) -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = f' [label="{highlight[v]}"]' if highlight and v in highlight else ""
        lines.append(f"  {v}{attrs};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_parent_array(g: Graph, root: int = 0) -> str:
    """``n`` followed by the parent of each vertex ``1..n-1`` in a BFS tree.

    Only meaningful for trees rooted at vertex 0; vertices are renumbered so
    that the root is 0 and every parent precedes its child.
    """
    order = [root]
    parent = {root: -1}
    for v in order:
        for u in bits(g.adj[v]):
            if u not in parent:
                parent[u] = v
                order.append(u)
    if len(order) != g.n:
        raise ValueError("graph is not connected")
    index = {v: i for i, v in enumerate(order)}
    entries = [str(index[parent[v]]) for v in order[1:]]
    return " ".join([str(g.n)] + entries) + "\n"


def from_parent_array(text: str) -> Graph:
    tokens = [int(t) for t in text.split()]
    if not tokens:
        raise ValueError("empty parent array")
    n, parents = tokens[0], tokens[1:]
    if n < 1 or len(parents) != n - 1:
        raise ValueError(f"parent array for n={n} needs {n - 1} entries, got {len(parents)}")
    edges = []
    for child, p in enumerate(parents, start=1):
        if not 0 <= p < n or p == child:
            raise ValueError(f"bad parent {p} for vertex {child}")
        edges.append((p, child))
    return from_edges(n, edges)


def read_graph(source: str) -> Graph:
    """Read a graph from a file path or a literal graph6 string.

    Files may hold graph6 (first non-empty line), an edge list, or a parent
    array; the format is sniffed from the content.
    """
    path = Path(source)
    if path.is_file():
        text = path.read_text()
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError(f"{source}: empty file")
        first = lines[0]
        # graph6 never starts with a digit
        if not first[0].isdigit():
            return from_graph6(first)
        if len(lines) == 1 and len(first.split()) > 1:
            return from_parent_array(first)
        return from_edgelist(text)
    if path.suffix or "/" in source:
        raise FileNotFoundError(source)
    return from_graph6(source)
