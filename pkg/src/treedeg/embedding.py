"""Partial or total embeddings of a pattern graph into a host graph."""

from __future__ import annotations

from collections.abc import Mapping, Sequence

from .graph import Graph, bits

__all__ = ["Embedding", "check_embedding"]

UNASSIGNED = -1


class Embedding:
    """Injective map from pattern vertices to host vertices.

    ``assignment[x]`` is the image of pattern vertex ``x`` or ``-1``;
    ``used`` is the bitset of host images. Instances are not mutated after
    construction; :meth:`assign` returns a new embedding.
    """

    __slots__ = ("pattern", "host", "assignment", "used")

    def __init__(self, pattern: Graph, host: Graph, assignment: Sequence[int] | None = None) -> None:
        if assignment is None:
            assignment = (UNASSIGNED,) * pattern.n
        assignment = tuple(assignment)
        if len(assignment) != pattern.n:
            raise ValueError("assignment length must match the pattern size")
        used = 0
        for img in assignment:
            if img != UNASSIGNED:
                if used >> img & 1:
                    raise ValueError(f"host vertex {img} used twice")
                used |= 1 << img
        self.pattern = pattern
        self.host = host
        self.assignment = assignment
        self.used = used

    @classmethod
    def from_mapping(cls, pattern: Graph, host: Graph, mapping: Mapping[int, int]) -> Embedding:
        assignment = [UNASSIGNED] * pattern.n
        for x, y in mapping.items():
            assignment[x] = y
        return cls(pattern, host, assignment)

    def assign(self, x: int, image: int) -> Embedding:
        if self.assignment[x] != UNASSIGNED:
            raise ValueError(f"pattern vertex {x} is already assigned")
        new = list(self.assignment)
        new[x] = image
        return Embedding(self.pattern, self.host, new)

    def is_assigned(self, x: int) -> bool:
        return self.assignment[x] != UNASSIGNED

    @property
    def is_total(self) -> bool:
        return UNASSIGNED not in self.assignment

    def mapping(self) -> dict[int, int]:
        return {x: y for x, y in enumerate(self.assignment) if y != UNASSIGNED}

    def is_valid(self) -> bool:
        return check_embedding(self.pattern, self.host, self.mapping())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Embedding):
            return NotImplemented
        return (self.pattern, self.host, self.assignment) == (other.pattern, other.host, other.assignment)

    def __hash__(self) -> int:
        return hash(self.assignment)

    def __repr__(self) -> str:
        return f"Embedding({self.mapping()})"


def check_embedding(
    pattern: Graph, host: Graph, mapping: Mapping[int, int], *, total: bool = False
) -> bool:
    """Validate injectivity, ranges and edge preservation of ``mapping``."""
    if total and set(mapping) != set(range(pattern.n)):
        return False
    images = list(mapping.values())
    if len(set(images)) != len(images):
        return False
    for x, y in mapping.items():
        if not (0 <= x < pattern.n and 0 <= y < host.n):
            return False
    for x, y in mapping.items():
        for z in bits(pattern.adj[x]):
            if z in mapping and not host.has_edge(y, mapping[z]):
                return False
    return True
