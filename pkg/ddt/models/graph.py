"""Bitset graph and vertex-set records.

Both types are immutable and hashable so they can be shared across workers
and used as cache keys. Adjacency is one Python int per vertex; bit ``u`` of
``adj[v]`` is set iff ``uv`` is an edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from ddt.errors import InvalidSpecError, InvalidSubsetError, InvalidVertexError
from ddt.utils.bitset import iter_bits, mask_of


@dataclass(frozen=True, slots=True)
class VertexSet:
    """A subset of the vertices of an ``n``-vertex graph, stored as a bitmask."""

    parent_n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.parent_n < 0:
            raise InvalidSubsetError(f"negative vertex count {self.parent_n}")
        if self.mask < 0 or self.mask >> self.parent_n:
            raise InvalidSubsetError(
                f"mask {self.mask:#x} has bits outside [0, {self.parent_n})"
            )

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise InvalidSubsetError(f"vertex {v} outside [0, {n})")
        return cls(n, mask_of(vertices))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.parent_n and bool(self.mask >> v & 1)

    def vertices(self) -> List[int]:
        return list(iter_bits(self.mask))

    def _check_same_parent(self, other: "VertexSet") -> None:
        if other.parent_n != self.parent_n:
            raise InvalidSubsetError(
                f"vertex sets over {self.parent_n} and {other.parent_n} vertices"
            )

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check_same_parent(other)
        return VertexSet(self.parent_n, self.mask | other.mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check_same_parent(other)
        return VertexSet(self.parent_n, self.mask & other.mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check_same_parent(other)
        return VertexSet(self.parent_n, self.mask & ~other.mask)

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check_same_parent(other)
        return not self.mask & other.mask

    def complement(self) -> "VertexSet":
        return VertexSet(self.parent_n, ((1 << self.parent_n) - 1) & ~self.mask)


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with symmetric bitset rows."""

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidSpecError(f"negative vertex count {self.n}")
        if len(self.adj) != self.n:
            raise InvalidSpecError(f"{len(self.adj)} adjacency rows for {self.n} vertices")
        for v, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise InvalidSpecError(f"row {v} has bits outside [0, {self.n})")
            if row >> v & 1:
                raise InvalidSpecError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise InvalidSpecError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u}, {v}) outside [0, {n})")
            if u == v:
                raise InvalidSpecError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_networkx(cls, nx_graph) -> "Graph":
        """Build from a networkx graph, relabelling nodes in sorted order."""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[a], index[b]) for a, b in nx_graph.edges()))

    def to_networkx(self):
        import networkx as nx

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v} outside [0, {self.n})")

    def check_subset(self, s: VertexSet) -> None:
        if s.parent_n != self.n:
            raise InvalidSubsetError(f"vertex set over {s.parent_n} vertices used with n={self.n}")

    def vertex_set(self, vertices: Sequence[int] = ()) -> VertexSet:
        return VertexSet.from_vertices(self.n, vertices)
