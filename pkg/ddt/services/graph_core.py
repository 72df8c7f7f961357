"""Graph mechanics: complement, induced subgraphs, degrees and neighbourhood distance."""
from __future__ import annotations

import logging
import threading
from collections import Counter
from typing import Dict, List, Tuple

import numpy as np
from cachetools import LRUCache, cached

from ddt.errors import InvalidPairError
from ddt.models.graph import Graph, VertexSet
from ddt.utils.bitset import iter_bits

logger = logging.getLogger(__name__)

DistanceTable = Tuple[Tuple[int, ...], ...]


def complement(g: Graph) -> Graph:
    """Graph on the same vertices with exactly the non-edges of ``g``."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced(g: Graph, s: VertexSet) -> Tuple[Graph, Dict[int, int]]:
    """``G[s]`` relabelled to ``0..|s|-1`` in ascending order, with the old→new index map."""
    g.check_subset(s)
    members = s.vertices()
    index = {old: new for new, old in enumerate(members)}
    rows = []
    for old in members:
        row = 0
        for u in iter_bits(g.adj[old] & s.mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(members), tuple(rows)), index


def degree_in(g: Graph, v: int, s: VertexSet) -> int:
    """``|N(v) ∩ s|``; membership of ``v`` itself is irrelevant."""
    g.check_vertex(v)
    g.check_subset(s)
    return (g.adj[v] & s.mask).bit_count()


def degrees(g: Graph) -> List[int]:
    return [row.bit_count() for row in g.adj]


def max_degree(g: Graph) -> int:
    return max((row.bit_count() for row in g.adj), default=0)


def edge_count(g: Graph) -> int:
    return sum(row.bit_count() for row in g.adj) // 2


def _distance(adj: Tuple[int, ...], x: int, y: int) -> int:
    return ((adj[x] & ~(1 << y)) ^ (adj[y] & ~(1 << x))).bit_count()


def nbhd_distance(g: Graph, x: int, y: int) -> int:
    """``|(N(x) - {y}) △ (N(y) - {x})|``."""
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        raise InvalidPairError(f"neighbourhood distance needs distinct vertices, got {x} twice")
    return _distance(g.adj, x, y)


@cached(cache=LRUCache(maxsize=128), lock=threading.Lock())
def distance_table(g: Graph) -> DistanceTable:
    """Symmetric n×n table of neighbourhood distances (diagonal 0)."""
    rows = [[0] * g.n for _ in range(g.n)]
    for x in range(g.n):
        row_x = rows[x]
        for y in range(x + 1, g.n):
            d = _distance(g.adj, x, y)
            row_x[y] = d
            rows[y][x] = d
    return tuple(tuple(row) for row in rows)


def distance_histogram(g: Graph, s: VertexSet | None = None) -> Counter:
    """Number of unordered pairs (inside ``s`` when given) at each distance value."""
    table = distance_table(g)
    members = list(range(g.n)) if s is None else s.vertices()
    if s is not None:
        g.check_subset(s)
    histogram: Counter = Counter()
    for i, x in enumerate(members):
        row = table[x]
        for y in members[i + 1:]:
            histogram[row[y]] += 1
    return histogram


def max_pair_distance(g: Graph) -> int:
    table = distance_table(g)
    return max((max(row) for row in table), default=0)


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Dense 0/1 adjacency as ``int32`` for batched degree counts."""
    matrix = np.zeros((g.n, g.n), dtype=np.int32)
    width = (g.n + 7) // 8
    for v, row in enumerate(g.adj):
        bits = np.unpackbits(np.frombuffer(row.to_bytes(width, "little"), dtype=np.uint8), bitorder="little")
        matrix[v] = bits[: g.n]
    return matrix
